#ifndef CRSYM_CHAINS_HPP
#define CRSYM_CHAINS_HPP

#include <vector>

#include "crsym/fields.hpp"

namespace crsym {

/// Y-chain: nonzero holomorphic polynomials U^1..U^n with
/// Y(U^j) = c_j U^(j+1) and Y(U^n) = 0; the c_j are nonzero constants.
struct Chain {
    std::vector<Poly> polys;
    std::vector<Gauss> consts; // size = polys.size() - 1

    std::size_t length() const { return polys.size(); }
};

/// Two chains of equal length n whose constants satisfy the symmetry
/// c_j = -conj(d_(n-j)); the associated real block is
/// T = Re sum_k U^k * conj(V^(n-k+1)).
struct ChainPair {
    Chain u, v;
    std::vector<Rat> u_degrees; // weighted degrees of the U elements

    std::size_t length() const { return u.length(); }

    /// The block T as an exact real polynomial.
    Poly block() const;
};

/// P = sum of pair blocks, each pair a symmetric pair of Y-chains for
/// the common rotation field.
struct Decomposition {
    std::vector<ChainPair> pairs;
    VectorField rotation;

    Poly total() const;
};

/// Nested kernels V_n = {X : Y^n(X) = 0} inside the holomorphic
/// monomial space of one weighted degree, with adapted bases: the last
/// basis element realizes the maximal height h_n of V_n exactly
/// (Y^h_n kills it, Y^(h_n - 1) does not) and the other dim - 1
/// elements are killed by Y^(h_n - 1).  Because the kernel of Y in
/// each degree is at most a line, h_n and dim V_n agree whenever the
/// filtration grows one string; they can differ in general, so the
/// height is tracked separately.
struct FiltrationLevel {
    int n = 0;
    int dim = 0;
    int height = 0; // maximal height inside V_n; height <= n
    std::vector<Poly> adapted_basis;
};

struct KernelFiltration {
    VectorField operator_field;
    Rat degree;
    std::vector<FiltrationLevel> levels;
};

/// Computes V_1..V_depth for a rigid z-only field of positive weight.
/// Throws NotPositiveWeight.
KernelFiltration kernel_filtration(const VectorField& y, const Weight& w,
                                   const Rat& kappa, int depth);

/// Decomposes the model polynomial into symmetric chain pairs for a
/// generalized rotation y, by peeling the lowest bihomogeneous block:
/// rank-one factorization, forward orbit for the U-chain, exact linear
/// solve for the V-chain start.  V-chain elements are normalized monic;
/// U absorbs the scalings.  Throws NotARotation, RankExceedsOne,
/// NonTerminating, DegenerateModel.
Decomposition extract_chains(const Model& m, const VectorField& y);

/// Checks the chain relations and the constant symmetry exactly.
bool verify_pair(const VectorField& y, const ChainPair& pair);

/// Builds the model with P = sum of pair blocks.  Throws DegreeMismatch,
/// PluriharmonicResult, ZeroResult.
Model synthesize_model(const std::vector<ChainPair>& pairs, const Weight& w);

/// Reconstructs the rotation field from a chain of length >= 2:
/// Y = a * (-dU^N/dz2 * d/dz1 + dU^N/dz1 * d/dz2) with the polynomial
/// factor a = -c_(N-1) * U^N / Jac(U^(N-1), U^N).  Throws ZeroJacobian,
/// NotDivisible.
VectorField recover_rotation(const Decomposition& d);

} // namespace crsym

#endif
