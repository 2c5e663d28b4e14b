#ifndef CRSYM_EMBEDDING_HPP
#define CRSYM_EMBEDDING_HPP

#include "crsym/chains.hpp"

namespace crsym {

/// Hyperquadric embedding data built from a chain decomposition.
///
/// Target coordinates: eta plus one zeta_(j,k) and one zeta'_(j,k) per
/// chain element.  The hyperquadric is
///   Im eta = Re sum_j sum_k zeta_(j,k) * conj(zeta'_(j,N_j-k+1)),
/// the map sends eta = w, zeta_(j,k) = U_j^k, zeta'_(j,k) = V_j^k, and
/// the target carries the linear field
///   Z = sum c_(k-1,j) zeta_(j,k) d/dzeta_(j,k-1)
///     + sum d_(k-1,j) zeta'_(j,k) d/dzeta'_(j,k-1).
struct QuadricEmbedding {
    int ambient_dim = 0;              // 2 * sum N_j + 1, eta included
    std::vector<std::size_t> lengths; // N_j per pair
    // component polynomials, indexed [pair][k]
    std::vector<std::vector<Poly>> zeta;
    std::vector<std::vector<Poly>> zeta_prime;
    // Z constants, indexed [pair][k-2] for k = 2..N_j
    std::vector<std::vector<Gauss>> z_c;
    std::vector<std::vector<Gauss>> z_d;
};

QuadricEmbedding build_embedding(const Decomposition& d);

/// Exact identity P = Re sum_(j,k) U_j^k conj(V_j^(N_j-k+1)): the map
/// sends the model into the hyperquadric.
bool verify_maps_into(const QuadricEmbedding& e, const Model& m);

/// For every target coordinate, Y applied to its pullback equals the
/// pullback of Z of that coordinate (chain relations coordinate-wise).
bool verify_f_related(const QuadricEmbedding& e, const VectorField& y);

/// Z is tangent to the hyperquadric: with H the Hermitian matrix of the
/// pairing and A the matrix of Z, A^T H + H conj(A) = 0.  Reduces to the
/// constant symmetry c_j = -conj(d_(n-j)).
bool verify_quadric_symmetry(const QuadricEmbedding& e);

} // namespace crsym

#endif
