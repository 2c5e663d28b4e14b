#ifndef CRSYM_SOLVER_HPP
#define CRSYM_SOLVER_HPP

#include <vector>

#include "crsym/fields.hpp"
#include "crsym/linalg.hpp"

namespace crsym {

/// One graded piece of the rigid part of aut(M_P, 0): an exact real
/// basis of the rigid fields of weight mu tangent to the model.
struct ComponentBasis {
    Rat mu;
    std::vector<VectorField> basis;
    int dim_real = 0;
};

/// Full solver output for one model: shifts, rigid rotations and the
/// generalized-rotation component, plus the two universal members.
struct AutReport {
    Model model;
    std::vector<ComponentBasis> components; // ordered by mu, nonzero only
    bool w_tangent = false;                 // d/dw
    bool euler_tangent = false;             // weighted Euler field
    int dim_g_c = 0;                        // sum of dims over mu in (0,1)

    std::vector<const ComponentBasis*> generalized_rotations() const;
};

/// All holomorphic z-monomials of weighted degree exactly kappa, in
/// canonical (descending) order.  Empty for infeasible kappa.
std::vector<Monomial> monomial_basis(const Weight& w, const Rat& kappa);

/// Candidate field weights in (0,1): multiples of 1/D (D the lcm of the
/// weight denominators) for which at least one coefficient space is
/// nonempty; ascending.
std::vector<Rat> candidate_weights(const Model& m);

/// Exact kernel of the tangency condition over the rigid ansatz of
/// weight mu: f1, f2, g run over the monomial spaces at mu+l1, mu+l2,
/// mu+1 with independent real and imaginary rational unknowns.  The
/// returned basis is echelon-normalized and deterministic; an empty
/// basis is a valid result.
ComponentBasis solve_rigid_weight(const Model& m, const Rat& mu);

/// Runs solve_rigid_weight over the shift weights, weight zero and all
/// candidate weights; checks the universal members.
AutReport compute_g_c(const Model& m);

} // namespace crsym

#endif
