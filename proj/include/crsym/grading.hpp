#ifndef CRSYM_GRADING_HPP
#define CRSYM_GRADING_HPP

#include <optional>
#include <string>
#include <vector>

#include "crsym/poly.hpp"

namespace crsym {

/// Multitype weight pair (l1, l2) with 0 <= l2 <= l1 <= 1/2.
/// w, u carry weight one.
struct Weight {
    Rat l1, l2;

    bool satisfies_bounds() const {
        return l2 >= 0 && l1 >= l2 && l1 <= rat(1, 2);
    }

    bool operator==(const Weight& o) const { return l1 == o.l1 && l2 == o.l2; }

    /// "p/q,r/s"
    std::string str() const { return rat_str(l1) + "," + rat_str(l2); }
};

Weight weight_parse(const std::string& s);

/// (m1, m2) with m_j = 1/l_j; empty optional means infinite type.
struct MultitypeReport {
    Weight weight;
    std::optional<Rat> m1, m2;

    bool finite() const { return m1.has_value() && m2.has_value(); }
};

MultitypeReport multitype_report(const Weight& w);

/// Validated model hypersurface Im w = P(z, zb): P nonzero,
/// pluriharmonic-free, z-variables only, homogeneous of weighted degree
/// one for a weight of finite type.
struct Model {
    Poly poly;
    Weight weight;
    MultitypeReport multitype;
};

/// kappa = l + m + sum (a_i + b_i) l_i   (u and w both of weight one).
Rat weighted_degree(const Monomial& m, const Weight& w);

/// True iff every support monomial has weighted degree kappa.
bool is_homogeneous(const Poly& p, const Weight& w, const Rat& kappa);

/// Smallest weight (lexicographically, within the bound constraints)
/// making p homogeneous of weighted degree one in the given coordinates.
/// Throws Errc::not_homogenizable when no such weight exists.
Weight support_minimal_weight(const Poly& p);

/// Checks all model invariants; computes the weight when absent.
/// Throws ZeroPolynomial, PluriharmonicTerms, NotHomogeneous,
/// InfiniteType, InvalidWeight, WIllegal.
Model validate_model(const Poly& p, const std::optional<Weight>& w = std::nullopt);

/// Splits P by the weighted degree of the holomorphic part of each term;
/// returned blocks are nonzero, degrees strictly ascending, and sum to P.
std::vector<std::pair<Rat, Poly>> bihomogeneous_expansion(const Model& m);

/// Weighted degree of the z-part of a monomial.
Rat holo_weighted_degree(const Monomial& m, const Weight& w);

} // namespace crsym

#endif
