#ifndef CRSYM_CLASSIFY_HPP
#define CRSYM_CLASSIFY_HPP

#include <optional>

#include "crsym/chains.hpp"

namespace crsym {

struct DegeneracyResult {
    bool degenerate = false;
    /// A nonzero z-field annihilating P, when degenerate.
    std::optional<VectorField> witness;
};

/// Tests for a nonzero holomorphic z-field f1*d/dz1 + f2*d/dz2 with
/// f1*P_z1 + f2*P_z2 = 0, via exact reduction of the partials by their
/// gcd: the fraction P_z1/P_z2 in lowest terms is zb-free exactly when
/// such a field exists, and then (den)*d/dz1 - (num)*d/dz2 is a witness.
DegeneracyResult is_holomorphically_degenerate(const Model& m);

enum class VerdictTag {
    TwoJetDetermination,
    HigherOrderPossible,
    DegenerateInapplicable,
};

const char* verdict_tag_name(VerdictTag t);

struct Verdict {
    VerdictTag tag;
    /// Degeneracy witness, or a generalized-rotation basis element.
    std::optional<VectorField> witness;
    /// Chain decomposition, for the higher-order case.
    std::optional<Decomposition> decomposition;
};

/// Degenerate models are inapplicable; otherwise dim g_c = 0 means every
/// smooth hypersurface with this model has 2-jet determination, and
/// dim g_c >= 1 exhibits the nonlinear symmetry with its chains.
Verdict classify_two_jet(const Model& m);

} // namespace crsym

#endif
