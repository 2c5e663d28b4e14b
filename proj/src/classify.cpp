#include "crsym/classify.hpp"

#include "crsym/solver.hpp"

namespace crsym {

const char* verdict_tag_name(VerdictTag t) {
    switch (t) {
        case VerdictTag::TwoJetDetermination: return "TWO_JET_DETERMINATION";
        case VerdictTag::HigherOrderPossible: return "HIGHER_ORDER_POSSIBLE";
        case VerdictTag::DegenerateInapplicable: return "DEGENERATE_INAPPLICABLE";
    }
    return "?";
}

DegeneracyResult is_holomorphically_degenerate(const Model& m) {
    DegeneracyResult out;
    Poly pz1 = m.poly.partial(Var::z1);
    Poly pz2 = m.poly.partial(Var::z2);

    if (pz1.is_zero()) {
        out.degenerate = true;
        out.witness = VectorField{Poly::constant(Gauss(1)), Poly::zero(), Poly::zero()};
        return out;
    }
    if (pz2.is_zero()) {
        out.degenerate = true;
        out.witness = VectorField{Poly::zero(), Poly::constant(Gauss(1)), Poly::zero()};
        return out;
    }

    Poly g = mixed_gcd(pz1, pz2);
    Poly num = pz1.exact_div(g);
    Poly den = pz2.exact_div(g);
    if (num.is_holomorphic() && den.is_holomorphic()) {
        out.degenerate = true;
        out.witness = VectorField{den, -num, Poly::zero()};
        if (!apply(*out.witness, m.poly).is_zero())
            throw Error(Errc::internal, "degeneracy witness does not annihilate P");
    }
    return out;
}

Verdict classify_two_jet(const Model& m) {
    Verdict v{VerdictTag::TwoJetDetermination, std::nullopt, std::nullopt};

    DegeneracyResult deg = is_holomorphically_degenerate(m);
    if (deg.degenerate) {
        v.tag = VerdictTag::DegenerateInapplicable;
        v.witness = deg.witness;
        return v;
    }

    AutReport report = compute_g_c(m);
    if (report.dim_g_c == 0) {
        v.tag = VerdictTag::TwoJetDetermination;
        return v;
    }
    v.tag = VerdictTag::HigherOrderPossible;
    const ComponentBasis* gc = report.generalized_rotations().front();
    v.witness = gc->basis.front();
    v.decomposition = extract_chains(m, gc->basis.front());
    return v;
}

} // namespace crsym
