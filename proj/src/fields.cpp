#include "crsym/fields.hpp"

#include <optional>

namespace crsym {

std::string VectorField::str() const {
    return "(" + f1.str() + ")*d/dz1 + (" + f2.str() + ")*d/dz2 + (" + g.str() + ")*d/dw";
}

const char* field_class_name(FieldClass c) {
    switch (c) {
        case FieldClass::Shift: return "SHIFT";
        case FieldClass::Rotation: return "ROTATION";
        case FieldClass::GeneralizedRotation: return "GENERALIZED_ROTATION";
        case FieldClass::NegativeNonrigid: return "NEGATIVE_NONRIGID";
        case FieldClass::Other: return "OTHER";
    }
    return "?";
}

Poly apply(const VectorField& x, const Poly& q) {
    return x.f1 * q.partial(Var::z1) + x.f2 * q.partial(Var::z2) + x.g * q.partial(Var::w);
}

bool is_rigid(const VectorField& x) {
    return !x.f1.depends_on(Var::w) && !x.f2.depends_on(Var::w) && !x.g.depends_on(Var::w);
}

Rat field_weight(const VectorField& x, const Weight& w) {
    if (x.is_zero()) throw Error(Errc::zero_field, "weight of the zero field");
    std::optional<Rat> mu;
    auto feed = [&](const Poly& p, const Rat& var_weight) {
        for (const Term& t : p.terms()) {
            Rat c = weighted_degree(t.mono, w) - var_weight;
            if (!mu)
                mu = c;
            else if (*mu != c)
                throw Error(Errc::not_homogeneous, "field is not weighted homogeneous");
        }
    };
    feed(x.f1, w.l1);
    feed(x.f2, w.l2);
    feed(x.g, Rat(1));
    return *mu;
}

VectorField euler_field(const Weight& w) {
    return {Poly::variable(Var::z1).scaled(Gauss(w.l1)),
            Poly::variable(Var::z2).scaled(Gauss(w.l2)),
            Poly::variable(Var::w)};
}

Poly tangency_residual(const VectorField& x, const Model& m) {
    if (!is_rigid(x))
        throw Error(Errc::non_rigid_input, "tangency residual requires a rigid field");
    Poly drift = x.f1 * m.poly.partial(Var::z1) + x.f2 * m.poly.partial(Var::z2);
    return x.g.im_part() - Gauss(2) * drift.re_part();
}

VectorField bracket(const VectorField& x, const VectorField& y) {
    return {apply(x, y.f1) - apply(y, x.f1),
            apply(x, y.f2) - apply(y, x.f2),
            apply(x, y.g) - apply(y, x.g)};
}

FieldClass classify_field(const VectorField& x, const Weight& w) {
    Rat mu = field_weight(x, w);
    if (is_rigid(x)) {
        if (mu < 0) return FieldClass::Shift;
        if (mu == 0) return FieldClass::Rotation;
        return FieldClass::GeneralizedRotation;
    }
    return mu < 0 ? FieldClass::NegativeNonrigid : FieldClass::Other;
}

bool euler_tangency_holds(const Model& m) {
    Poly ez = Poly::variable(Var::z1).scaled(Gauss(m.weight.l1)) * m.poly.partial(Var::z1) +
              Poly::variable(Var::z2).scaled(Gauss(m.weight.l2)) * m.poly.partial(Var::z2);
    return ez + ez.conjugate() == m.poly;
}

} // namespace crsym
