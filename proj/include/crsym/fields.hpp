#ifndef CRSYM_FIELDS_HPP
#define CRSYM_FIELDS_HPP

#include <string>

#include "crsym/grading.hpp"

namespace crsym {

/// Holomorphic polynomial vector field f1*d/dz1 + f2*d/dz2 + g*d/dw.
/// Coefficients are polynomials in z1, z2 and possibly w (never zb or u).
struct VectorField {
    Poly f1, f2, g;

    bool is_zero() const { return f1.is_zero() && f2.is_zero() && g.is_zero(); }

    VectorField operator+(const VectorField& o) const {
        return {f1 + o.f1, f2 + o.f2, g + o.g};
    }
    VectorField operator-(const VectorField& o) const {
        return {f1 - o.f1, f2 - o.f2, g - o.g};
    }
    VectorField scaled(const Gauss& c) const {
        return {f1.scaled(c), f2.scaled(c), g.scaled(c)};
    }
    bool operator==(const VectorField& o) const {
        return f1 == o.f1 && f2 == o.f2 && g == o.g;
    }

    /// "(f1)*d/dz1 + (f2)*d/dz2 + (g)*d/dw"
    std::string str() const;
};

enum class FieldClass {
    Shift,
    Rotation,
    GeneralizedRotation,
    NegativeNonrigid,
    Other,
};

const char* field_class_name(FieldClass c);

/// X(q) = f1*dq/dz1 + f2*dq/dz2 + g*dq/dw.
Poly apply(const VectorField& x, const Poly& q);

/// True iff no coefficient involves w.
bool is_rigid(const VectorField& x);

/// Common weighted degree of the field: monomials of f_j contribute
/// (their degree) - l_j, monomials of g contribute (their degree) - 1.
/// Throws ZeroField / NotHomogeneous.
Rat field_weight(const VectorField& x, const Weight& w);

/// mu1*z1*d/dz1 + mu2*z2*d/dz2 + w*d/dw.
VectorField euler_field(const Weight& w);

/// Im(g) - 2*Re(f1*dP/dz1 + f2*dP/dz2) for a rigid field; identically
/// zero exactly when the field is an infinitesimal CR automorphism of
/// the model.  Throws NonRigidInput.
Poly tangency_residual(const VectorField& x, const Model& m);

/// Lie bracket [x, y].
VectorField bracket(const VectorField& x, const VectorField& y);

/// Shift / rotation / generalized rotation taxonomy for weighted
/// homogeneous fields; propagates NotHomogeneous.
FieldClass classify_field(const VectorField& x, const Weight& w);

/// Exact Euler identity l1*z1*P_z1 + l2*z2*P_z2 + conj = P; this is the
/// tangency statement for the (non-rigid) Euler field on a model.
bool euler_tangency_holds(const Model& m);

} // namespace crsym

#endif
