#ifndef CRSYM_POLY_HPP
#define CRSYM_POLY_HPP

#include <string>
#include <vector>

#include "crsym/monomial.hpp"
#include "crsym/rational.hpp"

namespace crsym {

struct Term {
    Monomial mono;
    Gauss coef;
};

/// Sparse exact polynomial over the Gaussian rationals in
/// z1, z2, zb1, zb2, u, w.  Terms are kept in canonical form: descending
/// graded-lex order, no zero coefficients, no duplicate monomials.
///
/// The subrings used throughout (holomorphic polynomials, real
/// polynomials) are the same carrier with extra invariants; see
/// is_holomorphic() / is_real().
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(Gauss c);
    static Poly variable(Var v, int32_t k = 1);
    static Poly monomial(const Monomial& m, Gauss c);
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Poly from_terms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Canonical leading term (largest monomial); polynomial must be nonzero.
    const Term& leading() const;

    Gauss coeff(const Monomial& m) const;

    bool is_constant() const;
    /// No zb1/zb2/u; w allowed only when allow_w.
    bool is_holomorphic(bool allow_w = false) const;
    /// Invariant of real polynomials: coefficient of (alpha,beta,l) is the
    /// conjugate of the coefficient of (beta,alpha,l); w-free.
    bool is_real() const;
    bool depends_on(Var v) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

    Poly scaled(const Gauss& c) const;
    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Bar operation: swaps z with zb per monomial and conjugates
    /// coefficients.  Involutive ring anti-automorphism fixing real
    /// polynomials (it is an automorphism here since the ring is
    /// commutative).
    Poly conjugate() const;

    /// (p + conj p)/2; rejects w-dependent input.
    Poly re_part() const;
    /// (p - conj p)/(2i); rejects w-dependent input.
    Poly im_part() const;

    /// Formal partial derivative.
    Poly partial(Var v) const;

    /// Exact quotient; throws Errc::not_divisible / division_by_zero.
    Poly exact_div(const Poly& q) const;

    /// Sum of all terms whose z-part or zb-part is empty (h + conj h
    /// blocks, u-powers and constants included).
    Poly pluriharmonic_part() const;
    bool is_pluriharmonic_free() const { return pluriharmonic_part().is_zero(); }

    /// Divides by the leading coefficient; nonzero input.
    Poly monic() const;

    /// Canonical text rendering, terms in canonical (descending) order.
    std::string str() const;

private:
    std::vector<Term> terms_;

    void normalize();
};

inline Poly operator*(const Gauss& c, const Poly& p) { return p.scaled(c); }

/// GCD in the six-variable polynomial ring over the Gaussian rationals,
/// normalized to leading coefficient 1.  Throws Errc::both_zero.
Poly mixed_gcd(const Poly& p, const Poly& q);

} // namespace crsym

#endif
