#ifndef CRSYM_RATIONAL_HPP
#define CRSYM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "crsym/errors.hpp"

namespace crsym {

using Rat = mpq_class;

/// Canonicalized rational from a num/den pair.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p/q" etc.; throws Errc::malformed_input on garbage.
Rat rat_parse(const std::string& s);

/// Renders "p" or "p/q" (denominator omitted when 1).
std::string rat_str(const Rat& r);

bool rat_is_integer(const Rat& r);

/// Floor of a rational, as mpz.
mpz_class rat_floor(const Rat& r);

/// lcm of two positive integers.
mpz_class int_lcm(const mpz_class& a, const mpz_class& b);

/// Exact complex rational a + b*i.  The coefficient field for every
/// polynomial in this library; all arithmetic is exact.
struct Gauss {
    Rat re, im;

    Gauss() : re(0), im(0) {}
    Gauss(long r) : re(rat(r)), im(0) {}
    Gauss(Rat r) : re(std::move(r)), im(0) {}
    Gauss(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Gauss i() { return Gauss(rat(0), rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_imaginary() const { return re == 0 && im != 0; }

    Gauss conj() const { return Gauss(re, -im); }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss operator+(const Gauss& o) const { return Gauss(re + o.re, im + o.im); }
    Gauss operator-(const Gauss& o) const { return Gauss(re - o.re, im - o.im); }
    Gauss operator*(const Gauss& o) const {
        return Gauss(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gauss operator/(const Gauss& o) const;

    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o) { *this = *this * o; return *this; }

    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gauss& o) const { return !(*this == o); }

    /// Renders "a/b", "c/d*i", "i", "-i" or "a/b+c/d*i" / "a/b-c/d*i".
    std::string str() const;
};

/// Parses the output of Gauss::str(); throws Errc::malformed_input.
Gauss gauss_parse(const std::string& s);

} // namespace crsym

#endif
