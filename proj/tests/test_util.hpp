#ifndef CRSYM_TEST_UTIL_HPP
#define CRSYM_TEST_UTIL_HPP

#include <optional>
#include <string>

#include "crsym/corpus.hpp"
#include "crsym/parse.hpp"

namespace crsym::testutil {

inline Poly P(const std::string& s) { return parse_real_poly(s); }

inline VectorField F(const std::string& s) { return parse_field(s); }

inline Model M(const std::string& s) { return validate_model(parse_real_poly(s)); }

/// Random mixed polynomial with small exponents (not necessarily real).
inline Poly random_poly(Rng& rng, int max_terms = 5, bool allow_wu = false) {
    std::vector<Term> ts;
    const long terms = rng.range(1, max_terms);
    for (long k = 0; k < terms; ++k) {
        Monomial m;
        for (int v = 0; v < 4; ++v) m.e[v] = static_cast<int32_t>(rng.range(0, 3));
        if (allow_wu) {
            m.e[4] = static_cast<int32_t>(rng.range(0, 1));
            m.e[5] = static_cast<int32_t>(rng.range(0, 1));
        }
        ts.push_back({m, random_nonzero_gauss(rng)});
    }
    return Poly::from_terms(std::move(ts));
}

/// Random real polynomial: q + conj(q).
inline Poly random_real_poly(Rng& rng, int max_terms = 4) {
    Poly q = random_poly(rng, max_terms);
    return q + q.conjugate();
}

/// Random field with z- and w-dependent holomorphic coefficients.
inline VectorField random_field(Rng& rng, int max_terms = 3) {
    auto holo = [&]() {
        std::vector<Term> ts;
        const long terms = rng.range(0, max_terms);
        for (long k = 0; k < terms; ++k) {
            Monomial m;
            m.e[0] = static_cast<int32_t>(rng.range(0, 2));
            m.e[1] = static_cast<int32_t>(rng.range(0, 2));
            m.e[5] = static_cast<int32_t>(rng.range(0, 1));
            ts.push_back({m, random_nonzero_gauss(rng)});
        }
        return Poly::from_terms(std::move(ts));
    };
    return VectorField{holo(), holo(), holo()};
}

/// Scalar s with y == s * x, when it exists and is real rational.
inline std::optional<Rat> real_ratio(const VectorField& x, const VectorField& y) {
    const Poly* px[3] = {&x.f1, &x.f2, &x.g};
    const Poly* py[3] = {&y.f1, &y.f2, &y.g};
    for (int k = 0; k < 3; ++k) {
        if (px[k]->is_zero()) continue;
        Gauss cx = px[k]->leading().coef;
        Gauss cy = py[k]->coeff(px[k]->leading().mono);
        Gauss s = cy / cx;
        if (s.im != 0) return std::nullopt;
        if (y.f1 == x.f1.scaled(s) && y.f2 == x.f2.scaled(s) && y.g == x.g.scaled(s))
            return s.re;
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace crsym::testutil

#endif
