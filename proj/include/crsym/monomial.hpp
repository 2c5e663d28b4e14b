#ifndef CRSYM_MONOMIAL_HPP
#define CRSYM_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

namespace crsym {

/// The six variables of the ambient ring: z1, z2, their conjugates,
/// the real part u of w, and w itself.
enum class Var : int { z1 = 0, z2 = 1, zb1 = 2, zb2 = 3, u = 4, w = 5 };

constexpr int kNumVars = 6;

const char* var_name(Var v);

/// Exponent vector (z1, z2, zb1, zb2, u, w); all exponents nonnegative.
struct Monomial {
    std::array<int32_t, kNumVars> e{0, 0, 0, 0, 0, 0};

    static Monomial one() { return Monomial{}; }
    static Monomial var(Var v, int32_t k = 1) {
        Monomial m;
        m.e[static_cast<int>(v)] = k;
        return m;
    }

    int32_t exp(Var v) const { return e[static_cast<int>(v)]; }
    int32_t& exp(Var v) { return e[static_cast<int>(v)]; }

    int32_t total_degree() const {
        int32_t t = 0;
        for (int32_t x : e) t += x;
        return t;
    }

    bool is_one() const { return total_degree() == 0; }

    /// Swaps z-exponents with zb-exponents; u and w are untouched.
    Monomial conjugate() const {
        Monomial m = *this;
        std::swap(m.e[0], m.e[2]);
        std::swap(m.e[1], m.e[3]);
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int k = 0; k < kNumVars; ++k) m.e[k] = e[k] + o.e[k];
        return m;
    }

    bool divides(const Monomial& o) const {
        for (int k = 0; k < kNumVars; ++k)
            if (e[k] > o.e[k]) return false;
        return true;
    }

    /// Quotient; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial m;
        for (int k = 0; k < kNumVars; ++k) m.e[k] = e[k] - o.e[k];
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    /// "z1^2*zb2" etc.; "1" for the empty monomial.
    std::string str() const;
};

/// Canonical term order: graded (total degree), then lexicographic on
/// (z1, z2, zb1, zb2, u, w).  Returns <0, 0, >0.
int mono_cmp(const Monomial& a, const Monomial& b);

inline bool mono_less(const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b) < 0;
}

/// Comparator putting the canonical leading monomial first.
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b) > 0;
    }
};

} // namespace crsym

#endif
