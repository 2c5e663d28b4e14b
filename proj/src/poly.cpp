#include "crsym/poly.hpp"

#include <algorithm>
#include <map>

#include "crsym/errors.hpp"

namespace crsym {

const char* var_name(Var v) {
    switch (v) {
        case Var::z1: return "z1";
        case Var::z2: return "z2";
        case Var::zb1: return "zb1";
        case Var::zb2: return "zb2";
        case Var::u: return "u";
        case Var::w: return "w";
    }
    return "?";
}

int mono_cmp(const Monomial& a, const Monomial& b) {
    int32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int k = 0; k < kNumVars; ++k) {
        if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? -1 : 1;
    }
    return 0;
}

std::string Monomial::str() const {
    std::string s;
    for (int k = 0; k < kNumVars; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(k));
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return mono_cmp(x.mono, y.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coef.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

Poly Poly::constant(Gauss c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Poly Poly::variable(Var v, int32_t k) {
    Poly p;
    p.terms_.push_back({Monomial::var(v, k), Gauss(1)});
    return p;
}

Poly Poly::monomial(const Monomial& m, Gauss c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw Error(Errc::internal, "leading term of zero polynomial");
    return terms_.front();
}

Gauss Poly::coeff(const Monomial& m) const {
    // terms_ descending; binary search
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                   return mono_cmp(t.mono, key) > 0;
                               });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return Gauss();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_holomorphic(bool allow_w) const {
    for (const Term& t : terms_) {
        if (t.mono.exp(Var::zb1) || t.mono.exp(Var::zb2) || t.mono.exp(Var::u))
            return false;
        if (!allow_w && t.mono.exp(Var::w)) return false;
    }
    return true;
}

bool Poly::is_real() const { return !depends_on(Var::w) && *this == conjugate(); }

bool Poly::depends_on(Var v) const {
    for (const Term& t : terms_)
        if (t.mono.exp(v)) return true;
    return false;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (Term& t : p.terms_) t.coef = -t.coef;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    // merge of two canonically sorted term lists
    Poly p;
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Gauss s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) p.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) p.terms_.push_back(o.terms_[j++]);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    std::map<Monomial, Gauss, MonoGreater> acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.try_emplace(m, Gauss());
            it->second += a.coef * b.coef;
        }
    }
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Poly Poly::scaled(const Gauss& c) const {
    if (c.is_zero()) return Poly();
    Poly p = *this;
    for (Term& t : p.terms_) t.coef *= c;
    return p;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::constant(Gauss(1));
    Poly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].mono != o.terms_[k].mono || terms_[k].coef != o.terms_[k].coef)
            return false;
    return true;
}

Poly Poly::conjugate() const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_) ts.push_back({t.mono.conjugate(), t.coef.conj()});
    return Poly::from_terms(std::move(ts));
}

Poly Poly::re_part() const {
    if (depends_on(Var::w))
        throw Error(Errc::malformed_input, "re_part of a w-dependent polynomial");
    return (*this + conjugate()).scaled(Gauss(rat(1, 2)));
}

Poly Poly::im_part() const {
    if (depends_on(Var::w))
        throw Error(Errc::malformed_input, "im_part of a w-dependent polynomial");
    return (*this - conjugate()).scaled(Gauss(rat(0), rat(-1, 2)));
}

Poly Poly::partial(Var v) const {
    std::vector<Term> ts;
    for (const Term& t : terms_) {
        int32_t k = t.mono.exp(v);
        if (k == 0) continue;
        Monomial m = t.mono;
        m.exp(v) = k - 1;
        ts.push_back({m, t.coef * Gauss(k)});
    }
    return Poly::from_terms(std::move(ts));
}

Poly Poly::exact_div(const Poly& q) const {
    if (q.is_zero()) throw Error(Errc::division_by_zero, "division by zero polynomial");
    Poly rem = *this;
    std::vector<Term> quot;
    const Term& lq = q.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lq.mono.divides(lr.mono))
            throw Error(Errc::not_divisible, "polynomial division is not exact");
        Term t{lr.mono / lq.mono, lr.coef / lq.coef};
        rem = rem - q * Poly::monomial(t.mono, t.coef);
        quot.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(quot));
}

Poly Poly::pluriharmonic_part() const {
    std::vector<Term> ts;
    for (const Term& t : terms_) {
        bool z_free = t.mono.exp(Var::z1) == 0 && t.mono.exp(Var::z2) == 0;
        bool zb_free = t.mono.exp(Var::zb1) == 0 && t.mono.exp(Var::zb2) == 0;
        if (z_free || zb_free) ts.push_back(t);
    }
    return Poly::from_terms(std::move(ts));
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(Errc::internal, "monic of zero polynomial");
    return scaled(Gauss(1) / leading().coef);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : terms_) {
        const Gauss& c = t.coef;
        std::string body;
        bool neg = false;
        // coefficient piece
        std::string cs;
        if (c.is_real()) {
            Rat a = c.re;
            neg = a < 0;
            Rat mag = neg ? Rat(-a) : a;
            if (mag != 1 || t.mono.is_one()) cs = rat_str(mag);
        } else if (c.is_imaginary()) {
            Rat b = c.im;
            neg = b < 0;
            Rat mag = neg ? Rat(-b) : b;
            cs = (mag == 1) ? "i" : rat_str(mag) + "*i";
        } else {
            cs = "(" + c.str() + ")";
        }
        body = cs;
        if (!t.mono.is_one()) {
            if (!body.empty()) body += "*";
            body += t.mono.str();
        }
        if (first) {
            s += (neg ? "-" : "") + body;
            first = false;
        } else {
            s += (neg ? " - " : " + ") + body;
        }
    }
    return s;
}

namespace {

// Univariate view helpers for the recursive gcd.

int degree_in(const Poly& p, Var v) {
    int d = 0;
    for (const Term& t : p.terms()) d = std::max(d, static_cast<int>(t.mono.exp(v)));
    return d;
}

/// Coefficient of v^k, as a polynomial in the remaining variables.
Poly coeff_of(const Poly& p, Var v, int k) {
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
        if (t.mono.exp(v) != k) continue;
        Monomial m = t.mono;
        m.exp(v) = 0;
        ts.push_back({m, t.coef});
    }
    return Poly::from_terms(std::move(ts));
}

Poly shift_in(const Poly& p, Var v, int k) {
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
        Monomial m = t.mono;
        m.exp(v) += k;
        ts.push_back({m, t.coef});
    }
    return Poly::from_terms(std::move(ts));
}

/// Componentwise minimum of the support exponents.
Monomial monomial_content(const Poly& p) {
    Monomial m = p.leading().mono;
    for (const Term& t : p.terms())
        for (int k = 0; k < kNumVars; ++k) m.e[k] = std::min(m.e[k], t.mono.e[k]);
    return m;
}

/// Rescales by a positive rational so that every coefficient is a
/// Gaussian integer and the integer gcd of all parts is one.  Keeps the
/// coefficient growth of the PRS polynomial-sized, like the classical
/// primitive remainder sequence over the integers.
Poly scalar_normalized(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class l(1);
    for (const Term& t : p.terms()) {
        l = int_lcm(l, t.coef.re.get_den());
        l = int_lcm(l, t.coef.im.get_den());
    }
    mpz_class g(0);
    for (const Term& t : p.terms()) {
        for (const Rat* r : {&t.coef.re, &t.coef.im}) {
            if (*r == 0) continue;
            mpz_class num = r->get_num() * (l / r->get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
    }
    Rat s(l, g);
    s.canonicalize();
    return p.scaled(Gauss(s));
}

/// Strips the monomial content and normalizes the scalar content.  Both
/// only change the polynomial by a unit times a content, which the
/// primitive PRS quotients out anyway.
Poly cleaned(const Poly& p) {
    if (p.is_zero()) return p;
    Monomial m = monomial_content(p);
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const Term& t : p.terms()) ts.push_back({t.mono / m, t.coef});
    return scalar_normalized(Poly::from_terms(std::move(ts)));
}

/// gcd with zero/constant conventions of a field coefficient ring.
Poly gcd_rec(Poly a, Poly b);

Poly content_of(const Poly& p, Var v) {
    Poly c;
    for (int k = 0; k <= degree_in(p, v); ++k) {
        Poly ck = coeff_of(p, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? scalar_normalized(ck) : gcd_rec(c, ck);
        if (c.is_constant()) break;
    }
    return c.is_constant() ? Poly::constant(Gauss(1)) : c;
}

/// Pseudo-remainder of a by b in the variable v, with aggressive
/// content cleaning per step: the PRS below re-primitivizes anyway, so
/// the remainder is only needed up to a unit times a content.
Poly pseudo_rem(Poly a, const Poly& b, Var v) {
    const int db = degree_in(b, v);
    const Poly lb = coeff_of(b, v, db);
    while (!a.is_zero()) {
        int da = degree_in(a, v);
        if (da < db) break;
        Poly la = coeff_of(a, v, da);
        a = lb * a - shift_in(la * b, v, da - db);
        if (!a.is_zero()) a = cleaned(a);
    }
    return a;
}

bool divides(const Poly& d, const Poly& p) {
    try {
        p.exact_div(d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Poly gcd_rec(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();

    // split off the monomial contents first; their gcd is immediate
    Monomial ma = monomial_content(a), mb = monomial_content(b);
    Monomial mg;
    for (int k = 0; k < kNumVars; ++k) mg.e[k] = std::min(ma.e[k], mb.e[k]);
    a = scalar_normalized(a.exact_div(Poly::monomial(ma, Gauss(1))));
    b = scalar_normalized(b.exact_div(Poly::monomial(mb, Gauss(1))));
    const Poly mono_part = Poly::monomial(mg, Gauss(1));

    if (a.is_constant() || b.is_constant()) return mono_part.monic();
    if (divides(b, a)) return (mono_part * b).monic();
    if (divides(a, b)) return (mono_part * a).monic();

    // a variable occurring in only one operand cannot enter the gcd;
    // replace that operand by its content in the variable
    for (int k = 0; k < kNumVars; ++k) {
        Var v = static_cast<Var>(k);
        int da = degree_in(a, v), db = degree_in(b, v);
        if (da > 0 && db == 0) return (mono_part * gcd_rec(content_of(a, v), b)).monic();
        if (db > 0 && da == 0) return (mono_part * gcd_rec(a, content_of(b, v))).monic();
    }

    // main variable: smallest positive min-degree (fewest PRS steps)
    Var v = Var::z1;
    int best = -1;
    for (int k = 0; k < kNumVars; ++k) {
        Var cand = static_cast<Var>(k);
        int d = std::min(degree_in(a, cand), degree_in(b, cand));
        if (d > 0 && (best < 0 || d < best)) {
            best = d;
            v = cand;
        }
    }
    if (best < 0) return mono_part.monic(); // no common variable

    Poly ca = content_of(a, v), cb = content_of(b, v);
    Poly cont = gcd_rec(ca, cb);
    a = a.exact_div(ca);
    b = b.exact_div(cb);

    // primitive PRS in v
    if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = pseudo_rem(a, b, v);
        a = std::move(b);
        if (r.is_zero()) {
            b = Poly();
        } else {
            // the true gcd here is monomial-free, so stray monomial
            // factors of the remainder are spurious
            b = cleaned(r.exact_div(content_of(r, v)));
        }
    }
    if (degree_in(a, v) == 0) a = Poly::constant(Gauss(1));
    return (mono_part * cont * a).monic();
}

} // namespace

Poly mixed_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw Error(Errc::both_zero, "gcd of two zero polynomials");
    return gcd_rec(p, q);
}

} // namespace crsym
