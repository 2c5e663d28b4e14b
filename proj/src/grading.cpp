#include "crsym/grading.hpp"

#include <algorithm>
#include <map>

namespace crsym {

Weight weight_parse(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(Errc::malformed_input, "weight must be \"p/q,r/s\": " + s);
    auto trim = [](std::string t) {
        t.erase(0, t.find_first_not_of(" \t"));
        auto e = t.find_last_not_of(" \t");
        if (e != std::string::npos) t.erase(e + 1);
        return t;
    };
    Weight w{rat_parse(trim(s.substr(0, comma))), rat_parse(trim(s.substr(comma + 1)))};
    return w;
}

MultitypeReport multitype_report(const Weight& w) {
    MultitypeReport r;
    r.weight = w;
    if (w.l1 != 0) r.m1 = Rat(1) / w.l1;
    if (w.l2 != 0) r.m2 = Rat(1) / w.l2;
    return r;
}

Rat weighted_degree(const Monomial& m, const Weight& w) {
    Rat k = rat(m.exp(Var::u) + m.exp(Var::w));
    k += w.l1 * rat(m.exp(Var::z1) + m.exp(Var::zb1));
    k += w.l2 * rat(m.exp(Var::z2) + m.exp(Var::zb2));
    return k;
}

Rat holo_weighted_degree(const Monomial& m, const Weight& w) {
    return w.l1 * rat(m.exp(Var::z1)) + w.l2 * rat(m.exp(Var::z2));
}

bool is_homogeneous(const Poly& p, const Weight& w, const Rat& kappa) {
    for (const Term& t : p.terms())
        if (weighted_degree(t.mono, w) != kappa) return false;
    return true;
}

Weight support_minimal_weight(const Poly& p) {
    if (p.is_zero())
        throw Error(Errc::zero_polynomial, "weight of the zero polynomial");
    if (p.depends_on(Var::u) || p.depends_on(Var::w))
        throw Error(Errc::w_illegal, "weight search expects a polynomial in z only");
    if (!p.is_pluriharmonic_free())
        throw Error(Errc::pluriharmonic_terms,
                    "weight search expects a pluriharmonic-free polynomial");

    // Each support monomial imposes p*l1 + q*l2 = 1 with
    // p = a1 + b1, q = a2 + b2.  Collect distinct constraints.
    std::vector<std::pair<long, long>> cons;
    for (const Term& t : p.terms()) {
        long cp = t.mono.exp(Var::z1) + t.mono.exp(Var::zb1);
        long cq = t.mono.exp(Var::z2) + t.mono.exp(Var::zb2);
        if (std::find(cons.begin(), cons.end(), std::make_pair(cp, cq)) == cons.end())
            cons.emplace_back(cp, cq);
    }

    auto feasible = [&](const Weight& w) {
        if (!w.satisfies_bounds()) return false;
        for (auto [cp, cq] : cons)
            if (w.l1 * rat(cp) + w.l2 * rat(cq) != 1) return false;
        return true;
    };
    auto fail = []() -> Weight {
        throw Error(Errc::not_homogenizable,
                    "no admissible weight makes the polynomial homogeneous of degree one");
    };

    // Look for two independent constraints.
    for (std::size_t i = 0; i < cons.size(); ++i) {
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            long det = cons[i].first * cons[j].second - cons[j].first * cons[i].second;
            if (det == 0) continue;
            Rat l1 = rat(cons[j].second - cons[i].second, det);
            Rat l2 = rat(cons[i].first - cons[j].first, det);
            Weight w{l1, l2};
            if (!feasible(w)) fail();
            return w;
        }
    }

    // All constraints are the same line p*l1 + q*l2 = 1 (distinct parallel
    // lines with unit right-hand side cannot coexist); minimize l1 on it.
    auto [cp, cq] = cons.front();
    for (auto [op, oq] : cons)
        if (op != cp || oq != cq) fail();
    Weight w;
    if (cp == 0) {
        // q*l2 = 1, l1 free in [l2, 1/2]
        if (cq == 0) fail();
        w.l2 = rat(1, cq);
        w.l1 = w.l2;
    } else if (cq == 0) {
        // p*l1 = 1, l2 free in [0, l1]
        w.l1 = rat(1, cp);
        w.l2 = 0;
    } else {
        // smallest l1 on the segment is at l1 = l2
        w.l1 = rat(1, cp + cq);
        w.l2 = w.l1;
    }
    if (!feasible(w)) fail();
    return w;
}

Model validate_model(const Poly& p, const std::optional<Weight>& w) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "model polynomial is zero");
    if (p.depends_on(Var::u) || p.depends_on(Var::w))
        throw Error(Errc::w_illegal, "model polynomial must involve z variables only");
    if (!p.is_real())
        throw Error(Errc::not_real, "model polynomial is not real-valued");
    if (!p.is_pluriharmonic_free())
        throw Error(Errc::pluriharmonic_terms, "model polynomial has pluriharmonic terms");

    Weight weight;
    if (w.has_value()) {
        weight = *w;
        if (!weight.satisfies_bounds())
            throw Error(Errc::invalid_weight,
                        "weight must satisfy 0 <= l2 <= l1 <= 1/2");
        if (!is_homogeneous(p, weight, Rat(1)))
            throw Error(Errc::not_homogeneous,
                        "polynomial is not homogeneous of weighted degree one for the given weight");
    } else {
        weight = support_minimal_weight(p);
    }
    if (weight.l2 == 0)
        throw Error(Errc::infinite_type, "model has infinite multitype (l2 = 0)");

    return Model{p, weight, multitype_report(weight)};
}

std::vector<std::pair<Rat, Poly>> bihomogeneous_expansion(const Model& m) {
    std::map<Rat, std::vector<Term>> blocks;
    for (const Term& t : m.poly.terms())
        blocks[holo_weighted_degree(t.mono, m.weight)].push_back(t);
    std::vector<std::pair<Rat, Poly>> out;
    out.reserve(blocks.size());
    for (auto& [deg, ts] : blocks)
        out.emplace_back(deg, Poly::from_terms(std::move(ts)));
    return out;
}

} // namespace crsym
