#include "crsym/corpus.hpp"

#include <algorithm>

#include "crsym/classify.hpp"

namespace crsym {

Gauss random_nonzero_gauss(Rng& rng) {
    for (;;) {
        long re_num = rng.range(-3, 3);
        long im_num = rng.range(-3, 3);
        if (re_num == 0 && im_num == 0) continue;
        long re_den = rng.range(1, 2);
        long im_den = rng.range(1, 2);
        return Gauss(rat(re_num, re_den), rat(im_num, im_den));
    }
}

namespace {

Monomial z_mono(long a, long b) {
    Monomial m;
    m.exp(Var::z1) = static_cast<int32_t>(a);
    m.exp(Var::z2) = static_cast<int32_t>(b);
    return m;
}

/// Shift-family chain data: U^j = gamma_j z1^(N-j) z2^(bu+(j-1)t).
struct ShiftParams {
    long t = 2; // z2-power of the rotation coefficient
    long n = 2; // chain length
    long bu = 0, bv = 0;
};

VectorField shift_rotation(long t, const Gauss& kappa) {
    return VectorField{Poly::monomial(z_mono(0, t), kappa), Poly::zero(), Poly::zero()};
}

/// Builds the symmetric pair from freely drawn constants; the chain
/// relations then hold by construction.
ChainPair build_shift_pair(const ShiftParams& p, const Gauss& kappa, Rng& rng) {
    const long n = p.n;
    std::vector<Gauss> c(n - 1), d(n - 1);
    for (long j = 0; j < n - 1; ++j) c[j] = random_nonzero_gauss(rng);
    for (long j = 0; j < n - 1; ++j) d[j] = -c[n - 2 - j].conj();

    auto make_chain = [&](long base, const std::vector<Gauss>& consts, Rng& r) {
        Chain ch;
        Gauss coef = random_nonzero_gauss(r);
        for (long j = 1; j <= n; ++j) {
            ch.polys.push_back(Poly::monomial(z_mono(n - j, base + (j - 1) * p.t), coef));
            if (j < n) {
                // Y(U^j) = coef*(n-j)*kappa * next monomial = c_j U^(j+1)
                coef = coef * Gauss(rat(n - j)) * kappa / consts[j - 1];
            }
        }
        ch.consts = consts;
        return ch;
    };
    ChainPair pair;
    pair.u = make_chain(p.bu, c, rng);
    pair.v = make_chain(p.bv, d, rng);
    return pair;
}

/// Triangular-family chain data: U^j = gamma_j z1^(n-l+j) z2^n.
struct TriParams {
    long l = 1; // chain length
    long m = 1, n = 1;
};

VectorField triangular_rotation() {
    return VectorField{Poly::monomial(z_mono(2, 0), Gauss(1)),
                       -Poly::monomial(z_mono(1, 1), Gauss(1)), Poly::zero()};
}

ChainPair build_triangular_pair(const TriParams& p, Rng& rng) {
    const long l = p.l;
    std::vector<Gauss> c(l - 1), d(l - 1);
    for (long j = 0; j < l - 1; ++j) c[j] = random_nonzero_gauss(rng);
    for (long j = 0; j < l - 1; ++j) d[j] = -c[l - 2 - j].conj();

    auto make_chain = [&](long top, const std::vector<Gauss>& consts, Rng& r) {
        Chain ch;
        Gauss coef = random_nonzero_gauss(r);
        for (long j = 1; j <= l; ++j) {
            ch.polys.push_back(Poly::monomial(z_mono(top - l + j, top), coef));
            if (j < l) {
                // Y(z1^a z2^b) = (a - b) z1^(a+1) z2^b with a = top-l+j, b = top
                coef = coef * Gauss(rat(j - l)) / consts[j - 1];
            }
        }
        ch.consts = consts;
        return ch;
    };
    ChainPair pair;
    pair.u = make_chain(p.n, c, rng);
    pair.v = make_chain(p.m, d, rng);
    return pair;
}

void attach_degrees(ChainPair& pair, const Weight& w) {
    pair.u_degrees.clear();
    for (const Poly& p : pair.u.polys)
        pair.u_degrees.push_back(holo_weighted_degree(p.leading().mono, w));
}

} // namespace

GeneratedPair random_chain_pair(const Weight& w, int length, const Rat& degree_budget,
                                uint64_t seed) {
    if (length < 1) throw Error(Errc::infeasible_budget, "chain length must be positive");
    Rng rng(seed);
    const long cap = std::max(1L, static_cast<long>(rat_floor(degree_budget).get_si()));
    const long n = length;

    // Enumerate admissible exponent data of both families for this weight.
    struct Candidate {
        PairFamily family;
        ShiftParams shift;
        TriParams tri;
    };
    std::vector<Candidate> cands;

    // shift family: l1*(n-1) + l2*(bu+bv+(n-1)t) = 1, rotation weight
    // t*l2 - l1 > 0
    for (long t = 1; t <= cap; ++t) {
        if (Rat(t) * w.l2 - w.l1 <= 0) continue;
        for (long bu = 0; bu <= cap; ++bu) {
            // solve for bv
            Rat need = Rat(1) - w.l1 * rat(n - 1) - w.l2 * rat(bu + (n - 1) * t);
            Rat bvq = need / w.l2;
            if (!rat_is_integer(bvq)) continue;
            long bv = static_cast<long>(bvq.get_num().get_si());
            if (bv < 0 || bv > cap) continue;
            if (n == 1 && (bu < 1 || bv < 1)) continue; // blocks must stay mixed
            Candidate c;
            c.family = PairFamily::Shift;
            c.shift = ShiftParams{t, n, bu, bv};
            cands.push_back(c);
        }
    }
    // triangular family: l1*(nn+mm-l+1) + l2*(nn+mm) = 1 with l <= mm <= nn
    for (long mm = n; mm <= cap; ++mm) {
        for (long nn = mm; nn <= cap; ++nn) {
            if (w.l1 * rat(nn + mm - n + 1) + w.l2 * rat(nn + mm) != 1) continue;
            Candidate c;
            c.family = PairFamily::Triangular;
            c.tri = TriParams{n, mm, nn};
            cands.push_back(c);
        }
    }
    if (cands.empty())
        throw Error(Errc::infeasible_budget,
                    "no chain pair of this length fits the weight within the budget");

    const Candidate& pick = cands[rng.below(cands.size())];
    GeneratedPair out;
    out.family = pick.family;
    if (pick.family == PairFamily::Shift) {
        Gauss kappa = random_nonzero_gauss(rng);
        out.rotation = shift_rotation(pick.shift.t, kappa);
        out.pair = build_shift_pair(pick.shift, kappa, rng);
    } else {
        out.rotation = triangular_rotation();
        out.pair = build_triangular_pair(pick.tri, rng);
    }
    attach_degrees(out.pair, w);
    return out;
}

CorpusFamily corpus_family_parse(const std::string& name) {
    if (name == "example-1.4" || name == "shift") return CorpusFamily::Shift;
    if (name == "example-3.5" || name == "triangular") return CorpusFamily::Triangular;
    if (name == "mixed") return CorpusFamily::Mixed;
    throw Error(Errc::malformed_input, "unknown corpus family: " + name);
}

const char* corpus_family_name(CorpusFamily f) {
    switch (f) {
        case CorpusFamily::Shift: return "example-1.4";
        case CorpusFamily::Triangular: return "example-3.5";
        case CorpusFamily::Mixed: return "mixed";
    }
    return "?";
}

namespace {

struct Attempt {
    std::vector<ChainPair> pairs;
    VectorField rotation;
    Weight weight;
    int pair_count = 0;
};

Attempt attempt_shift(Rng& rng) {
    Attempt a;
    // rotation and weight
    const long t = rng.range(2, 4);
    Gauss kappa = random_nonzero_gauss(rng);
    a.rotation = shift_rotation(t, kappa);

    const long d = rng.range((1 + t) + 1, 4 * (1 + t) + 6); // lcd of the weight
    a.weight = Weight{rat(1, d), rat(1, d)};

    // enumerate (n, bu, bv): (n-1)(1+t) + bu + bv = d, first pair n >= 2
    std::vector<ShiftParams> options;
    for (long n = 1; (n - 1) * (1 + t) <= d; ++n) {
        long rest = d - (n - 1) * (1 + t);
        for (long bu = 0; bu <= rest; ++bu) {
            long bv = rest - bu;
            if (n == 1 && (bu < 1 || bv < 1)) continue;
            if (bu > 6 || bv > 6) continue; // keep degrees small
            options.push_back(ShiftParams{t, n, bu, bv});
        }
    }
    std::vector<ShiftParams> multi;
    for (const ShiftParams& o : options)
        if (o.n >= 2) multi.push_back(o);
    if (multi.empty()) return a; // infeasible draw; caller retries

    const int pair_count = static_cast<int>(rng.range(1, 2));
    a.pairs.push_back(build_shift_pair(multi[rng.below(multi.size())], kappa, rng));
    for (int k = 1; k < pair_count && !options.empty(); ++k)
        a.pairs.push_back(build_shift_pair(options[rng.below(options.size())], kappa, rng));
    a.pair_count = static_cast<int>(a.pairs.size());
    for (ChainPair& p : a.pairs) attach_degrees(p, a.weight);
    return a;
}

Attempt attempt_triangular(Rng& rng) {
    Attempt a;
    a.rotation = triangular_rotation();

    const long d = rng.range(7, 23);
    a.weight = Weight{rat(1, d), rat(1, d)};

    // (l, m, n): 2(n+m) = d + l - 1, l <= m <= n
    std::vector<TriParams> options;
    for (long l = 1; l <= 6; ++l) {
        long s2 = d + l - 1;
        if (s2 % 2) continue;
        long s = s2 / 2; // n + m
        for (long m = l; 2 * m <= s; ++m) {
            long n = s - m;
            if (n < m || n > 8) continue;
            options.push_back(TriParams{l, m, n});
        }
    }
    std::vector<TriParams> multi;
    for (const TriParams& o : options)
        if (o.l >= 2) multi.push_back(o);
    if (multi.empty()) return a;

    const int pair_count = static_cast<int>(rng.range(1, 2));
    a.pairs.push_back(build_triangular_pair(multi[rng.below(multi.size())], rng));
    for (int k = 1; k < pair_count && !options.empty(); ++k)
        a.pairs.push_back(build_triangular_pair(options[rng.below(options.size())], rng));
    a.pair_count = static_cast<int>(a.pairs.size());
    for (ChainPair& p : a.pairs) attach_degrees(p, a.weight);
    return a;
}

} // namespace

CorpusModel make_corpus_model(uint64_t seed, uint64_t index, CorpusFamily family) {
    Rng base(seed ^ (0xa0761d6478bd642full * (index + 1)));
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng = base.split();
        CorpusFamily f = family;
        if (f == CorpusFamily::Mixed)
            f = (rng.below(2) == 0) ? CorpusFamily::Shift : CorpusFamily::Triangular;

        Attempt a = (f == CorpusFamily::Shift) ? attempt_shift(rng) : attempt_triangular(rng);
        if (a.pairs.empty()) continue;

        Model model;
        try {
            model = synthesize_model(a.pairs, a.weight);
        } catch (const Error&) {
            continue; // degenerate draw (cancellation); next sub-seed
        }
        // generating rotation must be a tangent generalized rotation
        if (!tangency_residual(a.rotation, model).is_zero()) continue;
        if (is_holomorphically_degenerate(model).degenerate) continue;
        // the given weight must agree with the support-minimal one
        if (!(support_minimal_weight(model.poly) == a.weight)) continue;

        CorpusModel out;
        out.model = model;
        out.rotation = a.rotation;
        out.family = corpus_family_name(f);
        out.pair_count = a.pair_count;
        bool with_weight_line = rng.below(2) == 0;
        if (with_weight_line)
            out.text = "weights: " + a.weight.str() + "\n" + model.poly.str() + "\n";
        else
            out.text = model.poly.str() + "\n";
        return out;
    }
    throw Error(Errc::internal, "corpus generation failed to converge for this seed");
}

} // namespace crsym
