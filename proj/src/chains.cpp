#include "crsym/chains.hpp"

#include <algorithm>
#include <map>

#include "crsym/classify.hpp"
#include "crsym/linalg.hpp"
#include "crsym/solver.hpp"

namespace crsym {

Poly ChainPair::block() const {
    const std::size_t n = u.length();
    Poly s;
    for (std::size_t k = 0; k < n; ++k)
        s += u.polys[k] * v.polys[n - 1 - k].conjugate();
    return s.re_part();
}

Poly Decomposition::total() const {
    Poly p;
    for (const ChainPair& pr : pairs) p += pr.block();
    return p;
}

namespace {

/// Matrix of Y^power acting from the space spanned by `domain` monomials,
/// expressed over the image monomial set; used for kernels and the chain
/// completion solve.
struct OperatorImage {
    std::vector<Poly> images; // Y^power applied to each domain monomial
};

OperatorImage power_images(const VectorField& y, const std::vector<Monomial>& domain,
                           int power) {
    OperatorImage out;
    out.images.reserve(domain.size());
    for (const Monomial& m : domain) {
        Poly p = Poly::monomial(m, Gauss(1));
        for (int k = 0; k < power; ++k) p = apply(y, p);
        out.images.push_back(std::move(p));
    }
    return out;
}

/// Rows over the union of image support, one per monomial.
std::vector<CVec> image_matrix(const OperatorImage& im, std::vector<Monomial>& support) {
    std::map<Monomial, std::size_t, MonoGreater> index;
    for (const Poly& p : im.images)
        for (const Term& t : p.terms()) index.emplace(t.mono, 0);
    support.clear();
    for (auto& [m, idx] : index) {
        idx = support.size();
        support.push_back(m);
    }
    std::vector<CVec> rows(support.size(), CVec(im.images.size(), Gauss()));
    for (std::size_t c = 0; c < im.images.size(); ++c)
        for (const Term& t : im.images[c].terms())
            rows[index.at(t.mono)][c] = t.coef;
    return rows;
}

Poly combine(const std::vector<Monomial>& basis, const CVec& coords) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coords[k].is_zero()) ts.push_back({basis[k], coords[k]});
    return Poly::from_terms(std::move(ts));
}

void require_rotation(const Model& m, const VectorField& y, Rat& mu_out) {
    if (y.is_zero()) throw Error(Errc::not_a_rotation, "zero field");
    if (!is_rigid(y) || !y.g.is_zero() || !y.f1.is_holomorphic() || !y.f2.is_holomorphic())
        throw Error(Errc::not_a_rotation,
                    "generalized rotations are rigid z-fields with no d/dw part");
    Rat mu;
    try {
        mu = field_weight(y, m.weight);
    } catch (const Error&) {
        throw Error(Errc::not_a_rotation, "field is not weighted homogeneous");
    }
    if (mu <= 0) throw Error(Errc::not_a_rotation, "field weight is not positive");
    if (!tangency_residual(y, m).is_zero())
        throw Error(Errc::not_a_rotation, "field is not tangent to the model");
    mu_out = mu;
}

std::vector<std::pair<Rat, Poly>> blocks_of(const Poly& p, const Weight& w) {
    std::map<Rat, std::vector<Term>> blocks;
    for (const Term& t : p.terms()) blocks[holo_weighted_degree(t.mono, w)].push_back(t);
    std::vector<std::pair<Rat, Poly>> out;
    for (auto& [deg, ts] : blocks) out.emplace_back(deg, Poly::from_terms(std::move(ts)));
    return out;
}

} // namespace

KernelFiltration kernel_filtration(const VectorField& y, const Weight& w,
                                   const Rat& kappa, int depth) {
    Rat mu;
    if (y.is_zero() || !is_rigid(y) || !y.g.is_zero())
        throw Error(Errc::not_positive_weight, "operator must be a rigid z-field");
    mu = field_weight(y, w);
    if (mu <= 0)
        throw Error(Errc::not_positive_weight, "operator must have positive weight");

    KernelFiltration out;
    out.operator_field = y;
    out.degree = kappa;

    const std::vector<Monomial> domain = monomial_basis(w, kappa);
    std::vector<std::vector<CVec>> kernels; // coordinates of V_n bases
    for (int n = 1; n <= depth; ++n) {
        FiltrationLevel level;
        level.n = n;
        if (domain.empty()) {
            out.levels.push_back(level);
            kernels.emplace_back();
            continue;
        }
        OperatorImage im = power_images(y, domain, n);
        std::vector<Monomial> support;
        std::vector<CVec> rows = image_matrix(im, support);
        std::vector<CVec> ker = c_kernel_basis(domain.size(), rows);
        const int dn = static_cast<int>(ker.size());
        level.dim = dn;

        if (dn > 0) {
            auto height_of = [&](const CVec& v) {
                Poly p = combine(domain, v);
                int h = 0;
                while (!p.is_zero()) {
                    p = apply(y, p);
                    ++h;
                }
                return h;
            };
            int hn = 0;
            const CVec* top = nullptr;
            for (const CVec& v : ker) {
                int h = height_of(v);
                if (h > hn) {
                    hn = h;
                    top = &v;
                }
            }
            if (top == nullptr || hn > n)
                throw Error(Errc::internal, "no adapted top element in kernel filtration");
            level.height = hn;
            // the complement of the top line lies in the kernel of the
            // previous power: two elements of maximal height differ by
            // something of lower height, the kernel in each degree
            // being at most a line
            std::vector<CVec> lower =
                (hn >= 2) ? kernels[hn - 2] : std::vector<CVec>{};
            if (static_cast<int>(lower.size()) != dn - 1)
                throw Error(Errc::internal, "adapted basis has wrong dimension");
            for (const CVec& v : lower) level.adapted_basis.push_back(combine(domain, v));
            level.adapted_basis.push_back(combine(domain, *top));
        }
        kernels.push_back(std::move(ker));
        out.levels.push_back(std::move(level));
    }
    return out;
}

Decomposition extract_chains(const Model& m, const VectorField& y) {
    Rat mu;
    require_rotation(m, y, mu);
    if (is_holomorphically_degenerate(m).degenerate)
        throw Error(Errc::degenerate_model,
                    "chain extraction requires a holomorphically nondegenerate model");

    Decomposition out;
    out.rotation = y;

    const Weight& w = m.weight;
    const std::size_t max_pairs = blocks_of(m.poly, w).size();
    Poly remaining = m.poly;

    while (!remaining.is_zero()) {
        if (out.pairs.size() >= max_pairs)
            throw Error(Errc::non_terminating, "chain peeling exceeded the block bound");

        auto blocks = blocks_of(remaining, w);
        const Rat cb = blocks.front().first;
        const Poly& bottom = blocks.front().second;

        // rank-one factorization bottom = Q * conj(K), K monic
        Monomial alpha0 = bottom.leading().mono;
        alpha0.exp(Var::zb1) = 0;
        alpha0.exp(Var::zb2) = 0;
        std::vector<Term> row_terms;
        for (const Term& t : bottom.terms()) {
            Monomial holo = t.mono;
            holo.exp(Var::zb1) = 0;
            holo.exp(Var::zb2) = 0;
            if (holo == alpha0) row_terms.push_back({t.mono / alpha0, t.coef});
        }
        Poly k_factor = Poly::from_terms(std::move(row_terms)).conjugate().monic();
        Poly q_factor;
        try {
            q_factor = bottom.exact_div(k_factor.conjugate());
        } catch (const Error&) {
            throw Error(Errc::rank_exceeds_one,
                        "lowest bihomogeneous block does not factor through rank one");
        }
        if (!q_factor.is_holomorphic())
            throw Error(Errc::rank_exceeds_one,
                        "lowest bihomogeneous block has rank greater than one");
        if (!apply(y, k_factor).is_zero())
            throw Error(Errc::internal,
                        "antiholomorphic factor of the lowest block is not annihilated");

        // forward orbit of Q
        std::vector<Poly> orbit{q_factor};
        while (true) {
            Poly next = apply(y, orbit.back());
            if (next.is_zero()) break;
            if (cb + rat(static_cast<long>(orbit.size())) * mu >= 1)
                throw Error(Errc::internal, "orbit escaped the admissible degree range");
            orbit.push_back(std::move(next));
        }
        const std::size_t n = orbit.size();

        const Rat cv1 = Rat(1) - cb - rat(static_cast<long>(n - 1)) * mu;
        if (cv1 < cb)
            throw Error(Errc::internal, "chain co-start below the lowest block");
        const bool overlap = (cv1 == cb);

        // solve Y^(n-1) X = K for the V-chain start
        const std::vector<Monomial> domain = monomial_basis(w, cv1);
        if (domain.empty())
            throw Error(Errc::internal, "empty co-start space in chain extraction");
        OperatorImage im = power_images(y, domain, static_cast<int>(n) - 1);
        std::vector<Monomial> support;
        std::vector<CVec> rows = image_matrix(im, support);
        CVec rhs(support.size(), Gauss());
        for (const Term& t : k_factor.terms()) {
            auto it = std::find(support.begin(), support.end(), t.mono);
            if (it == support.end())
                throw Error(Errc::internal, "chain completion is unsolvable");
            rhs[static_cast<std::size_t>(it - support.begin())] = t.coef;
        }
        std::optional<CVec> x = c_solve_particular(domain.size(), rows, rhs);
        if (!x) throw Error(Errc::internal, "chain completion is unsolvable");
        Poly v_start = combine(domain, *x);
        if (v_start.is_zero()) throw Error(Errc::internal, "zero chain co-start");

        // monic V-chain with constants d_j
        Chain v;
        v.polys.push_back(v_start.monic());
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Poly t = apply(y, v.polys.back());
            if (t.is_zero()) throw Error(Errc::internal, "V-chain terminated early");
            v.consts.push_back(t.leading().coef);
            v.polys.push_back(t.monic());
        }
        if (!apply(y, v.polys.back()).is_zero())
            throw Error(Errc::internal, "V-chain does not terminate");
        if (v.polys.back() != k_factor)
            throw Error(Errc::internal, "V-chain end disagrees with the block factor");

        // symmetric constants for the U-chain
        std::vector<Gauss> c_consts(n >= 1 ? n - 1 : 0);
        for (std::size_t j = 0; j + 1 < n; ++j)
            c_consts[j] = -v.consts[n - 2 - j].conj();

        Poly u_start;
        if (!overlap) {
            u_start = q_factor.scaled(Gauss(2));
        } else {
            Poly end = orbit.back();
            Poly ratio = end.exact_div(k_factor);
            if (!ratio.is_constant())
                throw Error(Errc::internal, "orbit end is not proportional to the kernel element");
            Gauss rho_q = ratio.is_zero() ? Gauss() : ratio.leading().coef;
            const bool odd = (n % 2 == 1);
            if (odd && rho_q.im != 0)
                throw Error(Errc::internal, "self-paired chain with non-real end coefficient");
            if (!odd && rho_q.re != 0)
                throw Error(Errc::internal, "self-paired chain with non-imaginary end coefficient");
            Gauss prod_d(1);
            for (const Gauss& dj : v.consts) prod_d *= dj;
            Gauss rho = rho_q / prod_d.conj();
            if (!odd) rho = -rho;
            u_start = q_factor.scaled(Gauss(2)) - v.polys.front().scaled(rho.conj());
        }

        Chain u;
        u.polys.push_back(u_start);
        u.consts = c_consts;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Poly t = apply(y, u.polys.back());
            if (t.is_zero()) throw Error(Errc::internal, "U-chain terminated early");
            u.polys.push_back(t.scaled(Gauss(1) / u.consts[j]));
        }
        if (!apply(y, u.polys.back()).is_zero())
            throw Error(Errc::internal, "U-chain does not terminate");

        ChainPair pair;
        pair.u = std::move(u);
        pair.v = std::move(v);
        for (std::size_t k = 0; k < n; ++k)
            pair.u_degrees.push_back(cb + rat(static_cast<long>(k)) * mu);

        if (!verify_pair(y, pair))
            throw Error(Errc::internal, "extracted pair fails the chain relations");

        Poly t_block = pair.block();
        Poly reduced = remaining - t_block;
        // bottom must be consumed
        for (const Term& t : reduced.terms())
            if (holo_weighted_degree(t.mono, w) <= cb)
                throw Error(Errc::internal, "chain peeling failed to consume the lowest block");
        remaining = std::move(reduced);
        out.pairs.push_back(std::move(pair));
    }
    return out;
}

bool verify_pair(const VectorField& y, const ChainPair& pair) {
    const std::size_t n = pair.u.length();
    if (n == 0 || pair.v.length() != n) return false;
    if (pair.u.consts.size() + 1 != n || pair.v.consts.size() + 1 != n) return false;

    auto chain_ok = [&](const Chain& c) {
        for (const Poly& p : c.polys)
            if (p.is_zero()) return false;
        for (const Gauss& g : c.consts)
            if (g.is_zero()) return false;
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (apply(y, c.polys[j]) != c.polys[j + 1].scaled(c.consts[j])) return false;
        return apply(y, c.polys[n - 1]).is_zero();
    };
    if (!chain_ok(pair.u) || !chain_ok(pair.v)) return false;
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (pair.u.consts[j] != -pair.v.consts[n - 2 - j].conj()) return false;
    return true;
}

Model synthesize_model(const std::vector<ChainPair>& pairs, const Weight& w) {
    if (pairs.empty()) throw Error(Errc::zero_result, "no chain pairs given");
    Poly p;
    for (const ChainPair& pair : pairs) {
        if (pair.u.length() == 0 || pair.u.length() != pair.v.length())
            throw Error(Errc::degree_mismatch, "pair chains must have equal nonzero length");
        Poly block = pair.block();
        for (const Term& t : block.terms())
            if (weighted_degree(t.mono, w) != 1)
                throw Error(Errc::degree_mismatch,
                            "pair block is not of weighted degree one");
        p += block;
    }
    if (p.is_zero()) throw Error(Errc::zero_result, "chain pairs sum to zero");
    if (!p.is_pluriharmonic_free())
        throw Error(Errc::pluriharmonic_result, "chain pairs produce pluriharmonic terms");
    return validate_model(p, w);
}

VectorField recover_rotation(const Decomposition& d) {
    const ChainPair* chosen = nullptr;
    for (const ChainPair& pair : d.pairs)
        if (pair.length() >= 2) {
            chosen = &pair;
            break;
        }
    if (chosen == nullptr)
        throw Error(Errc::zero_jacobian, "no chain of length at least two");

    const std::size_t n = chosen->length();
    const Poly& u_prev = chosen->u.polys[n - 2];
    const Poly& u_top = chosen->u.polys[n - 1];
    const Gauss& c_last = chosen->u.consts[n - 2];

    Poly jac = u_prev.partial(Var::z1) * u_top.partial(Var::z2) -
               u_prev.partial(Var::z2) * u_top.partial(Var::z1);
    if (jac.is_zero())
        throw Error(Errc::zero_jacobian, "chain tail is functionally dependent");

    // Cramer's rule on Y(U^(N-1)) = c U^N, Y(U^N) = 0.  Dividing the
    // component products keeps the quotients polynomial even when the
    // scalar factor c U^N / Jac alone is not (the partials of a
    // monomial U^N share a large common factor).
    Poly f1 = (u_top.scaled(c_last) * u_top.partial(Var::z2)).exact_div(jac);
    Poly f2 = -(u_top.scaled(c_last) * u_top.partial(Var::z1)).exact_div(jac);
    VectorField y{f1, f2, Poly::zero()};
    if (apply(y, u_prev) != u_top.scaled(c_last) || !apply(y, u_top).is_zero())
        throw Error(Errc::not_divisible, "chain data is inconsistent");
    return y;
}

} // namespace crsym
