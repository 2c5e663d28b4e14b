#include "crsym/solver.hpp"

#include <algorithm>
#include <map>

namespace crsym {

std::vector<const ComponentBasis*> AutReport::generalized_rotations() const {
    std::vector<const ComponentBasis*> out;
    for (const ComponentBasis& c : components)
        if (c.mu > 0 && c.mu < 1) out.push_back(&c);
    return out;
}

std::vector<Monomial> monomial_basis(const Weight& w, const Rat& kappa) {
    std::vector<Monomial> out;
    if (kappa < 0) return out;
    if (w.l1 <= 0 || w.l2 <= 0)
        throw Error(Errc::invalid_weight, "monomial basis needs strictly positive weights");
    if (kappa == 0) {
        out.push_back(Monomial::one());
        return out;
    }
    mpz_class max_a1 = rat_floor(kappa / w.l1);
    if (!max_a1.fits_slong_p())
        throw Error(Errc::malformed_input, "weighted degree is out of range");
    for (mpz_class a1 = 0; a1 <= max_a1; ++a1) {
        Rat rest = kappa - w.l1 * Rat(a1);
        Rat a2q = rest / w.l2;
        if (!rat_is_integer(a2q)) continue;
        Monomial m;
        m.exp(Var::z1) = static_cast<int32_t>(a1.get_si());
        m.exp(Var::z2) = static_cast<int32_t>(a2q.get_num().get_si());
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), MonoGreater{});
    return out;
}

namespace {

long weight_lcd(const Weight& w) {
    mpz_class d = int_lcm(w.l1.get_den(), w.l2.get_den());
    if (!d.fits_slong_p())
        throw Error(Errc::invalid_weight, "weight denominator is out of range");
    return d.get_si();
}

} // namespace

std::vector<Rat> candidate_weights(const Model& m) {
    long d = weight_lcd(m.weight);
    std::vector<Rat> out;
    for (long k = 1; k < d; ++k) {
        Rat mu = rat(k, d);
        if (!monomial_basis(m.weight, mu + m.weight.l1).empty() ||
            !monomial_basis(m.weight, mu + m.weight.l2).empty() ||
            !monomial_basis(m.weight, mu + 1).empty())
            out.push_back(mu);
    }
    return out;
}

ComponentBasis solve_rigid_weight(const Model& m, const Rat& mu) {
    if (mu < -m.weight.l1)
        throw Error(Errc::invalid_weight, "weight below the shift range");

    const std::vector<Monomial> b1 = monomial_basis(m.weight, mu + m.weight.l1);
    const std::vector<Monomial> b2 = monomial_basis(m.weight, mu + m.weight.l2);
    const std::vector<Monomial> bg = monomial_basis(m.weight, mu + 1);

    // One real unknown pair (re, im) per candidate monomial, blocks
    // ordered f1, f2, g.
    const std::size_t n1 = b1.size(), n2 = b2.size(), ng = bg.size();
    const std::size_t cols = 2 * (n1 + n2 + ng);

    ComponentBasis out;
    out.mu = mu;
    if (cols == 0) return out;

    const Poly pz1 = m.poly.partial(Var::z1);
    const Poly pz2 = m.poly.partial(Var::z2);

    // residual of each elementary unknown
    std::vector<Poly> residuals(cols);
    auto slot = [&](std::size_t block_off, std::size_t idx, bool imag) {
        return 2 * (block_off + idx) + (imag ? 1 : 0);
    };
    for (std::size_t k = 0; k < n1; ++k) {
        Poly base = Poly::monomial(b1[k], Gauss(1)) * pz1;
        residuals[slot(0, k, false)] = Gauss(-2) * base.re_part();
        residuals[slot(0, k, true)] = Gauss(-2) * base.scaled(Gauss::i()).re_part();
    }
    for (std::size_t k = 0; k < n2; ++k) {
        Poly base = Poly::monomial(b2[k], Gauss(1)) * pz2;
        residuals[slot(n1, k, false)] = Gauss(-2) * base.re_part();
        residuals[slot(n1, k, true)] = Gauss(-2) * base.scaled(Gauss::i()).re_part();
    }
    for (std::size_t k = 0; k < ng; ++k) {
        Poly base = Poly::monomial(bg[k], Gauss(1));
        residuals[slot(n1 + n2, k, false)] = base.im_part();
        residuals[slot(n1 + n2, k, true)] = base.scaled(Gauss::i()).im_part();
    }

    // Assemble the coefficient-wise system: two real equations per
    // support monomial of the combined residual.
    std::map<Monomial, std::vector<std::pair<std::size_t, Gauss>>, MonoGreater> by_mono;
    for (std::size_t c = 0; c < cols; ++c)
        for (const Term& t : residuals[c].terms())
            by_mono[t.mono].emplace_back(c, t.coef);

    std::vector<SparseRow> rows;
    rows.reserve(2 * by_mono.size());
    for (const auto& [mono, entries] : by_mono) {
        SparseRow re_row, im_row;
        for (const auto& [c, g] : entries) {
            if (g.re != 0) re_row.emplace_back(c, g.re);
            if (g.im != 0) im_row.emplace_back(c, g.im);
        }
        if (!re_row.empty()) rows.push_back(std::move(re_row));
        if (!im_row.empty()) rows.push_back(std::move(im_row));
    }

    std::vector<RatVec> kernel = kernel_basis(cols, rows);

    for (const RatVec& v : kernel) {
        VectorField x;
        for (std::size_t k = 0; k < n1; ++k) {
            Gauss c(v[slot(0, k, false)], v[slot(0, k, true)]);
            if (!c.is_zero()) x.f1 += Poly::monomial(b1[k], c);
        }
        for (std::size_t k = 0; k < n2; ++k) {
            Gauss c(v[slot(n1, k, false)], v[slot(n1, k, true)]);
            if (!c.is_zero()) x.f2 += Poly::monomial(b2[k], c);
        }
        for (std::size_t k = 0; k < ng; ++k) {
            Gauss c(v[slot(n1 + n2, k, false)], v[slot(n1 + n2, k, true)]);
            if (!c.is_zero()) x.g += Poly::monomial(bg[k], c);
        }
        if (!tangency_residual(x, m).is_zero())
            throw Error(Errc::internal, "solver produced a non-tangent field");
        out.basis.push_back(std::move(x));
    }
    out.dim_real = static_cast<int>(out.basis.size());
    return out;
}

AutReport compute_g_c(const Model& m) {
    AutReport report;
    report.model = m;

    std::vector<Rat> mus;
    mus.push_back(-m.weight.l1);
    if (m.weight.l2 != m.weight.l1) mus.push_back(-m.weight.l2);
    mus.push_back(Rat(0));
    for (const Rat& mu : candidate_weights(m)) mus.push_back(mu);
    std::sort(mus.begin(), mus.end());

    for (const Rat& mu : mus) {
        ComponentBasis c = solve_rigid_weight(m, mu);
        if (c.dim_real == 0) continue;
        if (mu > 0 && mu < 1) report.dim_g_c += c.dim_real;
        report.components.push_back(std::move(c));
    }

    VectorField w_field{Poly::zero(), Poly::zero(), Poly::constant(Gauss(1))};
    report.w_tangent = tangency_residual(w_field, m).is_zero();
    report.euler_tangent = euler_tangency_holds(m);
    return report;
}

} // namespace crsym
