#include <doctest.h>

#include <map>

#include "crsym/solver.hpp"
#include "test_util.hpp"

using namespace crsym;
using testutil::F;
using testutil::M;

namespace {

/// Independent dense elimination oracle for the quadric system: plain
/// Gauss-Jordan over the rationals, written from scratch so it shares
/// nothing with the library path.
int dense_kernel_dim(std::vector<std::vector<Rat>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = Rat(1) / m[rank][c];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(cols - rank);
}

} // namespace

TEST_CASE("monomial basis") {
    Weight third{rat(1, 3), rat(1, 3)};
    auto b = monomial_basis(third, rat(2, 3));
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Monomial{{2, 0, 0, 0, 0, 0}});
    CHECK(b[1] == Monomial{{1, 1, 0, 0, 0, 0}});
    CHECK(b[2] == Monomial{{0, 2, 0, 0, 0, 0}});
    auto one = monomial_basis(third, Rat(0));
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_one());
    CHECK(monomial_basis(third, rat(1, 5)).empty());
    CHECK(monomial_basis(third, rat(-1, 3)).empty());
}

TEST_CASE("candidate weights") {
    Model m = M("Re(z1*conj(z2)^2)");
    auto cands = candidate_weights(m);
    CHECK(std::find(cands.begin(), cands.end(), rat(1, 3)) != cands.end());
    CHECK(std::find(cands.begin(), cands.end(), rat(2, 3)) != cands.end());
    for (const Rat& mu : cands) {
        CHECK(mu > 0);
        CHECK(mu < 1);
    }

    Model q = M("z1*conj(z1) + z2*conj(z2)");
    auto qc = candidate_weights(q);
    REQUIRE(qc.size() == 1);
    CHECK(qc[0] == rat(1, 2));
}

TEST_CASE("generalized rotation of the cubic model") {
    Model m = M("Re(z1*conj(z2)^2)");
    ComponentBasis c = solve_rigid_weight(m, rat(1, 3));
    REQUIRE(c.dim_real == 1);
    auto s = testutil::real_ratio(F("i*z2^2*d/dz1"), c.basis[0]);
    REQUIRE(s.has_value());
    CHECK(*s != 0);
}

TEST_CASE("quadric has no generalized rotation (dense oracle)") {
    Model q = M("z1*conj(z1) + z2*conj(z2)");
    ComponentBasis c = solve_rigid_weight(q, rat(1, 2));
    CHECK(c.dim_real == 0);

    // independent oracle: set up the 12-unknown system for f1, f2 over
    // the degree-1 monomials z1^2, z1 z2, z2^2 by hand, equate the
    // coefficient of every monomial of 2 Re(f . grad P) to zero
    auto mono = [](int a, int b, int c2, int d) {
        return Monomial{{a, b, c2, d, 0, 0}};
    };
    std::vector<Monomial> basis{mono(2, 0, 0, 0), mono(1, 1, 0, 0), mono(0, 2, 0, 0)};
    Poly pz1 = Poly::monomial(mono(0, 0, 1, 0), Gauss(1));
    Poly pz2 = Poly::monomial(mono(0, 0, 0, 1), Gauss(1));
    std::vector<Poly> residuals;
    for (int comp = 0; comp < 2; ++comp)
        for (const Monomial& b : basis)
            for (int part = 0; part < 2; ++part) {
                Gauss coef = part ? Gauss::i() : Gauss(1);
                Poly f = Poly::monomial(b, coef);
                Poly r = (f * (comp == 0 ? pz1 : pz2));
                residuals.push_back((r + r.conjugate()).scaled(Gauss(-1)));
            }
    REQUIRE(residuals.size() == 12);
    std::map<Monomial, std::size_t, MonoGreater> index;
    for (const Poly& r : residuals)
        for (const Term& t : r.terms()) index.emplace(t.mono, 0);
    std::size_t next = 0;
    for (auto& [k, v] : index) v = next++;
    std::vector<std::vector<Rat>> rows(2 * index.size(), std::vector<Rat>(12, Rat(0)));
    for (std::size_t c2 = 0; c2 < residuals.size(); ++c2)
        for (const Term& t : residuals[c2].terms()) {
            rows[2 * index[t.mono]][c2] = t.coef.re;
            rows[2 * index[t.mono] + 1][c2] = t.coef.im;
        }
    CHECK(dense_kernel_dim(rows) == 0);
}

TEST_CASE("shift components exist") {
    Model m = M("Re(z1*conj(z2)^2)");
    ComponentBasis c = solve_rigid_weight(m, rat(-1, 3));
    CHECK(c.dim_real > 0);
    for (const VectorField& x : c.basis) {
        CHECK(is_rigid(x));
        CHECK(tangency_residual(x, m).is_zero());
        CHECK(field_weight(x, m.weight) == rat(-1, 3));
    }
}

TEST_CASE("full solver report") {
    for (int l = 2; l <= 5; ++l) {
        Model m = M("Re(z1*conj(z2)^" + std::to_string(l) + ")");
        AutReport r = compute_g_c(m);
        CHECK(r.dim_g_c == 1);
        CHECK(r.w_tangent);
        CHECK(r.euler_tangent);
        auto gc = r.generalized_rotations();
        REQUIRE(gc.size() == 1);
        const VectorField& y = gc.front()->basis.front();
        CHECK(y.g.is_zero());
        CHECK(bracket(VectorField{Poly::zero(), Poly::zero(), Poly::constant(Gauss(1))}, y)
                  .is_zero());
        CHECK(field_weight(y, m.weight) == rat(l - 1, l + 1));
    }

    AutReport q = compute_g_c(M("z1*conj(z1) + z2*conj(z2)"));
    CHECK(q.dim_g_c == 0);
}

TEST_CASE("solver on a synthesized triangular model") {
    // one symmetric pair of length 2 built on U^j ~ z1^(n-l+j) z2^n
    GeneratedPair g = random_chain_pair(Weight{rat(1, 7), rat(1, 7)}, 2, Rat(4), 5);
    Model m = synthesize_model({g.pair}, Weight{rat(1, 7), rat(1, 7)});
    AutReport r = compute_g_c(m);
    CHECK(r.dim_g_c >= 1);
    CHECK(tangency_residual(g.rotation, m).is_zero());
}

TEST_CASE("solver bases are tangent and homogeneous") {
    for (uint64_t idx : {0ull, 1ull, 2ull}) {
        CorpusModel cm = make_corpus_model(17, idx, CorpusFamily::Mixed);
        AutReport r = compute_g_c(cm.model);
        for (const ComponentBasis& c : r.components)
            for (const VectorField& x : c.basis) {
                CHECK(tangency_residual(x, cm.model).is_zero());
                CHECK(field_weight(x, cm.model.weight) == c.mu);
                if (c.mu > 0 && c.mu < 1) CHECK(x.g.is_zero());
            }
    }
}
