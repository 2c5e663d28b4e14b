// Acceptance suite: one pass/fail line per criterion, all checks exact.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "crsym/cli.hpp"
#include "crsym/parse.hpp"
#include "test_util.hpp"

using namespace crsym;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("[%s] %d. %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                seconds, detail.empty() ? "" : ("  -- " + detail).c_str());
    if (!ok) ++g_failures;
}

struct Criterion {
    int index;
    std::string name;
    std::function<bool(std::string&)> body;
};

double run_criterion(const Criterion& c) {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const Error& e) {
        detail = std::string(errc_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(c.index, c.name, ok, secs, detail);
    return secs;
}

std::optional<Rat> real_ratio(const VectorField& x, const VectorField& y) {
    const Poly* px[3] = {&x.f1, &x.f2, &x.g};
    for (int k = 0; k < 3; ++k) {
        if (px[k]->is_zero()) continue;
        const Poly* py[3] = {&y.f1, &y.f2, &y.g};
        Gauss s = py[k]->coeff(px[k]->leading().mono) / px[k]->leading().coef;
        if (s.im != 0) return std::nullopt;
        if (y.f1 == x.f1.scaled(s) && y.f2 == x.f2.scaled(s) && y.g == x.g.scaled(s))
            return s.re;
        return std::nullopt;
    }
    return std::nullopt;
}

// shared corpus for criteria 3-8
struct CorpusItem {
    CorpusModel cm;
    AutReport aut;
};

std::vector<CorpusItem>& corpus() {
    static std::vector<CorpusItem> items;
    return items;
}

constexpr uint64_t kCorpusSeed = 2024;
constexpr uint64_t kCorpusCount = 210;

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back(
        {1, "cubic family: weight, dim g_c, basis and field weight for l = 2..5",
         [](std::string& detail) {
             auto t0 = Clock::now();
             for (int l = 2; l <= 5; ++l) {
                 Model m = validate_model(
                     parse_real_poly("Re(z1*conj(z2)^" + std::to_string(l) + ")"));
                 if (!(m.weight == Weight{rat(1, l + 1), rat(1, l + 1)})) {
                     detail = "wrong weight at l=" + std::to_string(l);
                     return false;
                 }
                 AutReport r = compute_g_c(m);
                 if (r.dim_g_c != 1) {
                     detail = "dim g_c != 1 at l=" + std::to_string(l);
                     return false;
                 }
                 const VectorField& y = r.generalized_rotations().front()->basis.front();
                 VectorField expect{
                     Poly::monomial(Monomial::var(Var::z2, l), Gauss::i()),
                     Poly::zero(), Poly::zero()};
                 if (!real_ratio(expect, y).has_value() || *real_ratio(expect, y) == 0) {
                     detail = "basis does not span i*z2^" + std::to_string(l) + "*d/dz1";
                     return false;
                 }
                 if (field_weight(y, m.weight) != rat(l - 1, l + 1)) {
                     detail = "wrong field weight at l=" + std::to_string(l);
                     return false;
                 }
             }
             double secs = std::chrono::duration<double>(Clock::now() - t0).count();
             if (secs >= 5.0) {
                 detail = "exceeded 5s budget";
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {2, "quadric negative control: dim g_c = 0 and TWO_JET_DETERMINATION",
         [](std::string& detail) {
             auto t0 = Clock::now();
             Model q = validate_model(parse_real_poly("z1*conj(z1) + z2*conj(z2)"));
             AutReport r = compute_g_c(q);
             if (r.dim_g_c != 0) {
                 detail = "dim g_c != 0";
                 return false;
             }
             Verdict v = classify_two_jet(q);
             if (v.tag != VerdictTag::TwoJetDetermination) {
                 detail = "wrong verdict";
                 return false;
             }
             double secs = std::chrono::duration<double>(Clock::now() - t0).count();
             if (secs >= 1.0) {
                 detail = "exceeded 1s budget";
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {3, "corpus of 210 models: dim g_c <= 1 on every nondegenerate model",
         [](std::string& detail) {
             auto t0 = Clock::now();
             for (uint64_t k = 0; k < kCorpusCount; ++k) {
                 CorpusItem item;
                 item.cm = make_corpus_model(kCorpusSeed, k, CorpusFamily::Mixed);
                 if (is_holomorphically_degenerate(item.cm.model).degenerate) {
                     detail = "corpus produced a degenerate model at index " +
                              std::to_string(k);
                     return false;
                 }
                 item.aut = compute_g_c(item.cm.model);
                 if (item.aut.dim_g_c > 1) {
                     detail = "dim g_c > 1 at index " + std::to_string(k);
                     return false;
                 }
                 corpus().push_back(std::move(item));
             }
             double secs = std::chrono::duration<double>(Clock::now() - t0).count();
             if (secs >= 60.0) {
                 detail = "exceeded 60s budget";
                 return false;
             }
             return true;
         }});

    criteria.push_back(
        {4, "chain round-trip with exact equality and pair invariants",
         [](std::string& detail) {
             for (const CorpusItem& item : corpus()) {
                 if (item.aut.dim_g_c < 1) {
                     detail = "corpus model without rotation";
                     return false;
                 }
                 const VectorField& y =
                     item.aut.generalized_rotations().front()->basis.front();
                 Decomposition d = extract_chains(item.cm.model, y);
                 for (const ChainPair& p : d.pairs) {
                     if (!verify_pair(y, p)) {
                         detail = "pair invariants fail";
                         return false;
                     }
                     const std::size_t n = p.length();
                     for (std::size_t j = 0; j + 1 < n; ++j)
                         if (p.u.consts[j] != -p.v.consts[n - 2 - j].conj()) {
                             detail = "constant symmetry fails";
                             return false;
                         }
                 }
                 Model back = synthesize_model(d.pairs, item.cm.model.weight);
                 if (!(back.poly == item.cm.model.poly)) {
                     detail = "round-trip mismatch";
                     return false;
                 }
             }
             return !corpus().empty();
         }});

    criteria.push_back(
        {5, "rotation recovery matches the solver basis up to a real scalar",
         [](std::string& detail) {
             int used = 0;
             for (const CorpusItem& item : corpus()) {
                 if (item.aut.dim_g_c != 1) continue;
                 const VectorField& y =
                     item.aut.generalized_rotations().front()->basis.front();
                 Decomposition d = extract_chains(item.cm.model, y);
                 VectorField rec = recover_rotation(d);
                 auto s = real_ratio(y, rec);
                 if (!s.has_value() || *s == 0) {
                     detail = "recovered field is not a real multiple of the basis";
                     return false;
                 }
                 ++used;
             }
             detail = std::to_string(used) + " models with dim g_c = 1";
             return used > 0;
         }});

    criteria.push_back(
        {6, "hyperquadric embedding verifications with ambient_dim = 2*sum(N_j) + 1",
         [](std::string& detail) {
             for (const CorpusItem& item : corpus()) {
                 if (item.aut.dim_g_c == 0) continue;
                 const VectorField& y =
                     item.aut.generalized_rotations().front()->basis.front();
                 Decomposition d = extract_chains(item.cm.model, y);
                 QuadricEmbedding e = build_embedding(d);
                 std::size_t total = 0;
                 for (std::size_t n : e.lengths) total += n;
                 if (e.ambient_dim != static_cast<int>(2 * total + 1) ||
                     e.ambient_dim < 3) {
                     detail = "ambient dimension wrong";
                     return false;
                 }
                 if (!verify_maps_into(e, item.cm.model) || !verify_f_related(e, y) ||
                     !verify_quadric_symmetry(e)) {
                     detail = "embedding verification failed";
                     return false;
                 }
             }
             return !corpus().empty();
         }});

    criteria.push_back(
        {7, "kernel filtrations: dim ker Y <= 1 per degree, dim V_n <= n, adapted bases",
         [](std::string& detail) {
             for (std::size_t idx = 0; idx < corpus().size(); idx += 3) {
                 const CorpusItem& item = corpus()[idx];
                 if (item.aut.dim_g_c == 0) continue;
                 const VectorField& y =
                     item.aut.generalized_rotations().front()->basis.front();
                 const Weight& w = item.cm.model.weight;
                 long den = int_lcm(w.l1.get_den(), w.l2.get_den()).get_si();
                 Decomposition d = extract_chains(item.cm.model, y);
                 int maxlen = 0;
                 for (const ChainPair& p : d.pairs)
                     maxlen = std::max(maxlen, static_cast<int>(p.length()));
                 for (long num = 1; num <= den; ++num) {
                     Rat kappa = rat(num, den);
                     if (monomial_basis(w, kappa).empty()) continue;
                     KernelFiltration f = kernel_filtration(y, w, kappa, maxlen + 2);
                     for (const FiltrationLevel& lv : f.levels) {
                         if (lv.n == 1 && lv.dim > 1) {
                             detail = "kernel dimension exceeds one";
                             return false;
                         }
                         if (lv.dim > lv.n || lv.height > lv.n) {
                             detail = "dim V_n or height exceeds n";
                             return false;
                         }
                         if (lv.dim == 0) continue;
                         for (int s = 0; s < lv.dim; ++s) {
                             Poly pow = lv.adapted_basis[s];
                             for (int t = 0; t < lv.height - 1; ++t) pow = apply(y, pow);
                             bool want_nonzero = (s + 1 == lv.dim);
                             if (pow.is_zero() == want_nonzero) {
                                 detail = "adapted basis height condition fails";
                                 return false;
                             }
                             if (want_nonzero && !apply(y, pow).is_zero()) {
                                 detail = "top element not killed by the next power";
                                 return false;
                             }
                         }
                     }
                 }
             }
             return !corpus().empty();
         }});

    criteria.push_back(
        {8, "universal members: W residual and the Euler identity on every model",
         [](std::string& detail) {
             for (const CorpusItem& item : corpus()) {
                 if (!item.aut.w_tangent || !item.aut.euler_tangent) {
                     detail = "universal member check failed";
                     return false;
                 }
                 VectorField w_field{Poly::zero(), Poly::zero(),
                                     Poly::constant(Gauss(1))};
                 if (!tangency_residual(w_field, item.cm.model).is_zero()) {
                     detail = "W residual nonzero";
                     return false;
                 }
                 if (!euler_tangency_holds(item.cm.model)) {
                     detail = "Euler identity fails";
                     return false;
                 }
             }
             return !corpus().empty();
         }});

    criteria.push_back(
        {9, "round-trips: 1000 print/parse identities, JSON reports, corpus regeneration",
         [](std::string& detail) {
             Rng rng(90210);
             for (int k = 0; k < 500; ++k) {
                 Poly q = testutil::random_real_poly(rng);
                 if (q.is_zero()) continue;
                 if (!(parse_real_poly(q.str()) == q)) {
                     detail = "polynomial print/parse mismatch";
                     return false;
                 }
             }
             for (int k = 0; k < 500; ++k) {
                 VectorField f = testutil::random_field(rng);
                 if (!(parse_field(f.str()) == f)) {
                     detail = "field print/parse mismatch";
                     return false;
                 }
             }
             // JSON report round-trip
             for (const char* src :
                  {"Re(z1*conj(z2)^2)\n", "z1*conj(z1) + z2*conj(z2)\n"}) {
                 for (auto fn : {cmd_check, cmd_aut, cmd_classify}) {
                     Report r = fn(src, "m.crm");
                     if (!(Report::from_json_string(r.to_json_string()) == r)) {
                         detail = "JSON report round-trip mismatch";
                         return false;
                     }
                 }
             }
             // byte-identical corpus regeneration
             namespace fs = std::filesystem;
             fs::path a = fs::temp_directory_path() / "crsym_acc_a";
             fs::path b = fs::temp_directory_path() / "crsym_acc_b";
             fs::remove_all(a);
             fs::remove_all(b);
             Report ra = cmd_corpus(11, 8, CorpusFamily::Mixed, a.string());
             Report rb = cmd_corpus(11, 8, CorpusFamily::Mixed, b.string());
             if (!(ra == rb)) {
                 detail = "corpus summaries differ";
                 return false;
             }
             for (const CorpusEntry& e : ra.corpus) {
                 std::ifstream fa(a / e.file, std::ios::binary);
                 std::ifstream fb(b / e.file, std::ios::binary);
                 std::ostringstream sa, sb;
                 sa << fa.rdbuf();
                 sb << fb.rdbuf();
                 if (sa.str() != sb.str() || sa.str().empty()) {
                     detail = "corpus files differ between runs";
                     return false;
                 }
             }
             fs::remove_all(a);
             fs::remove_all(b);
             return true;
         }});

    double total = 0;
    for (const Criterion& c : criteria) total += run_criterion(c);
    std::printf("%s: %d/%zu criteria passed (%.2fs total)\n",
                g_failures == 0 ? "OK" : "FAILED",
                static_cast<int>(criteria.size()) - g_failures, criteria.size(), total);
    return g_failures == 0 ? 0 : 1;
}
