#include <doctest.h>

#include <algorithm>

#include "crsym/corpus.hpp"
#include "crsym/linalg.hpp"

using namespace crsym;

namespace {

SparseRow sparse(std::initializer_list<std::pair<std::size_t, long>> entries) {
    SparseRow r;
    for (auto [c, v] : entries)
        if (v != 0) r.emplace_back(c, rat(v));
    return r;
}

bool in_kernel(const std::vector<SparseRow>& rows, const RatVec& x) {
    for (const SparseRow& r : rows) {
        Rat s(0);
        for (const auto& [c, v] : r) s += v * x[c];
        if (s != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("kernel of simple systems") {
    // x + y + z = 0, y - z = 0  ->  kernel span{(-2, 1, 1)}
    std::vector<SparseRow> rows{sparse({{0, 1}, {1, 1}, {2, 1}}), sparse({{1, 1}, {2, -1}})};
    auto k = kernel_basis(3, rows);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == 1);            // RREF-normalized leading one
    CHECK(k[0][1] == rat(-1, 2));
    CHECK(k[0][2] == rat(-1, 2));
    CHECK(in_kernel(rows, k[0]));

    // full-rank identity: empty kernel
    std::vector<SparseRow> id{sparse({{0, 1}}), sparse({{1, 1}})};
    CHECK(kernel_basis(2, id).empty());

    // no constraints: identity basis
    auto full = kernel_basis(3, {});
    REQUIRE(full.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(full[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("kernel is canonical under row permutation and duplication") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t cols = 6;
        std::vector<SparseRow> rows;
        const long nrows = rng.range(1, 8);
        for (long r = 0; r < nrows; ++r) {
            SparseRow row;
            for (std::size_t c = 0; c < cols; ++c) {
                long v = rng.range(-2, 2);
                if (v != 0) row.emplace_back(c, rat(v));
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
        auto k1 = kernel_basis(cols, rows);
        std::vector<SparseRow> shuffled = rows;
        std::reverse(shuffled.begin(), shuffled.end());
        shuffled.insert(shuffled.end(), rows.begin(), rows.end()); // duplicates
        auto k2 = kernel_basis(cols, shuffled);
        CHECK(k1 == k2);
        for (const RatVec& v : k1) CHECK(in_kernel(rows, v));
    }
}

TEST_CASE("dense and sparse elimination agree") {
    // the dispatcher switches on size; force both paths on the same
    // logical system by padding columns beyond the dense budget
    Rng rng(17);
    std::vector<SparseRow> rows;
    for (int r = 0; r < 5; ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < 8; ++c) {
            long v = rng.range(-2, 2);
            if (v != 0) row.emplace_back(c, rat(v));
        }
        rows.push_back(std::move(row));
    }
    auto small = kernel_basis(8, rows);          // dense Bareiss path
    auto padded = kernel_basis(100, rows);       // sparse path (cols > 64)
    // the padded kernel contains the small one plus unit vectors for
    // the 92 untouched columns
    REQUIRE(padded.size() == small.size() + 92);
    for (const RatVec& v : small) {
        RatVec ext = v;
        ext.resize(100, Rat(0));
        CHECK(std::find(padded.begin(), padded.end(), ext) != padded.end());
    }
}

TEST_CASE("complex solve and kernel") {
    // (1+i) x + y = 2i, x - y = 0  ->  x = y = 2i/(2+i)
    std::vector<CVec> a{{Gauss(rat(1), rat(1)), Gauss(1)}, {Gauss(1), Gauss(-1)}};
    CVec b{Gauss(rat(0), rat(2)), Gauss()};
    auto x = c_solve_particular(2, a, b);
    REQUIRE(x.has_value());
    Gauss expect = Gauss(rat(0), rat(2)) / Gauss(rat(2), rat(1));
    CHECK((*x)[0] == expect);
    CHECK((*x)[1] == expect);

    // inconsistent
    std::vector<CVec> a2{{Gauss(1), Gauss(1)}, {Gauss(1), Gauss(1)}};
    CVec b2{Gauss(1), Gauss(2)};
    CHECK_FALSE(c_solve_particular(2, a2, b2).has_value());

    // kernel of (1, i) is span{(-i, 1)} -> RREF leading one form (1, i)... x0 = -i x1
    std::vector<CVec> a3{{Gauss(1), Gauss::i()}};
    auto k = c_kernel_basis(2, a3);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -Gauss::i());
    CHECK(k[0][1] == Gauss(1));
}
