#include "crsym/linalg.hpp"

#include <algorithm>
#include <map>

#include "crsym/errors.hpp"

namespace crsym {

std::vector<RatVec> rref(std::vector<RatVec> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const RatVec& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Rat& x) { return x == 0; });
                              }),
               rows.end());
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows.size(); ++col) {
        std::size_t sel = pr;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pr], rows[sel]);
        Rat inv = Rat(1) / rows[pr][col];
        for (std::size_t j = col; j < cols; ++j) rows[pr][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[pr][j];
        }
        ++pr;
    }
    rows.resize(pr);
    return rows;
}

namespace {

/// Kernel basis read off an upper-echelon rational matrix.
std::vector<RatVec> kernel_from_echelon(const std::vector<RatVec>& ech,
                                        const std::vector<std::size_t>& pivots,
                                        std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(cols, Rat(0));
        x[f] = 1;
        for (std::size_t ii = pivots.size(); ii-- > 0;) {
            const RatVec& row = ech[ii];
            Rat s(0);
            for (std::size_t j = pivots[ii] + 1; j < cols; ++j)
                if (row[j] != 0 && x[j] != 0) s += row[j] * x[j];
            if (s != 0) x[pivots[ii]] = -s / row[pivots[ii]];
        }
        basis.push_back(std::move(x));
    }
    return rref(std::move(basis));
}

std::vector<RatVec> kernel_dense_bareiss(std::size_t cols,
                                         const std::vector<SparseRow>& rows) {
    // Clear denominators row-wise; row scaling does not change the kernel.
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const SparseRow& r : rows) {
        mpz_class l(1);
        for (const auto& [c, v] : r) l = int_lcm(l, v.get_den());
        std::vector<mpz_class> row(cols, mpz_class(0));
        for (const auto& [c, v] : r) {
            Rat s = v * Rat(l);
            row[c] = s.get_num();
        }
        m.push_back(std::move(row));
    }

    const std::size_t nr = m.size();
    std::vector<std::size_t> pivots;
    mpz_class prev(1);
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < nr; ++col) {
        std::size_t sel = pr;
        while (sel < nr && m[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(m[pr], m[sel]);
        for (std::size_t i = pr + 1; i < nr; ++i) {
            if (m[i][col] == 0) {
                // still must scale the remaining entries to keep the
                // fraction-free invariant
                for (std::size_t j = col + 1; j < cols; ++j) {
                    if (m[i][j] == 0) continue;
                    mpz_class t = m[pr][col] * m[i][j];
                    mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = m[pr][col] * m[i][j] - m[i][col] * m[pr][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[pr][col];
        pivots.push_back(col);
        ++pr;
    }

    std::vector<RatVec> ech;
    ech.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RatVec r(cols, Rat(0));
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i][j] != 0) r[j] = Rat(m[i][j]);
        ech.push_back(std::move(r));
    }
    return kernel_from_echelon(ech, pivots, cols);
}

std::vector<RatVec> kernel_sparse(std::size_t cols, const std::vector<SparseRow>& rows) {
    // pivot column -> echelon row (lead coefficient 1)
    std::map<std::size_t, SparseRow> ech;

    auto axpy = [](SparseRow& r, const Rat& f, const SparseRow& s) {
        // r -= f * s, sparse merge
        SparseRow out;
        out.reserve(r.size() + s.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() && j < s.size()) {
            if (r[i].first < s[j].first) {
                out.push_back(r[i++]);
            } else if (r[i].first > s[j].first) {
                out.emplace_back(s[j].first, -f * s[j].second);
                ++j;
            } else {
                Rat v = r[i].second - f * s[j].second;
                if (v != 0) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        while (i < r.size()) out.push_back(r[i++]);
        while (j < s.size()) {
            out.emplace_back(s[j].first, -f * s[j].second);
            ++j;
        }
        r = std::move(out);
    };

    for (const SparseRow& input : rows) {
        SparseRow r = input;
        while (!r.empty()) {
            auto it = ech.find(r.front().first);
            if (it == ech.end()) break;
            axpy(r, r.front().second, it->second);
        }
        if (r.empty()) continue;
        Rat inv = Rat(1) / r.front().second;
        for (auto& [c, v] : r) v *= inv;
        ech.emplace(r.front().first, std::move(r));
    }

    // full reduction above pivots
    for (auto it = ech.rbegin(); it != ech.rend(); ++it) {
        for (auto jt = ech.begin(); jt->first != it->first; ++jt) {
            SparseRow& row = jt->second;
            auto hit = std::lower_bound(row.begin(), row.end(), it->first,
                                        [](const auto& e, std::size_t c) { return e.first < c; });
            if (hit == row.end() || hit->first != it->first) continue;
            Rat f = hit->second;
            axpy(row, f, it->second);
        }
    }

    std::vector<std::size_t> pivots;
    std::vector<RatVec> dense;
    for (const auto& [p, row] : ech) {
        pivots.push_back(p);
        RatVec r(cols, Rat(0));
        for (const auto& [c, v] : row) r[c] = v;
        dense.push_back(std::move(r));
    }
    return kernel_from_echelon(dense, pivots, cols);
}

} // namespace

std::vector<RatVec> kernel_basis(std::size_t cols, const std::vector<SparseRow>& rows) {
    if (cols == 0) return {};
    const std::size_t dense_budget = 40000;
    if (cols <= 64 && rows.size() * cols <= dense_budget)
        return kernel_dense_bareiss(cols, rows);
    return kernel_sparse(cols, rows);
}

namespace {

/// Gauss-Jordan over the Gaussian rationals; returns pivot columns.
std::vector<std::size_t> c_rref_inplace(std::vector<CVec>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < m.size(); ++col) {
        std::size_t sel = pr;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[pr], m[sel]);
        Gauss inv = Gauss(1) / m[pr][col];
        for (std::size_t j = col; j < cols; ++j) m[pr][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == pr || m[i][col].is_zero()) continue;
            Gauss f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[pr][j];
        }
        pivots.push_back(col);
        ++pr;
    }
    m.resize(pr);
    return pivots;
}

} // namespace

std::optional<CVec> c_solve_particular(std::size_t cols, std::vector<CVec> a, CVec b) {
    if (a.size() != b.size()) throw Error(Errc::internal, "solve: shape mismatch");
    if (a.empty()) return CVec(cols, Gauss());
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots = c_rref_inplace(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    CVec x(cols, Gauss());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::vector<CVec> c_kernel_basis(std::size_t cols, std::vector<CVec> a) {
    if (a.empty()) {
        std::vector<CVec> basis;
        for (std::size_t f = 0; f < cols; ++f) {
            CVec x(cols, Gauss());
            x[f] = Gauss(1);
            basis.push_back(std::move(x));
        }
        return basis;
    }
    std::vector<std::size_t> pivots = c_rref_inplace(a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<CVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        CVec x(cols, Gauss());
        x[f] = Gauss(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace crsym
