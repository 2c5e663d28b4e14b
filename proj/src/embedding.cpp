#include "crsym/embedding.hpp"

#include "crsym/linalg.hpp"

namespace crsym {

QuadricEmbedding build_embedding(const Decomposition& d) {
    QuadricEmbedding e;
    std::size_t total = 0;
    for (const ChainPair& pair : d.pairs) {
        const std::size_t n = pair.length();
        total += n;
        e.lengths.push_back(n);
        e.zeta.push_back(pair.u.polys);
        e.zeta_prime.push_back(pair.v.polys);
        e.z_c.push_back(pair.u.consts);
        e.z_d.push_back(pair.v.consts);
    }
    e.ambient_dim = static_cast<int>(2 * total + 1);
    return e;
}

bool verify_maps_into(const QuadricEmbedding& e, const Model& m) {
    Poly s;
    for (std::size_t j = 0; j < e.lengths.size(); ++j) {
        const std::size_t n = e.lengths[j];
        for (std::size_t k = 0; k < n; ++k)
            s += e.zeta[j][k] * e.zeta_prime[j][n - 1 - k].conjugate();
    }
    return s.re_part() == m.poly;
}

bool verify_f_related(const QuadricEmbedding& e, const VectorField& y) {
    for (std::size_t j = 0; j < e.lengths.size(); ++j) {
        const std::size_t n = e.lengths[j];
        for (std::size_t k = 0; k < n; ++k) {
            // Z(zeta_(j,k+1)) = c_k * zeta_(j,k+2) for k+2 <= n, else 0
            Poly expect_u = (k + 1 < n) ? e.zeta[j][k + 1].scaled(e.z_c[j][k]) : Poly::zero();
            if (apply(y, e.zeta[j][k]) != expect_u) return false;
            Poly expect_v =
                (k + 1 < n) ? e.zeta_prime[j][k + 1].scaled(e.z_d[j][k]) : Poly::zero();
            if (apply(y, e.zeta_prime[j][k]) != expect_v) return false;
        }
    }
    // eta component: Y(w) = 0 matches Z(eta) = 0
    return true;
}

bool verify_quadric_symmetry(const QuadricEmbedding& e) {
    // Coordinates: zeta blocks then zeta' blocks (eta is inert: Z has no
    // d/deta part and eta never appears in the pairing).
    std::size_t total = 0;
    for (std::size_t n : e.lengths) total += n;
    const std::size_t dim = 2 * total;

    std::vector<std::size_t> zeta_off(e.lengths.size()), zp_off(e.lengths.size());
    std::size_t off = 0;
    for (std::size_t j = 0; j < e.lengths.size(); ++j) {
        zeta_off[j] = off;
        off += e.lengths[j];
    }
    for (std::size_t j = 0; j < e.lengths.size(); ++j) {
        zp_off[j] = off;
        off += e.lengths[j];
    }

    // pairing matrix Phi: S = sum zeta_(j,k) conj(zeta'_(j,n-k+1))
    std::vector<CVec> phi(dim, CVec(dim, Gauss()));
    for (std::size_t j = 0; j < e.lengths.size(); ++j) {
        const std::size_t n = e.lengths[j];
        for (std::size_t k = 0; k < n; ++k)
            phi[zeta_off[j] + k][zp_off[j] + (n - 1 - k)] = Gauss(1);
    }
    // H = (Phi + Phi^*) / 2
    std::vector<CVec> h(dim, CVec(dim, Gauss()));
    const Gauss half(rat(1, 2));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            h[a][b] = (phi[a][b] + phi[b][a].conj()) * half;

    // A: Z(x_a) = sum_b A[a][b] x_b
    std::vector<CVec> a_mat(dim, CVec(dim, Gauss()));
    for (std::size_t j = 0; j < e.lengths.size(); ++j) {
        const std::size_t n = e.lengths[j];
        for (std::size_t k = 1; k < n; ++k) {
            a_mat[zeta_off[j] + (k - 1)][zeta_off[j] + k] = e.z_c[j][k - 1];
            a_mat[zp_off[j] + (k - 1)][zp_off[j] + k] = e.z_d[j][k - 1];
        }
    }

    // tangency: A^T H + H conj(A) = 0
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Gauss s;
            for (std::size_t t = 0; t < dim; ++t) {
                s += a_mat[t][r] * h[t][c];
                s += h[r][t] * a_mat[t][c].conj();
            }
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

} // namespace crsym
