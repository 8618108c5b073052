#include "condensa/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "condensa/errors.hpp"

namespace condensa {

namespace {

constexpr int kMaxSweeps = 100;

double column_dot(const Matrix& m, std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, p) * m(i, q);
    return s;
}

void rotate_columns(Matrix& m, std::size_t p, std::size_t q, double c, double s) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double vp = m(i, p);
        const double vq = m(i, q);
        m(i, p) = c * vp - s * vq;
        m(i, q) = s * vp + c * vq;
    }
}

// SVD of a tall matrix (rows >= cols) by one-sided Jacobi: rotate column
// pairs until all pairwise inner products are negligible, then read the
// singular values off the column norms.
SvdResult svd_tall(const Matrix& a, double tol) {
    const std::size_t m = a.cols();
    Matrix b = a;
    Matrix v = Matrix::identity(m);

    bool converged = m < 2;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double alpha = column_dot(b, p, p);
                const double beta = column_dot(b, q, q);
                const double gamma = column_dot(b, p, q);
                if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta))
                    continue;
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate_columns(b, p, q, c, s);
                rotate_columns(v, p, q, c, s);
            }
        }
    }
    if (!converged)
        throw NoConvergenceError("one-sided Jacobi SVD did not converge within " +
                                 std::to_string(kMaxSweeps) + " sweeps");

    std::vector<double> sigma(m);
    for (std::size_t j = 0; j < m; ++j) sigma[j] = std::sqrt(column_dot(b, j, j));

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult out;
    out.singular_values.resize(m);
    out.u = Matrix(a.rows(), m);
    out.vt = Matrix(m, m);
    const double sigma_max = sigma.empty() ? 0.0 : sigma[order[0]];
    const double tiny = sigma_max * 1e-300 + 1e-300;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t j = order[k];
        out.singular_values[k] = sigma[j];
        for (std::size_t i = 0; i < m; ++i) out.vt(k, i) = v(i, j);
        if (sigma[j] > tiny) {
            for (std::size_t i = 0; i < a.rows(); ++i)
                out.u(i, k) = b(i, j) / sigma[j];
        }
    }

    // Columns with a vanishing singular value carry no direction of their
    // own; complete u to an orthonormal set so its columns stay a basis.
    for (std::size_t k = 0; k < m; ++k) {
        if (out.singular_values[k] > tiny) continue;
        std::vector<double> best;
        double best_norm = 0.0;
        for (std::size_t e = 0; e < a.rows(); ++e) {
            std::vector<double> cand(a.rows(), 0.0);
            cand[e] = 1.0;
            for (std::size_t kk = 0; kk < m; ++kk) {
                if (kk == k || (out.singular_values[kk] <= tiny && kk > k)) continue;
                double proj = 0.0;
                for (std::size_t i = 0; i < a.rows(); ++i) proj += cand[i] * out.u(i, kk);
                for (std::size_t i = 0; i < a.rows(); ++i) cand[i] -= proj * out.u(i, kk);
            }
            double nrm = 0.0;
            for (double x : cand) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(cand);
            }
        }
        if (best_norm > 0.0)
            for (std::size_t i = 0; i < a.rows(); ++i) out.u(i, k) = best[i] / best_norm;
    }
    return out;
}

}  // namespace

SvdResult svd(const Matrix& a, double tol) {
    if (a.rows() >= a.cols()) return svd_tall(a, tol);
    // Wide matrix: factor the transpose and swap the roles of u and vt.
    SvdResult t = svd_tall(a.transposed(), tol);
    SvdResult out;
    out.singular_values = std::move(t.singular_values);
    out.u = t.vt.transposed();
    out.vt = t.u.transposed();
    return out;
}

}  // namespace condensa
