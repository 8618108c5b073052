#pragma once

// Test-only oracles. These deliberately take different algorithmic routes
// than the library code they check and must stay independent of it.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "condensa/analyzer.hpp"
#include "condensa/matrix.hpp"

namespace condensa::testing {

// Dense document-query cosine straight from the corpus: whole-document term
// frequencies, (1 + log10 f) * log10(N/df) weights, explicit normalization
// of both sides. No inverted structure anywhere.
inline std::map<std::string, double> dense_scores(
    const std::vector<Document>& corpus, const std::vector<std::string>& query_terms) {
    const double n = static_cast<double>(corpus.size());

    std::map<std::string, std::map<std::string, std::size_t>> tf;  // doc -> term -> f
    std::map<std::string, std::size_t> df;
    for (const auto& doc : corpus) {
        auto& freqs = tf[doc.doc_id];
        for (const auto& s : doc.sentences)
            for (const auto& t : s.terms) ++freqs[t];
        for (const auto& [t, f] : freqs) {
            (void)f;
            ++df[t];
        }
    }

    const auto weight = [&](std::size_t f, std::size_t d) {
        if (f == 0 || d == corpus.size()) return 0.0;
        return (1.0 + std::log10(static_cast<double>(f))) *
               std::log10(n / static_cast<double>(d));
    };

    // Query vector over terms that carry weight somewhere in the corpus.
    std::map<std::string, std::size_t> qf;
    for (const auto& t : query_terms) ++qf[t];
    std::map<std::string, double> qw;
    double qnorm2 = 0.0;
    for (const auto& [t, f] : qf) {
        const auto it = df.find(t);
        if (it == df.end() || it->second == corpus.size()) continue;
        const double w = weight(f, it->second);
        qw[t] = w;
        qnorm2 += w * w;
    }
    std::map<std::string, double> scores;
    if (qnorm2 == 0.0) return scores;
    const double qnorm = std::sqrt(qnorm2);

    for (const auto& [doc_id, freqs] : tf) {
        double dnorm2 = 0.0;
        for (const auto& [t, f] : freqs) {
            const double w = weight(f, df[t]);
            dnorm2 += w * w;
        }
        if (dnorm2 == 0.0) continue;
        double dot = 0.0;
        for (const auto& [t, w] : qw) {
            const auto it = freqs.find(t);
            if (it == freqs.end()) continue;
            dot += (w / qnorm) * (weight(it->second, df[t]) / std::sqrt(dnorm2));
        }
        if (dot > 0.0) scores[doc_id] = dot;
    }
    return scores;
}

// Eigenvalues of a symmetric matrix by the classical two-sided Jacobi
// iteration (rotations applied from both sides of the matrix itself).
// Returns them sorted in non-increasing order.
inline std::vector<double> sym_eigenvalues_jacobi(Matrix a) {
    const std::size_t n = a.rows();
    const double scale = a.frobenius_norm() + 1e-300;
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2.0 * off) <= 1e-14 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const double apj = a(p, j);
                    const double aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = s * apj + c * aqj;
                }
            }
        }
    }
    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i);
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

// Closed-form roots of the characteristic cubic of a symmetric 3x3 matrix
// (trigonometric method), sorted non-increasing.
inline std::vector<double> sym_eigenvalues_3x3_charpoly(const Matrix& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    std::vector<double> eigs;
    if (p1 == 0.0) {
        eigs = {a(0, 0), a(1, 1), a(2, 2)};
    } else {
        const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
        const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                          (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
        const double p = std::sqrt(p2 / 6.0);
        Matrix b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
        const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                            b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                            b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
        const double r = std::clamp(detb / 2.0, -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        const double e1 = q + 2.0 * p * std::cos(phi);
        const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
        eigs = {e1, 3.0 * q - e1 - e3, e3};
    }
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

// Singular values of a via the Gram matrix: sqrt of the top min(t,m)
// eigenvalues of a^T a, computed by the two-sided Jacobi route above.
inline std::vector<double> singular_values_via_gram(const Matrix& a) {
    const Matrix gram = a.transposed() * a;
    std::vector<double> eigs = sym_eigenvalues_jacobi(gram);
    const std::size_t r = std::min(a.rows(), a.cols());
    std::vector<double> sv(r);
    for (std::size_t i = 0; i < r; ++i) sv[i] = std::sqrt(std::max(0.0, eigs[i]));
    return sv;
}

struct SymEigen {
    std::vector<double> values;  // non-increasing
    Matrix vectors;              // eigenvector k in column k
};

// Same two-sided Jacobi route, additionally accumulating the eigenvectors.
inline SymEigen sym_eigen_jacobi(Matrix a) {
    const std::size_t n = a.rows();
    Matrix v = Matrix::identity(n);
    const double scale = a.frobenius_norm() + 1e-300;
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2.0 * off) <= 1e-14 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t jj = 0; jj < n; ++jj) {
                    const double apj = a(p, jj);
                    const double aqj = a(q, jj);
                    a(p, jj) = c * apj - s * aqj;
                    a(q, jj) = s * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    SymEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace condensa::testing
