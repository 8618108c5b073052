#include "condensa/lsa.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "condensa/errors.hpp"
#include "condensa/similarity.hpp"
#include "condensa/svd.hpp"

namespace condensa {

TermSentenceMatrix term_sentence_matrix(const Document& doc) {
    std::size_t usable = 0;
    for (const auto& s : doc.sentences)
        if (!s.terms.empty()) ++usable;
    if (usable < 2)
        throw DegenerateDocumentError("document `" + doc.doc_id +
                                      "` has fewer than 2 sentences with terms");

    const std::vector<SentenceVector> vectors = sentence_vectors(doc);
    std::map<std::string, std::size_t> row_of;
    for (const auto& v : vectors)
        for (const auto& [t, w] : v.weights) {
            (void)w;
            row_of.emplace(t, 0);
        }
    if (row_of.empty())
        throw DegenerateDocumentError("document `" + doc.doc_id +
                                      "` has no discriminating terms");

    TermSentenceMatrix tsm;
    tsm.terms.reserve(row_of.size());
    for (auto& [t, row] : row_of) {
        row = tsm.terms.size();
        tsm.terms.push_back(t);
    }
    tsm.matrix = Matrix(tsm.terms.size(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (const auto& [t, w] : vectors[j].weights)
            tsm.matrix(row_of[t], j) = w;
    return tsm;
}

LsaSpace build_lsa_space(const Document& doc, double energy) {
    if (!(energy > 0.0 && energy <= 1.0))
        throw Error("lsa energy must lie in (0,1]");
    const TermSentenceMatrix tsm = term_sentence_matrix(doc);
    SvdResult f = svd(tsm.matrix);

    double total = 0.0;
    for (double s : f.singular_values) total += s * s;
    const std::size_t r = f.singular_values.size();
    std::size_t q = 1;
    double prefix = f.singular_values.empty() ? 0.0 : f.singular_values[0] * f.singular_values[0];
    while (q < r && prefix < energy * total) {
        prefix += f.singular_values[q] * f.singular_values[q];
        ++q;
    }
    if (r >= 2) q = std::max<std::size_t>(q, 2);

    LsaSpace space;
    space.rank_q = q;
    space.sentence_reps = Matrix(q, f.vt.cols());
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < f.vt.cols(); ++j)
            space.sentence_reps(i, j) = f.singular_values[i] * f.vt(i, j);
    space.singular_values = std::move(f.singular_values);
    space.right_vectors = std::move(f.vt);
    return space;
}

double lsa_similarity(const LsaSpace& space, std::size_t i, std::size_t j) {
    const std::size_t m = space.sentence_reps.cols();
    if (i >= m || j >= m)
        throw IndexOutOfRangeError("sentence index out of range: " +
                                   std::to_string(std::max(i, j)) + " >= " +
                                   std::to_string(m));
    double dot = 0.0;
    double ni = 0.0;
    double nj = 0.0;
    for (std::size_t k = 0; k < space.rank_q; ++k) {
        const double a = space.sentence_reps(k, i);
        const double b = space.sentence_reps(k, j);
        dot += a * b;
        ni += a * a;
        nj += b * b;
    }
    if (ni == 0.0 || nj == 0.0) return 0.0;
    const double c = dot / (std::sqrt(ni) * std::sqrt(nj));
    return std::clamp(c, 0.0, 1.0);
}

}  // namespace condensa
