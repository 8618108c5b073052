#include "condensa/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "condensa/errors.hpp"

namespace condensa {

TermSet term_set(const Sentence& s) {
    return TermSet(s.terms.begin(), s.terms.end());
}

double jaccard_overlap(const TermSet& a, const TermSet& b) {
    if (a.empty() || b.empty()) throw EmptySetError();
    const TermSet& small = a.size() <= b.size() ? a : b;
    const TermSet& large = a.size() <= b.size() ? b : a;
    std::size_t common = 0;
    for (const auto& t : small) common += large.count(t);
    return static_cast<double>(common) / static_cast<double>(small.size());
}

std::vector<SentenceVector> sentence_vectors(const Document& doc) {
    const std::size_t n_sentences = doc.sentences.size();
    std::vector<std::map<std::string, std::size_t>> freqs(n_sentences);
    std::map<std::string, std::size_t> sentence_df;
    for (std::size_t i = 0; i < n_sentences; ++i) {
        for (const auto& t : doc.sentences[i].terms) ++freqs[i][t];
        for (const auto& [t, f] : freqs[i]) {
            (void)f;
            ++sentence_df[t];
        }
    }

    std::vector<SentenceVector> vectors(n_sentences);
    for (std::size_t i = 0; i < n_sentences; ++i) {
        for (const auto& [t, f] : freqs[i]) {
            const std::size_t sdf = sentence_df[t];
            if (sdf == n_sentences) continue;  // idf vanishes
            const double w = (1.0 + std::log10(static_cast<double>(f))) *
                             std::log10(static_cast<double>(n_sentences) /
                                        static_cast<double>(sdf));
            vectors[i].weights.emplace(t, w);
        }
    }
    return vectors;
}

double cosine(const SentenceVector& u, const SentenceVector& v) {
    double dot = 0.0;
    const auto& small = u.weights.size() <= v.weights.size() ? u : v;
    const auto& large = u.weights.size() <= v.weights.size() ? v : u;
    for (const auto& [t, w] : small.weights) {
        const auto it = large.weights.find(t);
        if (it != large.weights.end()) dot += w * it->second;
    }
    if (dot == 0.0) return 0.0;
    double nu = 0.0;
    double nv = 0.0;
    for (const auto& [t, w] : u.weights) nu += w * w;
    for (const auto& [t, w] : v.weights) nv += w * w;
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

}  // namespace condensa
