#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condensa/analyzer.hpp"

namespace condensa {

struct Posting {
    std::string doc_id;
    double weight;  // length-normalized, always > 0
};

/// term -> (df, postings) over a corpus, with weights already divided by the
/// document's Euclidean length so a query-document dot product is a cosine.
struct InvertedIndex {
    struct TermEntry {
        std::size_t df = 0;
        std::vector<Posting> postings;  // sorted by doc_id
    };

    std::size_t n_docs = 0;
    std::map<std::string, TermEntry> terms;   // sortedterm order
    std::map<std::string, double> doc_norms;  // pre-normalization lengths
};

/// tf-idf weight (1 + log10 f) * log10(N / df); 0 when f = 0 or df = N.
/// Throws InvalidStatsError unless 1 <= df <= N whenever f > 0.
double term_weight(std::size_t f, std::size_t n_docs, std::size_t df);

/// Indexes whole-document term frequencies. Terms appearing in every
/// document weigh zero everywhere and are omitted; each document's weight
/// vector is normalized to unit length.
InvertedIndex build_index(const std::vector<Document>& corpus);

void save_index(const InvertedIndex& idx, std::ostream& out);
void save_index(const InvertedIndex& idx, const std::string& path);
InvertedIndex load_index(std::istream& in, const std::string& name = "<stream>");
InvertedIndex load_index(const std::string& path);

struct IndexStats {
    std::size_t distinct_terms = 0;
    std::size_t total_postings = 0;
    std::optional<double> ratio_to_baseline;
};

/// Size statistics; the ratio compares distinct-term counts against the
/// baseline index when one is supplied.
IndexStats index_stats(const InvertedIndex& idx,
                       const InvertedIndex* baseline = nullptr);

}  // namespace condensa
