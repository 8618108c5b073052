#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condensa/analyzer.hpp"
#include "condensa/index.hpp"

namespace condensa {

struct Query {
    std::string query_id;
    std::string text;
    std::vector<std::string> terms;  // analyzed with the corpus analyzer config
};

struct Hit {
    std::string doc_id;
    double score;      // in (0, 1]
    std::size_t rank;  // 1-based
};

/// Scores sorted non-increasing, ties broken by ascending doc_id, ranks
/// consecutive from 1. Zero-score documents never appear.
struct RankedList {
    std::string query_id;
    std::vector<Hit> hits;
};

Query make_query(std::string query_id, std::string text, const AnalyzerConfig& cfg);

/// Unit-length query vector using query-internal tf and the index's N and
/// df; terms missing from the index are dropped (possibly leaving a zero
/// vector).
std::map<std::string, double> query_vector(const Query& q, const InvertedIndex& idx);

/// Cosine retrieval over the inverted index: every positive-score document,
/// best first, optionally truncated to top_k.
RankedList search(const Query& q, const InvertedIndex& idx,
                  std::optional<std::size_t> top_k = std::nullopt);

/// Element-wise search, output order following input order. `threads` > 1
/// scores queries concurrently (the index is read-only).
std::vector<RankedList> batch_search(const std::vector<Query>& queries,
                                     const InvertedIndex& idx,
                                     std::optional<std::size_t> top_k = std::nullopt,
                                     unsigned threads = 1);

/// TREC-like run file: query_id <tab> doc_id <tab> rank <tab> score.
void write_run_file(const std::vector<RankedList>& runs, std::ostream& out);
void write_run_file(const std::vector<RankedList>& runs, const std::string& path);
std::vector<RankedList> load_run_file(std::istream& in,
                                      const std::string& name = "<stream>");
std::vector<RankedList> load_run_file(const std::string& path);

}  // namespace condensa
