#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "condensa/analyzer.hpp"
#include "condensa/lsa.hpp"

namespace condensa {

enum class Layer { kJac, kVsm, kLsa };

enum class SummaryModel { kJac, kVsm, kLsa, kMls };

const char* to_string(Layer layer);
const char* to_string(SummaryModel model);
/// Parses "jac" / "vsm" / "lsa" / "mls" (case-insensitive).
std::optional<SummaryModel> parse_model(const std::string& name);

struct ExtractorConfig {
    SummaryModel model = SummaryModel::kMls;
    double jac_threshold = 0.5;
    double vsm_threshold = 0.5;
    double lsa_threshold = 0.5;
    double lsa_energy = 0.9;
};

struct Removal {
    std::size_t sent_idx;
    std::size_t duplicate_of;  // the earlier kept sentence it duplicated
    Layer layer;
    double score;
};

struct SummaryResult {
    std::string doc_id;
    std::vector<std::size_t> kept;  // in document order
    std::vector<Removal> removed;
    double condensation_rate = 1.0;  // kept terms / all terms
    std::size_t lsa_invocations = 0;
    std::size_t pairwise_comparisons = 0;
};

struct MlsScore {
    double score;
    Layer layer;
};

/// The layered similarity: the overlap coefficient decides when it reaches
/// its threshold, otherwise the sentence-vector cosine, otherwise the
/// reduced-space similarity (`space` may be null; the last branch then
/// scores 0). Later layers are never evaluated once an earlier one fires.
MlsScore mls_similarity(const Document& doc, const LsaSpace* space, std::size_t i,
                        std::size_t j, const ExtractorConfig& cfg);

/// Deletes repetitive sentences: scanning pairs (i, j), i < j, a sentence j
/// is removed the first time its similarity to a still-kept earlier sentence
/// reaches the active threshold. Removed sentences take no further part.
/// The reduced space is built lazily, only when some pair reaches the last
/// layer.
SummaryResult extract(const Document& doc, const ExtractorConfig& cfg);

/// A document rebuilt from the kept sentences, ids and order preserved.
Document make_summary_document(const Document& src, const SummaryResult& result);

struct CorpusSummary {
    std::vector<SummaryResult> results;
    std::vector<Document> summary_corpus;
    std::size_t total_lsa_invocations = 0;
    std::size_t total_comparisons = 0;
    std::vector<std::string> errors;  // per-document failures, run continues
};

CorpusSummary summarize_corpus(const std::vector<Document>& corpus,
                               const ExtractorConfig& cfg);

/// CSV: doc_id, model, kept, removed, cr, lsa_invocations.
void write_summary_report_csv(const CorpusSummary& summary, SummaryModel model,
                              std::ostream& out);

}  // namespace condensa
