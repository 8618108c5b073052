#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condensa/analyzer.hpp"
#include "condensa/eval.hpp"
#include "condensa/index.hpp"
#include "condensa/retrieval.hpp"
#include "condensa/summarizer.hpp"

namespace condensa {

enum class Assessment { kManual, kAutoMc };

struct ExperimentConfig {
    std::string corpus_dir;
    std::string queries_path;
    std::optional<std::string> qrels_path;  // required for manual assessment
    Assessment assessment = Assessment::kAutoMc;
    std::vector<SummaryModel> models;  // summary indexes to build, in order
    ExtractorConfig extractor;         // thresholds; model is set per run
    AnalyzerConfig analyzer;
    std::string output_dir;  // empty: compute only, write nothing
    std::optional<std::size_t> top_k;
    InterpMode interp = InterpMode::kWindowed;
    unsigned threads = 1;
};

/// Everything produced for one index: the index itself, its run, its
/// evaluation and its size statistics. Summary indexes also carry the
/// extraction results behind them.
struct IndexArtifacts {
    std::string name;  // "mc", "mls", "lsa", "vsm", "jac"
    InvertedIndex index;
    std::vector<RankedList> runs;
    EvalReport eval;
    IndexStats stats;
    std::optional<CorpusSummary> summary;
};

struct ExperimentReport {
    std::vector<IndexArtifacts> indexes;  // the main-corpus entry comes first
    QRels qrels;
    bool auto_assessed = false;
    std::vector<std::string> log;  // skipped files, excluded queries, warnings
    std::vector<std::pair<std::string, std::string>> manifest;  // role -> path
    std::string config_echo;
};

/// One Document per *.txt file (doc_id = filename stem), ingested in
/// lexicographic order. Unreadable or non-UTF-8 files are logged into
/// `skipped` and dropped. Throws EmptyCorpusDirError when nothing loads.
std::vector<Document> load_corpus(const std::string& dir, const AnalyzerConfig& cfg,
                                  std::vector<std::string>* skipped = nullptr);

/// Queries file: `query_id<TAB>query text`, analyzed with the corpus config.
std::vector<Query> load_queries(const std::string& path, const AnalyzerConfig& cfg);

/// Qrels file: `query_id<TAB>doc_id`, grouped per query.
QRels load_qrels(const std::string& path);

/// Builds the main-corpus index plus one summary index per configured
/// model, searches all queries against every index, evaluates against the
/// manual qrels or against the main-corpus run, and (when an output
/// directory is set) writes every report file and the manifest.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Writes run files, evaluation CSVs, curve CSVs, index files, size
/// statistics, summarizer reports, summary corpora and manifest.tsv.
void emit_reports(ExperimentReport& report, const std::string& output_dir);

}  // namespace condensa
