// condensa: extractive summarization, inverted indexing, ranked retrieval
// and relevancy evaluation from one binary.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 numerical
// failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "condensa/errors.hpp"
#include "condensa/eval.hpp"
#include "condensa/harness.hpp"
#include "condensa/index.hpp"
#include "condensa/retrieval.hpp"
#include "condensa/summarizer.hpp"

namespace fs = std::filesystem;

namespace {

struct AnalyzerOption {
    std::string config_path;

    condensa::AnalyzerConfig resolve() const {
        return config_path.empty() ? condensa::AnalyzerConfig{}
                                   : condensa::AnalyzerConfig::from_file(config_path);
    }
};

void add_analyzer_option(CLI::App* cmd, AnalyzerOption& opt) {
    cmd->add_option("--config", opt.config_path,
                    "Analyzer config file (stopwords, stemmer, min_token_len)");
}

condensa::InterpMode parse_interp(const std::string& s) {
    if (s == "paper") return condensa::InterpMode::kWindowed;
    if (s == "standard") return condensa::InterpMode::kStandard;
    throw CLI::ValidationError("--interp", "must be `paper` or `standard`");
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw condensa::IoError("cannot write " + path.string());
    out << content;
    if (!out) throw condensa::IoError("write failed: " + path.string());
}

int run(int argc, char** argv) {
    CLI::App app{"condensa: summary-based inverted indexing and retrieval"};
    app.require_subcommand(1);

    // --- summarize ---
    auto* sum = app.add_subcommand("summarize",
                                   "Summarize a corpus by deleting repetitive sentences");
    std::string sum_model = "mls";
    std::string sum_input;
    std::string sum_output;
    std::string sum_report;
    condensa::ExtractorConfig sum_cfg;
    AnalyzerOption sum_analyzer;
    sum->add_option("--model", sum_model, "jac | vsm | lsa | mls")
        ->capture_default_str();
    sum->add_option("--input", sum_input, "Corpus directory of *.txt files")
        ->required();
    sum->add_option("--output", sum_output, "Directory for summary text files")
        ->required();
    sum->add_option("--report", sum_report, "Per-document report CSV path");
    sum->add_option("--jac-th", sum_cfg.jac_threshold, "First-layer threshold")
        ->capture_default_str();
    sum->add_option("--vsm-th", sum_cfg.vsm_threshold, "Second-layer threshold")
        ->capture_default_str();
    sum->add_option("--lsa-th", sum_cfg.lsa_threshold, "Third-layer threshold")
        ->capture_default_str();
    sum->add_option("--lsa-energy", sum_cfg.lsa_energy,
                    "Spectral energy kept by the reduced space")
        ->capture_default_str();
    add_analyzer_option(sum, sum_analyzer);

    // --- index ---
    auto* idx = app.add_subcommand("index", "Build an inverted index from a corpus");
    std::string idx_corpus;
    std::string idx_out;
    bool idx_stats = false;
    AnalyzerOption idx_analyzer;
    idx->add_option("--corpus", idx_corpus, "Corpus directory of *.txt files")
        ->required();
    idx->add_option("--out", idx_out, "Index file to write")->required();
    idx->add_flag("--stats", idx_stats, "Print term and posting counts");
    add_analyzer_option(idx, idx_analyzer);

    // --- search ---
    auto* srch = app.add_subcommand("search", "Run queries against an index");
    std::string srch_index;
    std::string srch_queries;
    std::string srch_out;
    std::size_t srch_top_k = 0;
    unsigned srch_threads = 1;
    AnalyzerOption srch_analyzer;
    srch->add_option("--index", srch_index, "Index file")->required();
    srch->add_option("--queries", srch_queries, "query_id<TAB>text file")->required();
    srch->add_option("--out", srch_out, "Run file to write")->required();
    srch->add_option("--top-k", srch_top_k, "Keep only the best k documents");
    srch->add_option("--threads", srch_threads, "Score queries concurrently")
        ->capture_default_str();
    add_analyzer_option(srch, srch_analyzer);

    // --- eval ---
    auto* ev = app.add_subcommand("eval", "Score a run file against judgments");
    std::string ev_run;
    std::string ev_qrels;
    std::string ev_out;
    std::string ev_prefix = "eval";
    std::string ev_interp = "paper";
    ev->add_option("--run", ev_run, "Run file")->required();
    ev->add_option("--qrels", ev_qrels, "query_id<TAB>doc_id judgments")->required();
    ev->add_option("--out", ev_out, "Output directory")->required();
    ev->add_option("--prefix", ev_prefix, "Output file prefix")
        ->capture_default_str();
    ev->add_option("--interp", ev_interp, "paper | standard")
        ->capture_default_str();

    // --- experiment ---
    auto* exp = app.add_subcommand(
        "experiment", "Build all indexes, search, evaluate and report");
    std::string exp_corpus;
    std::string exp_queries;
    std::string exp_qrels;
    std::string exp_assessment = "auto-mc";
    std::string exp_models = "jac,vsm,lsa,mls";
    std::string exp_out;
    std::size_t exp_top_k = 0;
    std::string exp_interp = "paper";
    unsigned exp_threads = 1;
    condensa::ExtractorConfig exp_extractor;
    AnalyzerOption exp_analyzer;
    exp->add_option("--corpus", exp_corpus, "Corpus directory")->required();
    exp->add_option("--queries", exp_queries, "Queries file")->required();
    exp->add_option("--qrels", exp_qrels, "Manual judgments (with --assessment manual)");
    exp->add_option("--assessment", exp_assessment, "manual | auto-mc")
        ->capture_default_str();
    exp->add_option("--models", exp_models, "Comma list of jac,vsm,lsa,mls")
        ->capture_default_str();
    exp->add_option("--out", exp_out, "Output directory")->required();
    exp->add_option("--top-k", exp_top_k, "Truncate every retrieved list");
    exp->add_option("--interp", exp_interp, "paper | standard")
        ->capture_default_str();
    exp->add_option("--threads", exp_threads, "Concurrent query scoring")
        ->capture_default_str();
    exp->add_option("--jac-th", exp_extractor.jac_threshold, "First-layer threshold")
        ->capture_default_str();
    exp->add_option("--vsm-th", exp_extractor.vsm_threshold, "Second-layer threshold")
        ->capture_default_str();
    exp->add_option("--lsa-th", exp_extractor.lsa_threshold, "Third-layer threshold")
        ->capture_default_str();
    exp->add_option("--lsa-energy", exp_extractor.lsa_energy,
                    "Spectral energy kept by the reduced space")
        ->capture_default_str();
    add_analyzer_option(exp, exp_analyzer);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (sum->parsed()) {
        const auto model = condensa::parse_model(sum_model);
        if (!model) throw CLI::ValidationError("--model", "must be jac|vsm|lsa|mls");
        sum_cfg.model = *model;
        const auto corpus = condensa::load_corpus(sum_input, sum_analyzer.resolve());
        const auto summary = condensa::summarize_corpus(corpus, sum_cfg);
        fs::create_directories(sum_output);
        for (const auto& doc : summary.summary_corpus)
            write_text(fs::path(sum_output) / (doc.doc_id + ".txt"), doc.text + "\n");
        if (!sum_report.empty()) {
            std::ostringstream csv;
            condensa::write_summary_report_csv(summary, *model, csv);
            write_text(sum_report, csv.str());
        }
        for (const auto& e : summary.errors) std::cerr << "warning: " << e << "\n";
        std::cout << "summarized " << summary.results.size() << " documents ("
                  << summary.total_lsa_invocations << " reduced-space runs)\n";
        return 0;
    }

    if (idx->parsed()) {
        const auto corpus = condensa::load_corpus(idx_corpus, idx_analyzer.resolve());
        const auto index = condensa::build_index(corpus);
        condensa::save_index(index, idx_out);
        if (idx_stats) {
            const auto stats = condensa::index_stats(index);
            std::cout << "documents: " << index.n_docs << "\n"
                      << "distinct_terms: " << stats.distinct_terms << "\n"
                      << "total_postings: " << stats.total_postings << "\n";
        }
        return 0;
    }

    if (srch->parsed()) {
        const auto index = condensa::load_index(srch_index);
        const auto queries =
            condensa::load_queries(srch_queries, srch_analyzer.resolve());
        const auto runs = condensa::batch_search(
            queries, index,
            srch_top_k ? std::optional<std::size_t>(srch_top_k) : std::nullopt,
            srch_threads);
        condensa::write_run_file(runs, srch_out);
        return 0;
    }

    if (ev->parsed()) {
        const auto runs = condensa::load_run_file(ev_run);
        const auto qrels = condensa::load_qrels(ev_qrels);
        const auto report = condensa::evaluate_run(runs, qrels, parse_interp(ev_interp));
        fs::create_directories(ev_out);
        std::ostringstream per_query;
        condensa::write_per_query_csv(report, per_query);
        write_text(fs::path(ev_out) / (ev_prefix + "_per_query.csv"), per_query.str());
        std::ostringstream aggregate;
        condensa::write_aggregate_csv(report, aggregate);
        write_text(fs::path(ev_out) / (ev_prefix + "_aggregate.csv"), aggregate.str());
        std::ostringstream curve;
        condensa::write_curve_csv(report, curve);
        write_text(fs::path(ev_out) / (ev_prefix + "_curve.csv"), curve.str());
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << "map " << report.map << ", recall " << report.mean_recall
                  << " over " << report.per_query.size() << " queries\n";
        return 0;
    }

    // experiment
    condensa::ExperimentConfig cfg;
    cfg.corpus_dir = exp_corpus;
    cfg.queries_path = exp_queries;
    if (!exp_qrels.empty()) cfg.qrels_path = exp_qrels;
    if (exp_assessment == "manual")
        cfg.assessment = condensa::Assessment::kManual;
    else if (exp_assessment == "auto-mc")
        cfg.assessment = condensa::Assessment::kAutoMc;
    else
        throw CLI::ValidationError("--assessment", "must be `manual` or `auto-mc`");
    std::stringstream models(exp_models);
    std::string token;
    while (std::getline(models, token, ',')) {
        if (token.empty()) continue;
        const auto model = condensa::parse_model(token);
        if (!model)
            throw CLI::ValidationError("--models", "unknown model `" + token + "`");
        cfg.models.push_back(*model);
    }
    cfg.extractor = exp_extractor;
    cfg.analyzer = exp_analyzer.resolve();
    cfg.output_dir = exp_out;
    if (exp_top_k) cfg.top_k = exp_top_k;
    cfg.interp = parse_interp(exp_interp);
    cfg.threads = exp_threads;

    const auto report = condensa::run_experiment(cfg);
    for (const auto& line : report.log) std::cerr << line << "\n";
    std::cout << "index,distinct_terms,ratio_to_baseline,map,recall\n";
    for (const auto& ia : report.indexes) {
        std::cout << ia.name << "," << ia.stats.distinct_terms << ",";
        if (ia.stats.ratio_to_baseline) std::cout << *ia.stats.ratio_to_baseline;
        std::cout << "," << ia.eval.map << "," << ia.eval.mean_recall << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const condensa::NoConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const condensa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
