#include "condensa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "condensa/errors.hpp"
#include "condensa/format.hpp"

namespace fs = std::filesystem;

namespace condensa {

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

void strip_bom(std::string& text) {
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0)
        text.erase(0, 3);
}

}  // namespace

std::vector<Document> load_corpus(const std::string& dir, const AnalyzerConfig& cfg,
                                  std::vector<std::string>* skipped) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw EmptyCorpusDirError(dir);

    std::vector<Document> corpus;
    std::set<std::string> seen;
    for (const auto& path : files) {
        std::string text;
        try {
            text = read_file(path);
        } catch (const IoError& e) {
            if (skipped) skipped->push_back(std::string(e.what()));
            continue;
        }
        strip_bom(text);
        if (!utf8_valid(text)) {
            if (skipped)
                skipped->push_back(path.string() + ": not valid UTF-8, skipped");
            continue;
        }
        const std::string doc_id = path.stem().string();
        if (!seen.insert(doc_id).second) throw DuplicateDocIdError(doc_id);
        corpus.push_back(make_document(doc_id, std::move(text), cfg));
    }
    if (corpus.empty()) throw EmptyCorpusDirError(dir);
    return corpus;
}

std::vector<Query> load_queries(const std::string& path, const AnalyzerConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open queries file: " + path);
    std::vector<Query> queries;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw FormatError("expected `query_id<TAB>text` in " + path, lineno);
        std::string id = line.substr(0, tab);
        if (!seen.insert(id).second)
            throw FormatError("duplicate query id `" + id + "` in " + path, lineno);
        queries.push_back(make_query(std::move(id), line.substr(tab + 1), cfg));
    }
    return queries;
}

QRels load_qrels(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open qrels file: " + path);
    QRels qrels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw FormatError("expected `query_id<TAB>doc_id` in " + path, lineno);
        qrels.judgments[line.substr(0, tab)].insert(line.substr(tab + 1));
    }
    return qrels;
}

namespace {

std::string stats_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "index,distinct_terms,total_postings,ratio_to_baseline\n";
    for (const auto& ia : report.indexes) {
        out << ia.name << "," << ia.stats.distinct_terms << ","
            << ia.stats.total_postings << ",";
        if (ia.stats.ratio_to_baseline) out << g17(*ia.stats.ratio_to_baseline);
        out << "\n";
    }
    return out.str();
}

std::string totals_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "model,lsa_invocations,pairwise_comparisons,failed_documents\n";
    for (const auto& ia : report.indexes) {
        if (!ia.summary) continue;
        out << ia.name << "," << ia.summary->total_lsa_invocations << ","
            << ia.summary->total_comparisons << "," << ia.summary->errors.size()
            << "\n";
    }
    return out.str();
}

std::string timestamp_utc() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void emit_reports(ExperimentReport& report, const std::string& output_dir) {
    const fs::path out(output_dir);
    fs::create_directories(out);
    report.manifest.clear();
    const auto add = [&](const std::string& role, const fs::path& path) {
        report.manifest.emplace_back(role, path.string());
    };

    for (const auto& ia : report.indexes) {
        const fs::path run_path = out / ("run_" + ia.name + ".tsv");
        write_run_file(ia.runs, run_path.string());
        add("run_" + ia.name, run_path);

        const fs::path idx_path = out / ("index_" + ia.name + ".idx");
        save_index(ia.index, idx_path.string());
        add("index_" + ia.name, idx_path);

        std::ostringstream per_query;
        write_per_query_csv(ia.eval, per_query);
        const fs::path eval_path = out / ("eval_" + ia.name + ".csv");
        write_file(eval_path, per_query.str());
        add("eval_" + ia.name, eval_path);

        std::ostringstream aggregate;
        write_aggregate_csv(ia.eval, aggregate);
        const fs::path agg_path = out / ("aggregate_" + ia.name + ".csv");
        write_file(agg_path, aggregate.str());
        add("aggregate_" + ia.name, agg_path);

        std::ostringstream curve;
        write_curve_csv(ia.eval, curve);
        const fs::path curve_path = out / ("curve_" + ia.name + ".csv");
        write_file(curve_path, curve.str());
        add("curve_" + ia.name, curve_path);

        if (ia.summary) {
            const SummaryModel model = *parse_model(ia.name);
            std::ostringstream summary_csv;
            write_summary_report_csv(*ia.summary, model, summary_csv);
            const fs::path report_path =
                out / ("summarizer_report_" + ia.name + ".csv");
            write_file(report_path, summary_csv.str());
            add("summarizer_report_" + ia.name, report_path);

            const fs::path dir = out / ("summaries_" + ia.name);
            fs::create_directories(dir);
            for (const auto& doc : ia.summary->summary_corpus)
                write_file(dir / (doc.doc_id + ".txt"), doc.text + "\n");
            add("summary_corpus_" + ia.name, dir);
        }
    }

    write_file(out / "stats.csv", stats_csv(report));
    add("stats", out / "stats.csv");
    write_file(out / "summarizer_totals.csv", totals_csv(report));
    add("summarizer_totals", out / "summarizer_totals.csv");

    if (report.auto_assessed) {
        std::ostringstream qr;
        write_qrels(report.qrels, qr);
        write_file(out / "qrels_auto.tsv", qr.str());
        add("qrels_auto", out / "qrels_auto.tsv");
    }

    {
        std::ostringstream log;
        for (const auto& line : report.log) log << line << "\n";
        write_file(out / "experiment_log.txt", log.str());
        add("log", out / "experiment_log.txt");
    }
    {
        std::ostringstream meta;
        meta << "generated_at: " << timestamp_utc() << "\n" << report.config_echo;
        write_file(out / "experiment_meta.txt", meta.str());
        add("metadata", out / "experiment_meta.txt");
    }

    std::ostringstream manifest;
    for (const auto& [role, path] : report.manifest)
        manifest << role << "\t" << path << "\n";
    manifest << "manifest\t" << (out / "manifest.tsv").string() << "\n";
    write_file(out / "manifest.tsv", manifest.str());
    report.manifest.emplace_back("manifest", (out / "manifest.tsv").string());
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.assessment == Assessment::kManual && !cfg.qrels_path)
        throw Error("manual assessment requires a qrels file");

    ExperimentReport report;

    std::vector<std::string> skipped;
    const std::vector<Document> corpus =
        load_corpus(cfg.corpus_dir, cfg.analyzer, &skipped);
    for (const auto& s : skipped) report.log.push_back("corpus: " + s);

    const std::vector<Query> queries = load_queries(cfg.queries_path, cfg.analyzer);

    IndexArtifacts mc;
    mc.name = "mc";
    mc.index = build_index(corpus);
    mc.runs = batch_search(queries, mc.index, cfg.top_k, cfg.threads);

    if (cfg.assessment == Assessment::kManual) {
        report.qrels = load_qrels(*cfg.qrels_path);
    } else {
        AutoQrels aq = auto_qrels(mc.runs);
        report.qrels = std::move(aq.qrels);
        report.auto_assessed = true;
        for (const auto& q : aq.excluded)
            report.log.push_back("auto qrels: query `" + q +
                                 "` retrieved nothing from the main corpus; excluded");
    }

    mc.eval = evaluate_run(mc.runs, report.qrels, cfg.interp);
    mc.stats = index_stats(mc.index, &mc.index);
    for (const auto& w : mc.eval.warnings) report.log.push_back("eval mc: " + w);
    report.indexes.reserve(cfg.models.size() + 1);
    report.indexes.push_back(std::move(mc));

    for (const SummaryModel model : cfg.models) {
        const std::string name = to_string(model);
        try {
            ExtractorConfig ecfg = cfg.extractor;
            ecfg.model = model;
            IndexArtifacts ia;
            ia.name = name;
            ia.summary = summarize_corpus(corpus, ecfg);
            for (const auto& e : ia.summary->errors)
                report.log.push_back("summarize " + name + ": " + e);
            ia.index = build_index(ia.summary->summary_corpus);
            ia.runs = batch_search(queries, ia.index, cfg.top_k, cfg.threads);
            ia.eval = evaluate_run(ia.runs, report.qrels, cfg.interp);
            ia.stats = index_stats(ia.index, &report.indexes.front().index);
            for (const auto& w : ia.eval.warnings)
                report.log.push_back("eval " + name + ": " + w);
            report.indexes.push_back(std::move(ia));
        } catch (const Error& e) {
            report.log.push_back("index " + name + " failed: " + e.what() +
                                 "; skipped");
        }
    }

    {
        std::ostringstream echo;
        echo << "corpus_dir: " << cfg.corpus_dir << "\n";
        echo << "queries: " << cfg.queries_path << "\n";
        echo << "assessment: "
             << (cfg.assessment == Assessment::kManual ? "manual" : "auto-mc") << "\n";
        if (cfg.qrels_path) echo << "qrels: " << *cfg.qrels_path << "\n";
        echo << "models:";
        for (const auto m : cfg.models) echo << " " << to_string(m);
        echo << "\n";
        echo << "jac_threshold: " << g17(cfg.extractor.jac_threshold) << "\n";
        echo << "vsm_threshold: " << g17(cfg.extractor.vsm_threshold) << "\n";
        echo << "lsa_threshold: " << g17(cfg.extractor.lsa_threshold) << "\n";
        echo << "lsa_energy: " << g17(cfg.extractor.lsa_energy) << "\n";
        if (cfg.top_k) echo << "top_k: " << *cfg.top_k << "\n";
        echo << "interp: "
             << (cfg.interp == InterpMode::kWindowed ? "paper" : "standard") << "\n";
        echo << "documents: " << corpus.size() << "\n";
        echo << "queries_count: " << queries.size() << "\n";
        report.config_echo = echo.str();
    }

    if (!cfg.output_dir.empty()) emit_reports(report, cfg.output_dir);
    return report;
}

}  // namespace condensa
