#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "condensa/errors.hpp"
#include "condensa/harness.hpp"
#include "support/synth.hpp"

namespace fs = std::filesystem;

using condensa::AnalyzerConfig;
using condensa::Assessment;
using condensa::ExperimentConfig;
using condensa::ExperimentReport;
using condensa::load_corpus;
using condensa::load_queries;
using condensa::load_qrels;
using condensa::SummaryModel;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("condensa_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_synth_corpus(const fs::path& dir,
                        const std::vector<condensa::testing::SynthDoc>& docs) {
    for (const auto& d : docs) write(dir / (d.doc_id + ".txt"), d.text + "\n");
}

}  // namespace

TEST_CASE("load_corpus reads txt files in lexicographic order") {
    TempDir tmp("corpus");
    write(tmp.path / "b.txt", "Bravo delta echo.");
    write(tmp.path / "a.txt", "Alpha charlie golf.");
    write(tmp.path / "notes.md", "ignored");

    AnalyzerConfig cfg;
    const auto corpus = load_corpus(tmp.path.string(), cfg);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0].doc_id == "a");
    CHECK(corpus[1].doc_id == "b");
    CHECK(corpus[0].sentences.size() == 1);
}

TEST_CASE("load_corpus edge cases") {
    AnalyzerConfig cfg;
    TempDir tmp("empty");
    CHECK_THROWS_AS(load_corpus(tmp.path.string(), cfg),
                    condensa::EmptyCorpusDirError);
    CHECK_THROWS_AS(load_corpus((tmp.path / "nope").string(), cfg),
                    condensa::IoError);

    write(tmp.path / "good1.txt", "First file here.");
    write(tmp.path / "bad.txt", "broken \xff\xfe bytes");
    write(tmp.path / "good2.txt", "Second file here.");
    std::vector<std::string> skipped;
    const auto corpus = load_corpus(tmp.path.string(), cfg, &skipped);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0].doc_id == "good1");
    CHECK(corpus[1].doc_id == "good2");
    REQUIRE(skipped.size() == 1);
    CHECK(skipped[0].find("bad.txt") != std::string::npos);

    // A UTF-8 BOM is stripped, not treated as text.
    write(tmp.path / "bom.txt", "\xEF\xBB\xBF" "Bom file content.");
    const auto with_bom = load_corpus(tmp.path.string(), cfg, nullptr);
    REQUIRE(with_bom.size() == 3);
    CHECK(with_bom[0].doc_id == "bom");
    CHECK(with_bom[0].sentences[0].raw.rfind("Bom", 0) == 0);
}

TEST_CASE("load_queries analyzes with the corpus config") {
    TempDir tmp("queries");
    write(tmp.path / "q.tsv", "3\tcomputer engineering\n7\tthe running cats\n");
    AnalyzerConfig cfg;
    const auto queries = load_queries((tmp.path / "q.tsv").string(), cfg);
    REQUIRE(queries.size() == 2);
    CHECK(queries[0].query_id == "3");
    CHECK(queries[0].terms == std::vector<std::string>{"comput", "engin"});
    CHECK(queries[1].terms == std::vector<std::string>{"run", "cat"});

    write(tmp.path / "bad.tsv", "3\tok\nno tab here\n");
    try {
        load_queries((tmp.path / "bad.tsv").string(), cfg);
        FAIL("expected FormatError");
    } catch (const condensa::FormatError& e) {
        CHECK(e.line() == 2);
    }
    write(tmp.path / "dup.tsv", "3\ta\n3\tb\n");
    CHECK_THROWS_AS(load_queries((tmp.path / "dup.tsv").string(), cfg),
                    condensa::FormatError);
}

TEST_CASE("load_qrels groups judgments") {
    TempDir tmp("qrels");
    write(tmp.path / "r.tsv", "3\td14\n3\td24\n9\td7\n");
    const auto qrels = load_qrels((tmp.path / "r.tsv").string());
    CHECK(qrels.judgments.at("3") == std::set<std::string>{"d14", "d24"});
    CHECK(qrels.judgments.at("9") == std::set<std::string>{"d7"});

    write(tmp.path / "bad.tsv", "3\td14\nmissing-tab\n");
    try {
        load_qrels((tmp.path / "bad.tsv").string());
        FAIL("expected FormatError");
    } catch (const condensa::FormatError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("auto-mc experiment: the main corpus evaluates itself perfectly") {
    TempDir corpus_dir("exp_corpus");
    TempDir out_dir("exp_out");
    write_synth_corpus(corpus_dir.path,
                       condensa::testing::redundant_corpus(515, 10));
    std::string queries_text;
    for (const auto& [qid, text] : condensa::testing::random_queries(516, 6, 2000))
        queries_text += qid + "\t" + text + "\n";
    write(corpus_dir.path / "queries.tsv", queries_text);

    ExperimentConfig cfg;
    cfg.corpus_dir = corpus_dir.path.string();
    cfg.queries_path = (corpus_dir.path / "queries.tsv").string();
    cfg.assessment = Assessment::kAutoMc;
    cfg.models = {SummaryModel::kMls, SummaryModel::kLsa, SummaryModel::kVsm,
                  SummaryModel::kJac};
    cfg.output_dir = out_dir.path.string();

    const ExperimentReport report = condensa::run_experiment(cfg);

    REQUIRE(report.indexes.size() == 5);
    CHECK(report.indexes[0].name == "mc");
    CHECK(report.auto_assessed);
    if (!report.qrels.judgments.empty()) {
        CHECK(report.indexes[0].eval.map == 1.0);
        CHECK(report.indexes[0].eval.mean_recall == 1.0);
    }

    // Every summary index shrinks or holds the vocabulary.
    for (std::size_t i = 1; i < report.indexes.size(); ++i) {
        REQUIRE(report.indexes[i].stats.ratio_to_baseline.has_value());
        CHECK(*report.indexes[i].stats.ratio_to_baseline <= 1.0);
    }

    // The cascade never runs the reduced space more often than pure LSA.
    std::size_t mls_inv = 0;
    std::size_t lsa_inv = 0;
    for (const auto& ia : report.indexes) {
        if (ia.name == "mls") mls_inv = ia.summary->total_lsa_invocations;
        if (ia.name == "lsa") lsa_inv = ia.summary->total_lsa_invocations;
    }
    CHECK(mls_inv <= lsa_inv);

    // Manifest names real files (directories for the summary corpora).
    for (const auto& [role, path] : report.manifest) {
        INFO(role << " -> " << path);
        CHECK(fs::exists(path));
    }

    // Curve files carry exactly 11 rows.
    const std::string curve = slurp(out_dir.path / "curve_mls.csv");
    CHECK(std::count(curve.begin(), curve.end(), '\n') == 11);
}

TEST_CASE("models list empty: only the main corpus index") {
    TempDir corpus_dir("exp_small");
    TempDir out_dir("exp_small_out");
    write(corpus_dir.path / "a.txt", "Kamu bona ruta. Vizo nuka tori.");
    write(corpus_dir.path / "b.txt", "Bona ruta kamu pima.");
    write(corpus_dir.path / "q.tsv", "1\tkamu ruta\n");

    ExperimentConfig cfg;
    cfg.corpus_dir = corpus_dir.path.string();
    cfg.queries_path = (corpus_dir.path / "q.tsv").string();
    cfg.output_dir = out_dir.path.string();

    const ExperimentReport report = condensa::run_experiment(cfg);
    REQUIRE(report.indexes.size() == 1);
    CHECK(report.indexes[0].name == "mc");
}

TEST_CASE("manual assessment uses the qrels file") {
    TempDir corpus_dir("exp_manual");
    write(corpus_dir.path / "a.txt", "Kamu bona ruta.");
    write(corpus_dir.path / "b.txt", "Kamu pima zuva.");
    write(corpus_dir.path / "q.tsv", "1\tkamu\n");
    write(corpus_dir.path / "qrels.tsv", "1\ta\n");

    ExperimentConfig cfg;
    cfg.corpus_dir = corpus_dir.path.string();
    cfg.queries_path = (corpus_dir.path / "q.tsv").string();
    cfg.assessment = Assessment::kManual;
    cfg.qrels_path = (corpus_dir.path / "qrels.tsv").string();

    const ExperimentReport report = condensa::run_experiment(cfg);
    const auto& mc = report.indexes[0];
    // Both docs contain "kamu" so it is annihilated (df = N); nothing is
    // retrieved and the judged query scores zero.
    CHECK(mc.eval.per_query.at("1").recall == 0.0);

    ExperimentConfig broken = cfg;
    broken.qrels_path.reset();
    CHECK_THROWS_AS(condensa::run_experiment(broken), condensa::Error);
}

TEST_CASE("experiments re-run byte-identically apart from metadata") {
    TempDir corpus_dir("exp_det");
    TempDir out_a("exp_det_a");
    TempDir out_b("exp_det_b");
    write_synth_corpus(corpus_dir.path, condensa::testing::redundant_corpus(616, 8));
    std::string queries_text;
    for (const auto& [qid, text] : condensa::testing::random_queries(617, 5, 2000))
        queries_text += qid + "\t" + text + "\n";
    write(corpus_dir.path / "queries.tsv", queries_text);

    ExperimentConfig cfg;
    cfg.corpus_dir = corpus_dir.path.string();
    cfg.queries_path = (corpus_dir.path / "queries.tsv").string();
    cfg.models = {SummaryModel::kMls, SummaryModel::kJac};

    cfg.output_dir = out_a.path.string();
    const ExperimentReport ra = condensa::run_experiment(cfg);
    cfg.output_dir = out_b.path.string();
    const ExperimentReport rb = condensa::run_experiment(cfg);

    REQUIRE(ra.manifest.size() == rb.manifest.size());
    for (std::size_t i = 0; i < ra.manifest.size(); ++i) {
        const auto& [role, path_a] = ra.manifest[i];
        const auto& [role_b, path_b] = rb.manifest[i];
        CHECK(role == role_b);
        if (role == "metadata" || role == "manifest") continue;
        if (fs::is_directory(path_a)) {
            REQUIRE(fs::is_directory(path_b));
            for (const auto& entry : fs::directory_iterator(path_a)) {
                const fs::path other = fs::path(path_b) / entry.path().filename();
                INFO(entry.path());
                CHECK(slurp(entry.path()) == slurp(other));
            }
            continue;
        }
        INFO(role);
        CHECK(slurp(path_a) == slurp(path_b));
    }
}
