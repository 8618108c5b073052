#include "condensa/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "condensa/errors.hpp"
#include "condensa/format.hpp"

namespace condensa {

Query make_query(std::string query_id, std::string text, const AnalyzerConfig& cfg) {
    Query q;
    q.query_id = std::move(query_id);
    q.terms = analyze(text, cfg);
    q.text = std::move(text);
    return q;
}

std::map<std::string, double> query_vector(const Query& q, const InvertedIndex& idx) {
    std::map<std::string, std::size_t> freqs;
    for (const auto& t : q.terms) ++freqs[t];

    std::map<std::string, double> vec;
    double norm2 = 0.0;
    for (const auto& [t, f] : freqs) {
        const auto it = idx.terms.find(t);
        if (it == idx.terms.end()) continue;
        const double w = term_weight(f, idx.n_docs, it->second.df);
        if (w <= 0.0) continue;
        vec.emplace(t, w);
        norm2 += w * w;
    }
    if (norm2 > 0.0) {
        const double norm = std::sqrt(norm2);
        for (auto& [t, w] : vec) w /= norm;
    }
    return vec;
}

RankedList search(const Query& q, const InvertedIndex& idx,
                  std::optional<std::size_t> top_k) {
    RankedList out;
    out.query_id = q.query_id;

    const std::map<std::string, double> qvec = query_vector(q, idx);
    std::map<std::string, double> scores;
    for (const auto& [t, qw] : qvec) {
        const auto& entry = idx.terms.at(t);
        for (const auto& p : entry.postings) scores[p.doc_id] += qw * p.weight;
    }

    out.hits.reserve(scores.size());
    for (const auto& [doc_id, score] : scores)
        if (score > 0.0) out.hits.push_back({doc_id, score, 0});
    std::stable_sort(out.hits.begin(), out.hits.end(), [](const Hit& a, const Hit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    if (top_k && out.hits.size() > *top_k) out.hits.resize(*top_k);
    for (std::size_t i = 0; i < out.hits.size(); ++i) out.hits[i].rank = i + 1;
    return out;
}

std::vector<RankedList> batch_search(const std::vector<Query>& queries,
                                     const InvertedIndex& idx,
                                     std::optional<std::size_t> top_k,
                                     unsigned threads) {
    std::vector<RankedList> out(queries.size());
    if (threads <= 1 || queries.size() <= 1) {
        for (std::size_t i = 0; i < queries.size(); ++i)
            out[i] = search(queries[i], idx, top_k);
        return out;
    }
    const unsigned n = std::min<unsigned>(threads, queries.size());
    std::vector<std::thread> workers;
    workers.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < queries.size(); i += n)
                out[i] = search(queries[i], idx, top_k);
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

void write_run_file(const std::vector<RankedList>& runs, std::ostream& out) {
    for (const auto& run : runs)
        for (const auto& hit : run.hits)
            out << run.query_id << "\t" << hit.doc_id << "\t" << hit.rank << "\t"
                << g17(hit.score) << "\n";
}

void write_run_file(const std::vector<RankedList>& runs, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write run file: " + path);
    write_run_file(runs, out);
    if (!out) throw IoError("write failed: " + path);
}

std::vector<RankedList> load_run_file(std::istream& in, const std::string& name) {
    std::vector<RankedList> runs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string query_id;
        std::string doc_id;
        std::string rank_s;
        std::string score_s;
        if (!std::getline(ls, query_id, '\t') || !std::getline(ls, doc_id, '\t') ||
            !std::getline(ls, rank_s, '\t') || !std::getline(ls, score_s))
            throw FormatError("expected 4 tab-separated fields in " + name, lineno);
        char* end = nullptr;
        const unsigned long rank = std::strtoul(rank_s.c_str(), &end, 10);
        if (end != rank_s.c_str() + rank_s.size() || rank == 0)
            throw FormatError("bad rank `" + rank_s + "` in " + name, lineno);
        const double score = std::strtod(score_s.c_str(), &end);
        if (end != score_s.c_str() + score_s.size() || score_s.empty())
            throw FormatError("bad score `" + score_s + "` in " + name, lineno);
        if (runs.empty() || runs.back().query_id != query_id) {
            for (const auto& r : runs)
                if (r.query_id == query_id)
                    throw FormatError("query `" + query_id + "` not contiguous in " +
                                          name,
                                      lineno);
            runs.push_back({query_id, {}});
        }
        runs.back().hits.push_back({doc_id, score, rank});
    }
    return runs;
}

std::vector<RankedList> load_run_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open run file: " + path);
    return load_run_file(in, path);
}

}  // namespace condensa
