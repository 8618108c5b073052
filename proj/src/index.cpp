#include "condensa/index.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "condensa/errors.hpp"
#include "condensa/format.hpp"

namespace condensa {

namespace {

constexpr const char* kMagic = "#condensa-index v1";

bool id_ok(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id)
        if (c == ':' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            return false;
    return true;
}

double parse_double(const std::string& s, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty())
        throw FormatError("bad number `" + s + "`", line);
    return v;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError("bad count `" + s + "`", line);
    return std::strtoull(s.c_str(), nullptr, 10);
}

}  // namespace

double term_weight(std::size_t f, std::size_t n_docs, std::size_t df) {
    if (f == 0) return 0.0;
    if (df < 1 || df > n_docs)
        throw InvalidStatsError("df=" + std::to_string(df) + " outside [1, N=" +
                                std::to_string(n_docs) + "]");
    if (df == n_docs) return 0.0;
    return (1.0 + std::log10(static_cast<double>(f))) *
           std::log10(static_cast<double>(n_docs) / static_cast<double>(df));
}

InvertedIndex build_index(const std::vector<Document>& corpus) {
    if (corpus.empty()) throw EmptyCorpusError();

    // Whole-document term frequencies (footnote: this tf is document-scoped,
    // unlike the sentence-scoped tf of the sentence vectors).
    std::map<std::string, std::map<std::string, std::size_t>> doc_freqs;
    for (const auto& doc : corpus) {
        if (doc_freqs.count(doc.doc_id)) throw DuplicateDocIdError(doc.doc_id);
        auto& freqs = doc_freqs[doc.doc_id];
        for (const auto& s : doc.sentences)
            for (const auto& t : s.terms) ++freqs[t];
    }

    std::map<std::string, std::size_t> df;
    for (const auto& [doc_id, freqs] : doc_freqs)
        for (const auto& [t, f] : freqs) {
            (void)f;
            ++df[t];
        }

    InvertedIndex idx;
    idx.n_docs = corpus.size();

    std::map<std::string, double> norms;
    for (const auto& [doc_id, freqs] : doc_freqs) {
        double sum = 0.0;
        for (const auto& [t, f] : freqs) {
            const double w = term_weight(f, idx.n_docs, df[t]);
            sum += w * w;
        }
        norms[doc_id] = std::sqrt(sum);
    }
    idx.doc_norms = norms;

    for (const auto& [doc_id, freqs] : doc_freqs) {
        const double norm = norms[doc_id];
        for (const auto& [t, f] : freqs) {
            const double w = term_weight(f, idx.n_docs, df[t]);
            if (w <= 0.0) continue;
            idx.terms[t].postings.push_back({doc_id, w / norm});
        }
    }
    for (auto& [t, entry] : idx.terms) {
        (void)t;
        entry.df = entry.postings.size();  // doc_ids arrive already sorted
    }
    return idx;
}

void save_index(const InvertedIndex& idx, std::ostream& out) {
    out << kMagic << "\n";
    out << "N " << idx.n_docs << "\n";
    for (const auto& [doc_id, norm] : idx.doc_norms) {
        if (!id_ok(doc_id))
            throw FormatError("doc_id `" + doc_id + "` not representable in index files");
        out << "D " << doc_id << " " << g17(norm) << "\n";
    }
    for (const auto& [term, entry] : idx.terms) {
        if (!id_ok(term))
            throw FormatError("term `" + term + "` not representable in index files");
        out << "T " << term << " " << entry.df;
        char sep = ' ';
        for (const auto& p : entry.postings) {
            out << sep << p.doc_id << ":" << g17(p.weight);
            sep = ',';
        }
        out << "\n";
    }
}

void save_index(const InvertedIndex& idx, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write index file: " + path);
    save_index(idx, out);
    if (!out) throw IoError("write failed: " + path);
}

InvertedIndex load_index(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line) || line != kMagic)
        throw FormatError("missing `" + std::string(kMagic) + "` header in " + name, 1);
    ++lineno;

    if (!std::getline(in, line) || line.rfind("N ", 0) != 0)
        throw FormatError("expected `N <doc count>` in " + name, lineno + 1);
    ++lineno;
    InvertedIndex idx;
    idx.n_docs = parse_count(line.substr(2), lineno);

    bool in_terms = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "D") {
            if (in_terms) throw FormatError("D line after T lines in " + name, lineno);
            std::string doc_id;
            std::string norm;
            if (!(ls >> doc_id >> norm))
                throw FormatError("bad D line in " + name, lineno);
            if (!idx.doc_norms.emplace(doc_id, parse_double(norm, lineno)).second)
                throw FormatError("duplicate doc `" + doc_id + "` in " + name, lineno);
        } else if (tag == "T") {
            in_terms = true;
            std::string term;
            std::size_t df = 0;
            std::string postings;
            if (!(ls >> term >> df >> postings))
                throw FormatError("bad T line in " + name, lineno);
            auto& entry = idx.terms[term];
            entry.df = df;
            std::size_t pos = 0;
            while (pos < postings.size()) {
                std::size_t comma = postings.find(',', pos);
                if (comma == std::string::npos) comma = postings.size();
                const std::string item = postings.substr(pos, comma - pos);
                const std::size_t colon = item.find(':');
                if (colon == std::string::npos)
                    throw FormatError("bad posting `" + item + "` in " + name, lineno);
                const std::string doc_id = item.substr(0, colon);
                if (!idx.doc_norms.count(doc_id))
                    throw FormatError("posting for unknown doc `" + doc_id + "` in " +
                                          name,
                                      lineno);
                entry.postings.push_back(
                    {doc_id, parse_double(item.substr(colon + 1), lineno)});
                pos = comma + 1;
            }
            if (entry.df != entry.postings.size())
                throw FormatError("df mismatch for term `" + term + "` in " + name,
                                  lineno);
        } else {
            throw FormatError("unknown line tag `" + tag + "` in " + name, lineno);
        }
    }
    if (idx.doc_norms.size() != idx.n_docs)
        throw FormatError("declared " + std::to_string(idx.n_docs) + " docs but found " +
                              std::to_string(idx.doc_norms.size()) + " in " + name,
                          lineno);
    return idx;
}

InvertedIndex load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open index file: " + path);
    return load_index(in, path);
}

IndexStats index_stats(const InvertedIndex& idx, const InvertedIndex* baseline) {
    IndexStats stats;
    stats.distinct_terms = idx.terms.size();
    for (const auto& [t, entry] : idx.terms) {
        (void)t;
        stats.total_postings += entry.postings.size();
    }
    if (baseline && !baseline->terms.empty())
        stats.ratio_to_baseline = static_cast<double>(stats.distinct_terms) /
                                  static_cast<double>(baseline->terms.size());
    return stats;
}

}  // namespace condensa
