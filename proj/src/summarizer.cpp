#include "condensa/summarizer.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "condensa/errors.hpp"
#include "condensa/format.hpp"
#include "condensa/similarity.hpp"

namespace condensa {

const char* to_string(Layer layer) {
    switch (layer) {
        case Layer::kJac: return "JAC";
        case Layer::kVsm: return "VSM";
        case Layer::kLsa: return "LSA";
    }
    return "?";
}

const char* to_string(SummaryModel model) {
    switch (model) {
        case SummaryModel::kJac: return "jac";
        case SummaryModel::kVsm: return "vsm";
        case SummaryModel::kLsa: return "lsa";
        case SummaryModel::kMls: return "mls";
    }
    return "?";
}

std::optional<SummaryModel> parse_model(const std::string& name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "jac") return SummaryModel::kJac;
    if (lower == "vsm") return SummaryModel::kVsm;
    if (lower == "lsa") return SummaryModel::kLsa;
    if (lower == "mls") return SummaryModel::kMls;
    return std::nullopt;
}

namespace {

// Shared per-document state for the pair scans: term sets, sentence vectors
// and the lazily-built reduced space.
class PairScorer {
public:
    PairScorer(const Document& doc, const ExtractorConfig& cfg)
        : doc_(doc), cfg_(cfg), vectors_(sentence_vectors(doc)) {
        sets_.reserve(doc.sentences.size());
        for (const auto& s : doc.sentences) sets_.push_back(term_set(s));
    }

    bool comparable(std::size_t i, std::size_t j) const {
        return !sets_[i].empty() && !sets_[j].empty();
    }

    double jac(std::size_t i, std::size_t j) const {
        return jaccard_overlap(sets_[i], sets_[j]);
    }

    double vsm(std::size_t i, std::size_t j) const {
        return cosine(vectors_[i], vectors_[j]);
    }

    double lsa(std::size_t i, std::size_t j) {
        ++lsa_invocations_;
        if (!space_attempted_) {
            space_attempted_ = true;
            try {
                space_.emplace(build_lsa_space(doc_, cfg_.lsa_energy));
            } catch (const DegenerateDocumentError&) {
            } catch (const NoConvergenceError&) {
            }
        }
        if (!space_) return 0.0;
        return lsa_similarity(*space_, i, j);
    }

    // (score, layer, fired) for the configured model on one pair.
    std::pair<MlsScore, bool> score(std::size_t i, std::size_t j) {
        switch (cfg_.model) {
            case SummaryModel::kJac: {
                const double s = jac(i, j);
                return {{s, Layer::kJac}, s >= cfg_.jac_threshold};
            }
            case SummaryModel::kVsm: {
                const double s = vsm(i, j);
                return {{s, Layer::kVsm}, s >= cfg_.vsm_threshold};
            }
            case SummaryModel::kLsa: {
                const double s = lsa(i, j);
                return {{s, Layer::kLsa}, s >= cfg_.lsa_threshold};
            }
            case SummaryModel::kMls: {
                const double j1 = jac(i, j);
                if (j1 >= cfg_.jac_threshold) return {{j1, Layer::kJac}, true};
                const double c2 = vsm(i, j);
                if (c2 >= cfg_.vsm_threshold) return {{c2, Layer::kVsm}, true};
                const double l3 = lsa(i, j);
                return {{l3, Layer::kLsa}, l3 >= cfg_.lsa_threshold};
            }
        }
        return {{0.0, Layer::kJac}, false};
    }

    std::size_t lsa_invocations() const { return lsa_invocations_; }

private:
    const Document& doc_;
    const ExtractorConfig& cfg_;
    std::vector<TermSet> sets_;
    std::vector<SentenceVector> vectors_;
    std::optional<LsaSpace> space_;
    bool space_attempted_ = false;
    std::size_t lsa_invocations_ = 0;
};

}  // namespace

MlsScore mls_similarity(const Document& doc, const LsaSpace* space, std::size_t i,
                        std::size_t j, const ExtractorConfig& cfg) {
    const std::vector<SentenceVector> vectors = sentence_vectors(doc);
    const TermSet a = term_set(doc.sentences.at(i));
    const TermSet b = term_set(doc.sentences.at(j));
    const double j1 = jaccard_overlap(a, b);
    if (j1 >= cfg.jac_threshold) return {j1, Layer::kJac};
    const double c2 = cosine(vectors[i], vectors[j]);
    if (c2 >= cfg.vsm_threshold) return {c2, Layer::kVsm};
    return {space ? lsa_similarity(*space, i, j) : 0.0, Layer::kLsa};
}

SummaryResult extract(const Document& doc, const ExtractorConfig& cfg) {
    const std::size_t n = doc.sentences.size();
    SummaryResult out;
    out.doc_id = doc.doc_id;

    PairScorer scorer(doc, cfg);
    std::vector<bool> kept(n, true);
    for (std::size_t j = 1; j < n; ++j) {
        if (doc.sentences[j].terms.empty()) continue;
        for (std::size_t i = 0; i < j; ++i) {
            if (!kept[i] || !scorer.comparable(i, j)) continue;
            ++out.pairwise_comparisons;
            const auto [ms, fired] = scorer.score(i, j);
            if (fired) {
                kept[j] = false;
                out.removed.push_back({j, i, ms.layer, ms.score});
                break;
            }
        }
    }

    std::size_t total_terms = 0;
    std::size_t kept_terms = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total_terms += doc.sentences[i].terms.size();
        if (kept[i]) {
            out.kept.push_back(i);
            kept_terms += doc.sentences[i].terms.size();
        }
    }
    out.condensation_rate =
        total_terms == 0 ? 1.0
                         : static_cast<double>(kept_terms) / static_cast<double>(total_terms);
    out.lsa_invocations = scorer.lsa_invocations();
    return out;
}

Document make_summary_document(const Document& src, const SummaryResult& result) {
    Document out;
    out.doc_id = src.doc_id;
    out.sentences.reserve(result.kept.size());
    for (std::size_t new_idx = 0; new_idx < result.kept.size(); ++new_idx) {
        const Sentence& s = src.sentences[result.kept[new_idx]];
        Sentence copy;
        copy.sent_idx = new_idx;
        copy.raw = s.raw;
        copy.terms = s.terms;
        out.sentences.push_back(std::move(copy));
    }
    // Blank lines keep the spans re-splittable when the summary is written
    // back out as text.
    for (std::size_t i = 0; i < out.sentences.size(); ++i) {
        if (i) out.text += "\n\n";
        out.text += out.sentences[i].raw;
    }
    return out;
}

CorpusSummary summarize_corpus(const std::vector<Document>& corpus,
                               const ExtractorConfig& cfg) {
    CorpusSummary out;
    out.results.reserve(corpus.size());
    for (const auto& doc : corpus) {
        try {
            SummaryResult r = extract(doc, cfg);
            out.total_lsa_invocations += r.lsa_invocations;
            out.total_comparisons += r.pairwise_comparisons;
            out.summary_corpus.push_back(make_summary_document(doc, r));
            out.results.push_back(std::move(r));
        } catch (const Error& e) {
            out.errors.push_back(doc.doc_id + ": " + e.what());
        }
    }
    return out;
}

void write_summary_report_csv(const CorpusSummary& summary, SummaryModel model,
                              std::ostream& out) {
    out << "doc_id,model,kept,removed,cr,lsa_invocations\n";
    for (const auto& r : summary.results)
        out << r.doc_id << "," << to_string(model) << "," << r.kept.size() << ","
            << r.removed.size() << "," << g17(r.condensation_rate) << ","
            << r.lsa_invocations << "\n";
}

}  // namespace condensa
