#pragma once

// Deterministic synthetic corpora for tests. Pool words are built from
// syllables that none of the Porter rules touch, so the analyzed term equals
// the written word and fixtures stay readable.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "condensa/analyzer.hpp"

namespace condensa::testing {

inline std::string pool_word(std::size_t i) {
    static const char* c1[] = {"b", "k", "m", "n", "p", "r", "t", "v", "z", "d"};
    static const char* v1[] = {"a", "i", "o", "u"};
    std::string w;
    w += c1[i % 10];
    w += v1[(i / 10) % 4];
    w += c1[(i / 40) % 10];
    w += v1[(i / 400) % 4];
    if (i >= 1600) {
        w += c1[(i / 1600) % 10];
        w += v1[(i / 16000) % 4];
    }
    return w;
}

// A sentence as text: words joined by spaces, closed with a period.
inline std::string sentence_text(const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) {
        if (!s.empty()) s += ' ';
        s += w;
    }
    s += '.';
    return s;
}

struct SynthDoc {
    std::string doc_id;
    std::string text;
};

// Random documents over a vocabulary slice; no injected redundancy.
inline std::vector<SynthDoc> random_corpus(std::uint32_t seed, std::size_t n_docs,
                                           std::size_t max_sentences,
                                           std::size_t vocab = 300) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> n_sent(1, max_sentences);
    std::uniform_int_distribution<std::size_t> sent_len(2, 9);
    std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
    std::vector<SynthDoc> docs;
    for (std::size_t d = 0; d < n_docs; ++d) {
        std::string text;
        const std::size_t sentences = n_sent(rng);
        for (std::size_t s = 0; s < sentences; ++s) {
            std::vector<std::string> words;
            const std::size_t len = sent_len(rng);
            for (std::size_t k = 0; k < len; ++k) words.push_back(pool_word(word(rng)));
            if (!text.empty()) text += ' ';
            text += sentence_text(words);
        }
        char id[24];
        std::snprintf(id, sizeof(id), "d%03u", static_cast<unsigned>(d));
        docs.push_back({id, text});
    }
    return docs;
}

// Documents with planted sentence-level redundancy: each document opens with
// a few mutually unrelated anchor sentences, followed by echoes that either
// copy an anchor verbatim or share its three heavy terms under a fresh tail.
// Verbatim echoes fall to the first cascade layer; weighted echoes are
// invisible to it.
inline std::vector<SynthDoc> redundant_corpus(std::uint32_t seed, std::size_t n_docs,
                                              std::size_t pool = 2000) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> n_anchor(2, 3);
    std::uniform_int_distribution<std::size_t> n_echo(1, 3);
    std::uniform_int_distribution<std::size_t> word(0, pool - 1);
    std::uniform_int_distribution<int> echo_kind(0, 1);

    std::vector<SynthDoc> docs;
    for (std::size_t d = 0; d < n_docs; ++d) {
        struct Anchor {
            std::vector<std::string> heavy;  // three repeated terms
            std::vector<std::string> words;  // full sentence
        };
        std::vector<Anchor> anchors;
        std::vector<std::string> sentences;

        const std::size_t anchor_count = n_anchor(rng);
        for (std::size_t a = 0; a < anchor_count; ++a) {
            Anchor anchor;
            for (int k = 0; k < 3; ++k) anchor.heavy.push_back(pool_word(word(rng)));
            for (const auto& h : anchor.heavy)
                for (int r = 0; r < 9; ++r) anchor.words.push_back(h);
            for (int k = 0; k < 4; ++k) anchor.words.push_back(pool_word(word(rng)));
            anchors.push_back(anchor);
            sentences.push_back(sentence_text(anchors.back().words));
        }
        const std::size_t echo_count = n_echo(rng);
        for (std::size_t e = 0; e < echo_count; ++e) {
            const Anchor& anchor = anchors[e % anchors.size()];
            if (echo_kind(rng) == 0) {
                sentences.push_back(sentence_text(anchor.words));  // verbatim
            } else {
                std::vector<std::string> words;
                for (const auto& h : anchor.heavy)
                    for (int r = 0; r < 9; ++r) words.push_back(h);
                for (int k = 0; k < 4; ++k) words.push_back(pool_word(word(rng)));
                sentences.push_back(sentence_text(words));
            }
        }
        std::string text;
        for (const auto& s : sentences) {
            if (!text.empty()) text += ' ';
            text += s;
        }
        char id[24];
        std::snprintf(id, sizeof(id), "d%03u", static_cast<unsigned>(d));
        docs.push_back({id, text});
    }
    return docs;
}

inline std::vector<Document> analyze_corpus(const std::vector<SynthDoc>& raw,
                                            const AnalyzerConfig& cfg) {
    std::vector<Document> docs;
    docs.reserve(raw.size());
    for (const auto& d : raw) docs.push_back(make_document(d.doc_id, d.text, cfg));
    return docs;
}

// Random queries drawn from the same vocabulary (2..5 words).
inline std::vector<std::pair<std::string, std::string>> random_queries(
    std::uint32_t seed, std::size_t count, std::size_t vocab = 300) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> len(2, 5);
    std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t q = 0; q < count; ++q) {
        std::string text;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) {
            if (!text.empty()) text += ' ';
            text += pool_word(word(rng));
        }
        out.emplace_back("q" + std::to_string(q + 1), text);
    }
    return out;
}

}  // namespace condensa::testing
