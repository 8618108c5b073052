#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condensa/analyzer.hpp"

namespace condensa::testing {

inline Document doc_from_sentences(std::string doc_id,
                                   std::vector<std::vector<std::string>> sents) {
    Document d;
    d.doc_id = std::move(doc_id);
    for (std::size_t i = 0; i < sents.size(); ++i) {
        Sentence s;
        s.sent_idx = i;
        s.terms = std::move(sents[i]);
        d.sentences.push_back(std::move(s));
    }
    return d;
}

inline std::vector<std::string> repeat_terms(
    std::vector<std::pair<std::string, int>> spec) {
    std::vector<std::string> out;
    for (const auto& [w, n] : spec)
        for (int i = 0; i < n; ++i) out.push_back(w);
    return out;
}

// Four-sentence document exercising all three cascade layers at the default
// thresholds: sentence 1 nearly repeats sentence 0 (overlap 0.977), and
// sentences 2 and 3 share only two heavy terms (cosine 0.42) whose direction
// survives the rank-2 truncation while their distinct tails do not, so their
// reduced-space similarity is ~1.
inline Document mls_cascade_fixture() {
    std::vector<std::pair<std::string, int>> s0;
    for (int c = 0; c < 40; ++c) s0.push_back({"c" + std::to_string(c), 1});
    s0.push_back({"a1", 1});
    s0.push_back({"a2", 1});
    s0.push_back({"b1", 1});
    s0.push_back({"b2", 1});
    auto s1 = s0;
    s1.pop_back();
    s1.push_back({"b3", 1});
    return doc_from_sentences(
        "cascade",
        {repeat_terms(s0), repeat_terms(s1),
         repeat_terms({{"a1", 1}, {"a2", 1}, {"u1", 1}, {"d1", 2}, {"d2", 2}}),
         repeat_terms({{"b1", 1}, {"b2", 1}, {"v1", 1}, {"d1", 2}, {"d2", 2}})});
}

}  // namespace condensa::testing
