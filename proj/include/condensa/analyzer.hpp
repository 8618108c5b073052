#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace condensa {

/// A sentence span with its position in the document and analyzed terms.
struct Sentence {
    std::size_t sent_idx = 0;
    std::string raw;
    std::vector<std::string> terms;  // stopword-free stems, in token order
};

struct Document {
    std::string doc_id;
    std::string text;
    std::vector<Sentence> sentences;
};

enum class StemmerKind { kPorter, kIdentity };

/// The bundled English stopword list (mirrors data/stopwords_en.txt).
const std::vector<std::string>& default_stopwords();

struct AnalyzerConfig {
    StemmerKind stemmer = StemmerKind::kPorter;
    std::size_t min_token_len = 2;
    std::unordered_set<std::string> stopwords{default_stopwords().begin(),
                                              default_stopwords().end()};

    /// Key-value config file: `stopwords = <path>`, `stemmer = porter|identity`,
    /// `min_token_len = <n>`. Blank lines and '#' comments allowed. Throws
    /// FormatError on malformed lines or unknown keys.
    static AnalyzerConfig from_file(const std::string& path);
};

/// Loads one stopword per line (blank lines and '#' comments skipped).
std::unordered_set<std::string> load_stopwords(const std::string& path);

/// Splits text into sentence spans ending at '.', '!', '?', a paragraph
/// break (blank line) or end of text. Spans are trimmed and never empty;
/// runs of terminator characters stay inside the span they close.
std::vector<std::string> split_sentences(std::string_view text);

/// Tokenizes a span into lowercased, stopword-filtered stems. Splitting is
/// on non-alphanumeric codepoints; the case fold covers ASCII and Latin-1.
std::vector<std::string> analyze(std::string_view raw, const AnalyzerConfig& cfg);

/// Builds a Document by splitting `text` and analyzing every sentence.
Document make_document(std::string doc_id, std::string text, const AnalyzerConfig& cfg);

/// True when the buffer is well-formed UTF-8.
bool utf8_valid(std::string_view text);

}  // namespace condensa
