#include "condensa/analyzer.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "condensa/errors.hpp"
#include "condensa/porter.hpp"

namespace condensa {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_ascii_space(s[b])) ++b;
    while (e > b && is_ascii_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

// Decodes the UTF-8 sequence starting at `i`, advancing `i`. Returns the
// replacement char 0xFFFD for malformed bytes (the byte is consumed).
char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        const unsigned char bk = byte(i + k);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += len;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Word characters: ASCII alphanumerics plus non-ASCII codepoints that are
// not common punctuation. Symbols and punctuation blocks split tokens.
bool is_word_char(char32_t cp) {
    if (cp < 0x80)
        return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
               (cp >= 'A' && cp <= 'Z');
    if (cp >= 0xA0 && cp <= 0xBF) return false;   // Latin-1 punctuation
    if (cp == 0xD7 || cp == 0xF7) return false;   // multiplication / division signs
    if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
    if (cp == 0x060C || cp == 0x061B || cp == 0x061F) return false;  // Arabic marks
    return true;
}

char32_t fold_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
    return cp;
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> spans;
    std::size_t start = 0;
    std::size_t i = 0;
    const auto flush = [&](std::size_t end) {
        const std::string_view span = trim(text.substr(start, end - start));
        if (!span.empty()) spans.emplace_back(span);
    };
    while (i < text.size()) {
        const char c = text[i];
        if (is_terminator(c)) {
            ++i;
            while (i < text.size() && is_terminator(text[i])) ++i;
            flush(i);
            start = i;
        } else if (c == '\n') {
            // Paragraph break: a newline followed, after horizontal
            // whitespace, by another newline.
            std::size_t k = i + 1;
            while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r'))
                ++k;
            if (k < text.size() && text[k] == '\n') {
                flush(i);
                while (k < text.size() && is_ascii_space(text[k])) ++k;
                i = start = k;
            } else {
                ++i;
            }
        } else {
            ++i;
        }
    }
    flush(text.size());
    return spans;
}

std::vector<std::string> analyze(std::string_view raw, const AnalyzerConfig& cfg) {
    std::vector<std::string> terms;
    std::string token;
    std::size_t token_len = 0;  // codepoints
    const auto flush = [&] {
        if (token_len >= cfg.min_token_len && !cfg.stopwords.count(token)) {
            terms.push_back(cfg.stemmer == StemmerKind::kPorter ? porter_stem(token)
                                                                : token);
        }
        token.clear();
        token_len = 0;
    };
    std::size_t i = 0;
    while (i < raw.size()) {
        const char32_t cp = decode_utf8(raw, i);
        if (is_word_char(cp)) {
            encode_utf8(fold_lower(cp), token);
            ++token_len;
        } else if (!token.empty()) {
            flush();
        }
    }
    if (!token.empty()) flush();
    return terms;
}

Document make_document(std::string doc_id, std::string text, const AnalyzerConfig& cfg) {
    Document doc;
    doc.doc_id = std::move(doc_id);
    doc.text = std::move(text);
    std::vector<std::string> spans = split_sentences(doc.text);
    doc.sentences.reserve(spans.size());
    for (std::size_t idx = 0; idx < spans.size(); ++idx) {
        Sentence s;
        s.sent_idx = idx;
        s.terms = analyze(spans[idx], cfg);
        s.raw = std::move(spans[idx]);
        doc.sentences.push_back(std::move(s));
    }
    return doc;
}

bool utf8_valid(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char b0 = static_cast<unsigned char>(text[i]);
        int len;
        char32_t min_cp;
        char32_t cp;
        if (b0 < 0x80) {
            ++i;
            continue;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            min_cp = 0x80;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            min_cp = 0x800;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            min_cp = 0x10000;
            cp = b0 & 0x07;
        } else {
            return false;
        }
        if (i + len > text.size()) return false;
        for (int k = 1; k < len; ++k) {
            const unsigned char bk = static_cast<unsigned char>(text[i + k]);
            if ((bk & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return false;
        i += len;
    }
    return true;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword file: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        words.emplace(t);
    }
    return words;
}

AnalyzerConfig AnalyzerConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open analyzer config: " + path);
    AnalyzerConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string_view::npos)
            throw FormatError("expected `key = value` in " + path, lineno);
        const std::string key{trim(t.substr(0, eq))};
        const std::string value{trim(t.substr(eq + 1))};
        if (key == "stopwords") {
            cfg.stopwords = load_stopwords(value);
        } else if (key == "stemmer") {
            if (value == "porter")
                cfg.stemmer = StemmerKind::kPorter;
            else if (value == "identity")
                cfg.stemmer = StemmerKind::kIdentity;
            else
                throw FormatError("unknown stemmer `" + value + "` in " + path, lineno);
        } else if (key == "min_token_len") {
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(value, &pos);
            } catch (const std::exception&) {
                throw FormatError("bad min_token_len in " + path, lineno);
            }
            if (pos != value.size())
                throw FormatError("bad min_token_len in " + path, lineno);
            cfg.min_token_len = v;
        } else {
            throw FormatError("unknown analyzer config key `" + key + "` in " + path,
                              lineno);
        }
    }
    return cfg;
}

}  // namespace condensa
