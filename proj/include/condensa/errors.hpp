#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condensa {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data. Carries the 1-based line number when known.
class FormatError : public Error {
public:
    FormatError(const std::string& msg, std::size_t line = 0)
        : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Similarity over an empty stem set is undefined; callers skip the pair.
class EmptySetError : public Error {
public:
    EmptySetError() : Error("similarity of an empty stem set is undefined") {}
};

/// The iterative SVD kernel exceeded its sweep cap.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Document has too few usable sentences for a reduced-space model.
class DegenerateDocumentError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Term statistics violate 1 <= df <= N.
class InvalidStatsError : public Error {
public:
    using Error::Error;
};

class DuplicateDocIdError : public Error {
public:
    explicit DuplicateDocIdError(const std::string& doc_id)
        : Error("duplicate doc_id: " + doc_id) {}
};

class EmptyCorpusError : public Error {
public:
    EmptyCorpusError() : Error("corpus is empty") {}
};

class EmptyCorpusDirError : public Error {
public:
    explicit EmptyCorpusDirError(const std::string& dir)
        : Error("no .txt documents found in " + dir) {}
};

class EmptyRelevantSetError : public Error {
public:
    EmptyRelevantSetError() : Error("relevant set is empty") {}
};

class NoQueriesError : public Error {
public:
    NoQueriesError() : Error("no queries to aggregate") {}
};

}  // namespace condensa
