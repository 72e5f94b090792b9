#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pubgames {

/// Raised when a corpus file cannot be ingested.
class CorpusError : public std::runtime_error {
public:
    enum class Kind { MalformedCsv, BadField, DuplicateHeader, MissingHeader };

    CorpusError(Kind kind, std::size_t row, std::string column, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// Zero-based data row (the would-be paper id); 0 for header problems.
    std::size_t row() const noexcept { return row_; }
    /// Column name, empty when the problem is not tied to one column.
    const std::string& column() const noexcept { return column_; }

private:
    Kind kind_;
    std::size_t row_;
    std::string column_;
};

const char* to_string(CorpusError::Kind kind) noexcept;

/// Fewer eligible papers/authors than one puzzle needs.
class CorpusTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every candidate within the proposal budget was rejected.
class GenerationExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientPopulation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain.
class BadInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotCompleted : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pubgames
