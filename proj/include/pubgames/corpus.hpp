#pragma once

#include "pubgames/error.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pubgames {

/// Zero-based position of a paper in file order.
using PaperId = std::size_t;

struct PaperRecord {
    PaperId id = 0;
    std::string title;
    std::vector<std::string> authors;  // normalized, no duplicates
    int year = 0;
    std::string venue;
    std::optional<std::string> doi;
    std::optional<std::string> url;
};

struct ColonSplit {
    std::string prefix;
    std::string suffix;

    bool operator==(const ColonSplit&) const = default;
};

/// NFC, trimmed, internal whitespace runs collapsed to one space.
std::string normalize_name(std::string_view raw);

/// Unicode full case folding, used for syntactic ambiguity checks.
std::string casefold(std::string_view text);

/// Splits at the first ':'; the suffix loses its leading whitespace.
/// Absent unless both halves are non-empty.
std::optional<ColonSplit> colon_split(std::string_view title);

struct Diagnostic {
    CorpusError::Kind kind;
    std::size_t row;
    std::string column;
    std::string message;
};

/// Immutable indexed snapshot of one corpus file.
class Corpus {
public:
    using AuthorIndex = std::map<std::string, std::vector<PaperId>, std::less<>>;

    /// Builds the indexes over already-parsed records; ids are reassigned to
    /// positions. Throws CorpusError(BadField) on invariant violations.
    static Corpus from_records(std::vector<PaperRecord> records);

    const std::vector<PaperRecord>& papers() const noexcept { return papers_; }
    const PaperRecord& paper(PaperId id) const;
    std::size_t size() const noexcept { return papers_.size(); }

    const AuthorIndex& author_index() const noexcept { return author_index_; }
    /// Sorted paper ids for `author`; empty span if unknown.
    std::span<const PaperId> papers_by(std::string_view author) const;

    const std::vector<PaperId>& colon_eligible() const noexcept { return colon_eligible_; }
    /// Authors with at least three papers, byte-lexicographic.
    const std::vector<std::string>& eligible_authors() const noexcept { return eligible_authors_; }

    static constexpr std::size_t min_author_papers = 3;

private:
    Corpus() = default;

    std::vector<PaperRecord> papers_;
    AuthorIndex author_index_;
    std::vector<PaperId> colon_eligible_;
    std::vector<std::string> eligible_authors_;
};

/// Parses `title,authors,year,venue,doi,url` CSV (RFC 4180, UTF-8).
/// Throws the first CorpusError encountered.
Corpus load_corpus(std::string_view csv_bytes);

/// Same parse, but collects every diagnostic instead of stopping at the first.
std::vector<Diagnostic> validate_corpus(std::string_view csv_bytes);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

nlohmann::ordered_json to_json(const PaperRecord& paper);
nlohmann::ordered_json to_json(const Corpus& corpus);

}  // namespace pubgames
