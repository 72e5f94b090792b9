#include "pubgames/corpus.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pubgames {

CorpusError::CorpusError(Kind kind, std::size_t row, std::string column, const std::string& message)
    : std::runtime_error(message), kind_(kind), row_(row), column_(std::move(column)) {}

const char* to_string(CorpusError::Kind kind) noexcept {
    switch (kind) {
        case CorpusError::Kind::MalformedCsv: return "MalformedCsv";
        case CorpusError::Kind::BadField: return "BadField";
        case CorpusError::Kind::DuplicateHeader: return "DuplicateHeader";
        case CorpusError::Kind::MissingHeader: return "MissingHeader";
    }
    return "?";
}

namespace {

constexpr std::array<std::string_view, 6> kColumns{"title", "authors", "year", "venue", "doi", "url"};

struct CsvRecord {
    std::vector<std::string> fields;
    std::string error;  // non-empty when the record is malformed
};

// RFC 4180 reader. A malformed record is reported and the reader resumes at
// the next line break so that every record gets a diagnostic.
class CsvReader {
public:
    explicit CsvReader(std::string_view bytes) : in_(bytes) {}

    bool done() const { return pos_ >= in_.size(); }

    CsvRecord next() {
        CsvRecord rec;
        std::string field;
        bool quoted = false;
        bool after_quote = false;
        for (;;) {
            if (pos_ >= in_.size()) {
                if (quoted) {
                    rec.error = "unterminated quoted field";
                }
                rec.fields.push_back(std::move(field));
                return rec;
            }
            const char c = in_[pos_++];
            if (quoted) {
                if (c != '"') {
                    field.push_back(c);
                } else if (pos_ < in_.size() && in_[pos_] == '"') {
                    field.push_back('"');
                    ++pos_;
                } else {
                    quoted = false;
                    after_quote = true;
                }
                continue;
            }
            if (c == ',') {
                rec.fields.push_back(std::move(field));
                field.clear();
                after_quote = false;
            } else if (c == '\n' || c == '\r') {
                if (c == '\r' && pos_ < in_.size() && in_[pos_] == '\n') {
                    ++pos_;
                }
                rec.fields.push_back(std::move(field));
                return rec;
            } else if (after_quote) {
                rec.error = "unexpected character after closing quote";
                skip_line();
                return rec;
            } else if (c == '"') {
                if (!field.empty()) {
                    rec.error = "quote inside unquoted field";
                    skip_line();
                    return rec;
                }
                quoted = true;
            } else {
                field.push_back(c);
            }
        }
    }

private:
    void skip_line() {
        while (pos_ < in_.size() && in_[pos_] != '\n') {
            ++pos_;
        }
        if (pos_ < in_.size()) {
            ++pos_;
        }
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

bool valid_utf8(std::string_view s) {
    const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
    const auto length = static_cast<int32_t>(s.size());
    for (int32_t i = 0; i < length;) {
        UChar32 c;
        U8_NEXT(bytes, i, length, c);
        if (c < 0) {
            return false;
        }
    }
    return true;
}

struct Collector {
    bool stop_at_first;
    std::vector<Diagnostic> diagnostics;

    // Returns false when parsing should stop.
    bool add(CorpusError::Kind kind, std::size_t row, std::string column, std::string message) {
        diagnostics.push_back({kind, row, std::move(column), std::move(message)});
        return !stop_at_first;
    }
};

std::string describe(const Diagnostic& d) {
    std::ostringstream out;
    out << to_string(d.kind) << " at row " << d.row;
    if (!d.column.empty()) {
        out << ", column '" << d.column << "'";
    }
    out << ": " << d.message;
    return out.str();
}

std::optional<PaperRecord> parse_row(std::vector<std::string>& fields, std::size_t row, Collector& diag) {
    PaperRecord paper;
    paper.id = row;
    bool ok = true;
    auto bad = [&](std::string_view column, std::string message) {
        ok = false;
        return diag.add(CorpusError::Kind::BadField, row, std::string(column), std::move(message));
    };

    paper.title = normalize_name(fields[0]);
    if (paper.title.empty() && !bad("title", "empty title")) {
        return std::nullopt;
    }

    std::set<std::string, std::less<>> seen;
    std::string_view list = fields[1];
    if (normalize_name(list).empty()) {
        if (!bad("authors", "empty author list")) {
            return std::nullopt;
        }
    } else {
        for (std::size_t start = 0;;) {
            const auto bar = list.find('|', start);
            auto name = normalize_name(list.substr(start, bar == std::string_view::npos ? bar : bar - start));
            if (name.empty()) {
                if (!bad("authors", "empty author name in list")) {
                    return std::nullopt;
                }
            } else if (!seen.insert(name).second) {
                if (!bad("authors", "duplicate author '" + name + "'")) {
                    return std::nullopt;
                }
            } else {
                paper.authors.push_back(std::move(name));
            }
            if (bar == std::string_view::npos) {
                break;
            }
            start = bar + 1;
        }
    }

    const std::string year_text = normalize_name(fields[2]);
    int year = 0;
    const auto* first = year_text.data();
    const auto* last = first + year_text.size();
    const auto [end, ec] = std::from_chars(first, last, year);
    if (year_text.size() != 4 || ec != std::errc{} || end != last || year < 1900 || year > 2100) {
        if (!bad("year", "year must be a 4-digit integer in [1900, 2100], got '" + year_text + "'")) {
            return std::nullopt;
        }
    }
    paper.year = year;

    paper.venue = normalize_name(fields[3]);
    if (auto doi = normalize_name(fields[4]); !doi.empty()) {
        paper.doi = std::move(doi);
    }
    if (auto url = normalize_name(fields[5]); !url.empty()) {
        paper.url = std::move(url);
    }
    if (!ok) {
        return std::nullopt;
    }
    return paper;
}

// Shared by load_corpus and validate_corpus. Returns the parsed records when
// no diagnostics were produced.
std::vector<PaperRecord> parse(std::string_view bytes, Collector& diag) {
    std::vector<PaperRecord> papers;
    if (bytes.substr(0, 3) == "\xEF\xBB\xBF") {
        bytes.remove_prefix(3);
    }
    CsvReader reader(bytes);
    if (reader.done()) {
        diag.add(CorpusError::Kind::MissingHeader, 0, "", "empty file, expected header row");
        return papers;
    }

    CsvRecord header = reader.next();
    if (!header.error.empty()) {
        diag.add(CorpusError::Kind::MalformedCsv, 0, "", "header: " + header.error);
        return papers;
    }
    {
        std::set<std::string_view> names;
        for (const auto& name : header.fields) {
            if (!names.insert(name).second) {
                diag.add(CorpusError::Kind::DuplicateHeader, 0, name, "column '" + name + "' appears twice");
                return papers;
            }
        }
        for (auto column : kColumns) {
            if (!names.contains(column)) {
                diag.add(CorpusError::Kind::MissingHeader, 0, std::string(column),
                         "header lacks column '" + std::string(column) + "'");
                return papers;
            }
        }
        if (!std::equal(header.fields.begin(), header.fields.end(), kColumns.begin(), kColumns.end())) {
            diag.add(CorpusError::Kind::MalformedCsv, 0, "",
                     "header must be exactly title,authors,year,venue,doi,url");
            return papers;
        }
    }

    for (std::size_t row = 0; !reader.done(); ++row) {
        CsvRecord rec = reader.next();
        if (rec.error.empty() && rec.fields.size() == 1 && rec.fields[0].empty()) {
            --row;  // blank line, not a record
            continue;
        }
        if (!rec.error.empty()) {
            if (!diag.add(CorpusError::Kind::MalformedCsv, row, "", rec.error)) {
                return papers;
            }
            continue;
        }
        if (rec.fields.size() != kColumns.size()) {
            if (!diag.add(CorpusError::Kind::MalformedCsv, row, "",
                          "expected 6 fields, found " + std::to_string(rec.fields.size()))) {
                return papers;
            }
            continue;
        }
        bool utf8_ok = true;
        for (std::size_t c = 0; c < rec.fields.size(); ++c) {
            if (!valid_utf8(rec.fields[c])) {
                utf8_ok = false;
                if (!diag.add(CorpusError::Kind::MalformedCsv, row, std::string(kColumns[c]), "invalid UTF-8")) {
                    return papers;
                }
            }
        }
        if (!utf8_ok) {
            continue;
        }
        if (auto paper = parse_row(rec.fields, row, diag)) {
            papers.push_back(std::move(*paper));
        } else if (diag.stop_at_first) {
            return papers;
        }
    }
    return papers;
}

}  // namespace

Corpus Corpus::from_records(std::vector<PaperRecord> records) {
    Corpus corpus;
    corpus.papers_ = std::move(records);
    for (std::size_t id = 0; id < corpus.papers_.size(); ++id) {
        auto& paper = corpus.papers_[id];
        paper.id = id;
        if (paper.title.empty()) {
            throw CorpusError(CorpusError::Kind::BadField, id, "title", "empty title");
        }
        if (paper.authors.empty()) {
            throw CorpusError(CorpusError::Kind::BadField, id, "authors", "empty author list");
        }
        if (paper.year < 1900 || paper.year > 2100) {
            throw CorpusError(CorpusError::Kind::BadField, id, "year", "year out of range");
        }
        for (const auto& author : paper.authors) {
            auto& ids = corpus.author_index_[author];
            if (author.empty()) {
                throw CorpusError(CorpusError::Kind::BadField, id, "authors", "empty author name");
            }
            if (!ids.empty() && ids.back() == id) {
                throw CorpusError(CorpusError::Kind::BadField, id, "authors", "duplicate author '" + author + "'");
            }
            ids.push_back(id);
        }
        if (colon_split(paper.title)) {
            corpus.colon_eligible_.push_back(id);
        }
    }
    // std::map over std::string iterates in byte-lexicographic order.
    for (const auto& [author, ids] : corpus.author_index_) {
        if (ids.size() >= min_author_papers) {
            corpus.eligible_authors_.push_back(author);
        }
    }
    return corpus;
}

const PaperRecord& Corpus::paper(PaperId id) const {
    if (id >= papers_.size()) {
        throw BadInput("unknown paper id " + std::to_string(id));
    }
    return papers_[id];
}

std::span<const PaperId> Corpus::papers_by(std::string_view author) const {
    const auto it = author_index_.find(author);
    if (it == author_index_.end()) {
        return {};
    }
    return it->second;
}

Corpus load_corpus(std::string_view csv_bytes) {
    Collector diag{true, {}};
    auto papers = parse(csv_bytes, diag);
    if (!diag.diagnostics.empty()) {
        const auto& d = diag.diagnostics.front();
        throw CorpusError(d.kind, d.row, d.column, describe(d));
    }
    return Corpus::from_records(std::move(papers));
}

std::vector<Diagnostic> validate_corpus(std::string_view csv_bytes) {
    Collector diag{false, {}};
    auto papers = parse(csv_bytes, diag);
    if (diag.diagnostics.empty()) {
        try {
            Corpus::from_records(std::move(papers));
        } catch (const CorpusError& e) {
            diag.diagnostics.push_back({e.kind(), e.row(), e.column(), e.what()});
        }
    }
    return std::move(diag.diagnostics);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

nlohmann::ordered_json to_json(const PaperRecord& paper) {
    nlohmann::ordered_json j;
    j["id"] = paper.id;
    j["title"] = paper.title;
    j["authors"] = paper.authors;
    j["year"] = paper.year;
    j["venue"] = paper.venue;
    if (paper.doi) {
        j["doi"] = *paper.doi;
    }
    if (paper.url) {
        j["url"] = *paper.url;
    }
    return j;
}

nlohmann::ordered_json to_json(const Corpus& corpus) {
    nlohmann::ordered_json j;
    auto& papers = j["papers"] = nlohmann::ordered_json::array();
    for (const auto& paper : corpus.papers()) {
        papers.push_back(to_json(paper));
    }
    auto& index = j["author_index"] = nlohmann::ordered_json::object();
    for (const auto& [author, ids] : corpus.author_index()) {
        index[author] = ids;
    }
    j["colon_eligible"] = corpus.colon_eligible();
    j["eligible_authors"] = corpus.eligible_authors();
    return j;
}

}  // namespace pubgames
