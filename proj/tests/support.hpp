#pragma once

#include "pubgames/corpus.hpp"

#include <string>
#include <vector>

namespace pubgames::test {

inline std::string data_path(const std::string& name) {
    return std::string(PUBGAMES_TEST_DATA) + "/" + name;
}

/// 120 papers, 30 eligible authors, 20 colon-eligible titles.
inline const Corpus& fixture() {
    static const Corpus corpus = load_corpus(read_file(data_path("fixture.csv")));
    return corpus;
}

inline PaperRecord paper(std::string title, std::vector<std::string> authors, int year = 2020,
                         std::string venue = "VIS") {
    PaperRecord p;
    p.title = std::move(title);
    p.authors = std::move(authors);
    p.year = year;
    p.venue = std::move(venue);
    return p;
}

/// One author per entry of `counts`, each on that many solo papers.
inline Corpus solo_author_corpus(const std::vector<std::size_t>& counts) {
    std::vector<PaperRecord> papers;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        for (std::size_t i = 0; i < counts[a]; ++i) {
            papers.push_back(paper("Paper " + std::to_string(a) + "-" + std::to_string(i),
                                   {"Author " + std::string(1, static_cast<char>('A' + a))}));
        }
    }
    return Corpus::from_records(std::move(papers));
}

inline const std::string kGreen = "\xF0\x9F\x9F\xA9";
inline const std::string kRed = "\xF0\x9F\x9F\xA5";

}  // namespace pubgames::test
