#include "pubgames/authored.hpp"

#include "pubgames/rng.hpp"

#include <algorithm>
#include <set>

namespace pubgames {

namespace {

bool has_author(const PaperRecord& paper, std::string_view author) {
    return std::find(paper.authors.begin(), paper.authors.end(), author) != paper.authors.end();
}

bool triple_shares_author(const PaperRecord& a, const PaperRecord& b, const PaperRecord& c) {
    return std::any_of(a.authors.begin(), a.authors.end(),
                       [&](const std::string& name) { return has_author(b, name) && has_author(c, name); });
}

}  // namespace

std::size_t AuthoredPuzzle::group_of_cell(std::size_t cell) const {
    const PaperId id = grid_order.at(cell);
    for (std::size_t g = 0; g < group_count; ++g) {
        const auto& ids = groups[g].paper_ids;
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
            return g;
        }
    }
    throw BadInput("grid cell " + std::to_string(cell) + " belongs to no group");
}

PartitionCount count_valid_partitions(std::span<const PaperId> paper_ids, const Corpus& corpus) {
    constexpr std::size_t n = AuthoredPuzzle::cell_count;
    if (paper_ids.size() != n) {
        throw BadInput("count_valid_partitions needs exactly 9 papers, got " + std::to_string(paper_ids.size()));
    }
    if (std::set<PaperId>(paper_ids.begin(), paper_ids.end()).size() != n) {
        throw BadInput("count_valid_partitions: paper ids must be distinct");
    }
    std::array<const PaperRecord*, n> papers{};
    for (std::size_t i = 0; i < n; ++i) {
        papers[i] = &corpus.paper(paper_ids[i]);
    }

    // shares[i][j][k] for i < j < k.
    bool shares[n][n][n] = {};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                shares[i][j][k] = triple_shares_author(*papers[i], *papers[j], *papers[k]);
            }
        }
    }

    // The first triple always holds item 0, the second the smallest item
    // left over; that fixes one ordering per unordered partition.
    PartitionCount count = 0;
    for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!shares[0][a][b]) {
                continue;
            }
            std::array<std::size_t, 6> rest{};
            std::size_t r = 0;
            for (std::size_t i = 1; i < n; ++i) {
                if (i != a && i != b) {
                    rest[r++] = i;
                }
            }
            for (std::size_t c = 1; c < 6; ++c) {
                for (std::size_t d = c + 1; d < 6; ++d) {
                    std::array<std::size_t, 3> last{};
                    std::size_t l = 0;
                    for (std::size_t i = 1; i < 6; ++i) {
                        if (i != c && i != d) {
                            last[l++] = rest[i];
                        }
                    }
                    if (shares[rest[0]][rest[c]][rest[d]] && shares[last[0]][last[1]][last[2]]) {
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

std::array<AuthoredGroup, 3> propose_authored(const Corpus& corpus, Rng& rng) {
    const auto& eligible = corpus.eligible_authors();
    std::array<AuthoredGroup, 3> groups;
    const auto authors = rng.sample_distinct(AuthoredPuzzle::group_count, eligible.size());
    for (std::size_t g = 0; g < AuthoredPuzzle::group_count; ++g) {
        groups[g].target_author = eligible[authors[g]];
        const auto papers = corpus.papers_by(groups[g].target_author);
        const auto picks = rng.sample_distinct(AuthoredPuzzle::group_size, papers.size());
        for (std::size_t i = 0; i < AuthoredPuzzle::group_size; ++i) {
            groups[g].paper_ids[i] = papers[picks[i]];
        }
    }
    return groups;
}

ProposalCheck check_proposal(const Corpus& corpus, const std::array<AuthoredGroup, 3>& groups) {
    std::array<PaperId, AuthoredPuzzle::cell_count> all{};
    std::size_t n = 0;
    for (const auto& group : groups) {
        for (PaperId id : group.paper_ids) {
            all[n++] = id;
        }
    }
    if (std::set<PaperId>(all.begin(), all.end()).size() != all.size()) {
        return ProposalCheck::RepeatedPaper;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t other = 0; other < groups.size(); ++other) {
            if (other == g) {
                continue;
            }
            for (PaperId id : groups[other].paper_ids) {
                if (has_author(corpus.paper(id), groups[g].target_author)) {
                    return ProposalCheck::CrossGroupAuthor;
                }
            }
        }
    }
    if (count_valid_partitions(all, corpus) != 1) {
        return ProposalCheck::AmbiguousPartition;
    }
    return ProposalCheck::Accepted;
}

AuthoredPuzzle generate_authored(const Corpus& corpus, std::uint64_t seed) {
    if (corpus.eligible_authors().size() < AuthoredPuzzle::group_count) {
        throw CorpusTooSmall("authored: need at least 3 authors with 3+ papers, corpus has " +
                             std::to_string(corpus.eligible_authors().size()));
    }
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < kMaxAuthoredProposals; ++attempt) {
        auto groups = propose_authored(corpus, rng);
        if (check_proposal(corpus, groups) != ProposalCheck::Accepted) {
            continue;
        }
        AuthoredPuzzle puzzle;
        puzzle.seed = seed;
        puzzle.groups = std::move(groups);
        std::size_t cell = 0;
        for (const auto& group : puzzle.groups) {
            for (PaperId id : group.paper_ids) {
                puzzle.grid_order[cell++] = id;
            }
        }
        rng.shuffle(std::span<PaperId>(puzzle.grid_order));
        return puzzle;
    }
    throw GenerationExhausted("authored: no proposal with a unique partition within " +
                              std::to_string(kMaxAuthoredProposals) + " draws (seed " + seed_to_hex(seed) + ")");
}

AuthoredView authored_view(const AuthoredPuzzle& puzzle, const Corpus& corpus) {
    AuthoredView view;
    view.seed = puzzle.seed;
    for (std::size_t cell = 0; cell < AuthoredPuzzle::cell_count; ++cell) {
        view.grid[cell] = corpus.paper(puzzle.grid_order[cell]).title;
    }
    return view;
}

nlohmann::ordered_json to_json(const AuthoredPuzzle& puzzle) {
    nlohmann::ordered_json j;
    j["game"] = "authored";
    j["seed"] = seed_to_hex(puzzle.seed);
    auto& groups = j["groups"] = nlohmann::ordered_json::array();
    for (const auto& group : puzzle.groups) {
        groups.push_back({{"author", group.target_author}, {"papers", group.paper_ids}});
    }
    j["grid_order"] = puzzle.grid_order;
    return j;
}

nlohmann::ordered_json to_json(const AuthoredView& view) {
    nlohmann::ordered_json j;
    j["game"] = "authored";
    j["seed"] = seed_to_hex(view.seed);
    j["grid"] = view.grid;
    return j;
}

AuthoredPuzzle authored_puzzle_from_json(const nlohmann::ordered_json& j) {
    try {
        if (j.at("game") != "authored") {
            throw BadInput("not an authored puzzle");
        }
        AuthoredPuzzle puzzle;
        const auto seed = parse_seed_hex(j.at("seed").get<std::string>());
        if (!seed) {
            throw BadInput("bad seed");
        }
        puzzle.seed = *seed;
        const auto& groups = j.at("groups");
        const auto& grid = j.at("grid_order");
        if (groups.size() != AuthoredPuzzle::group_count || grid.size() != AuthoredPuzzle::cell_count) {
            throw BadInput("authored puzzle needs 3 groups and 9 grid cells");
        }
        for (std::size_t g = 0; g < AuthoredPuzzle::group_count; ++g) {
            puzzle.groups[g].target_author = groups[g].at("author").get<std::string>();
            const auto& papers = groups[g].at("papers");
            if (papers.size() != AuthoredPuzzle::group_size) {
                throw BadInput("each group needs 3 papers");
            }
            for (std::size_t i = 0; i < AuthoredPuzzle::group_size; ++i) {
                puzzle.groups[g].paper_ids[i] = papers[i].get<PaperId>();
            }
        }
        for (std::size_t c = 0; c < AuthoredPuzzle::cell_count; ++c) {
            puzzle.grid_order[c] = grid[c].get<PaperId>();
        }
        return puzzle;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("malformed authored puzzle: ") + e.what());
    }
}

}  // namespace pubgames
