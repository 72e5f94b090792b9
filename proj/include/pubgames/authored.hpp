#pragma once

#include "pubgames/corpus.hpp"

#include <array>
#include <cstdint>

namespace pubgames {

class Rng;

struct AuthoredGroup {
    std::string target_author;
    std::array<PaperId, 3> paper_ids{};

    bool operator==(const AuthoredGroup&) const = default;
};

/// Nine papers hiding three triples, each sharing one target author.
struct AuthoredPuzzle {
    static constexpr std::size_t group_count = 3;
    static constexpr std::size_t group_size = 3;
    static constexpr std::size_t cell_count = group_count * group_size;

    std::uint64_t seed = 0;
    std::array<AuthoredGroup, group_count> groups;
    std::array<PaperId, cell_count> grid_order{};  // display order

    /// Group index owning the paper at a grid position.
    std::size_t group_of_cell(std::size_t cell) const;

    bool operator==(const AuthoredPuzzle&) const = default;
};

struct AuthoredView {
    std::uint64_t seed = 0;
    std::array<std::string, AuthoredPuzzle::cell_count> grid;  // titles
};

/// Number of unordered splits of nine papers into three triples in which
/// every triple shares at least one author. 0..280.
using PartitionCount = unsigned;

inline constexpr std::size_t kMaxAuthoredProposals = 10'000;

/// One proposal before acceptance checks: three authors drawn uniformly from
/// the eligible list, then three of each author's papers.
std::array<AuthoredGroup, 3> propose_authored(const Corpus& corpus, Rng& rng);

enum class ProposalCheck { Accepted, RepeatedPaper, CrossGroupAuthor, AmbiguousPartition };

ProposalCheck check_proposal(const Corpus& corpus, const std::array<AuthoredGroup, 3>& groups);

/// Throws CorpusTooSmall or GenerationExhausted.
AuthoredPuzzle generate_authored(const Corpus& corpus, std::uint64_t seed);

/// Exhaustive count over all 280 partitions. Throws BadInput unless given
/// nine distinct known ids.
PartitionCount count_valid_partitions(std::span<const PaperId> paper_ids, const Corpus& corpus);

AuthoredView authored_view(const AuthoredPuzzle& puzzle, const Corpus& corpus);

nlohmann::ordered_json to_json(const AuthoredPuzzle& puzzle);
nlohmann::ordered_json to_json(const AuthoredView& view);

AuthoredPuzzle authored_puzzle_from_json(const nlohmann::ordered_json& j);

}  // namespace pubgames
