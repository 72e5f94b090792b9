#pragma once

#include "pubgames/corpus.hpp"

#include <array>
#include <cstdint>

namespace pubgames {

struct ColonItem {
    PaperId paper = 0;
    std::string prefix;
    std::string suffix;

    bool operator==(const ColonItem&) const = default;
};

/// Four colon titles split in two; suffixes are shown in a shuffled order.
struct ColonPuzzle {
    static constexpr std::size_t size = 4;

    std::uint64_t seed = 0;
    std::array<ColonItem, size> items;
    /// display slot -> item index; never the identity.
    std::array<std::size_t, size> display_perm{};

    /// item index -> display slot holding its suffix.
    std::array<std::size_t, size> solution() const;

    bool operator==(const ColonPuzzle&) const = default;
};

/// Client projection: no pairing, no paper ids.
struct ColonView {
    std::uint64_t seed = 0;
    std::array<std::string, ColonPuzzle::size> prefixes;  // item order
    std::array<std::string, ColonPuzzle::size> suffixes;  // display order
};

inline constexpr std::size_t kMaxColonCandidates = 10'000;

/// Throws CorpusTooSmall or GenerationExhausted.
ColonPuzzle generate_colon(const Corpus& corpus, std::uint64_t seed);

ColonView colon_view(const ColonPuzzle& puzzle);

nlohmann::ordered_json to_json(const ColonPuzzle& puzzle);
nlohmann::ordered_json to_json(const ColonView& view);

/// Inverse of to_json(ColonPuzzle); throws BadInput on schema violations.
ColonPuzzle colon_puzzle_from_json(const nlohmann::ordered_json& j);

}  // namespace pubgames
