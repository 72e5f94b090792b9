#include "pubgames/colon.hpp"

#include "pubgames/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pubgames {

namespace {

bool has_collision(const std::array<ColonItem, ColonPuzzle::size>& items) {
    std::set<std::string> prefixes;
    std::set<std::string> suffixes;
    for (const auto& item : items) {
        if (!prefixes.insert(casefold(item.prefix)).second || !suffixes.insert(casefold(item.suffix)).second) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::array<std::size_t, ColonPuzzle::size> ColonPuzzle::solution() const {
    std::array<std::size_t, size> inverse{};
    for (std::size_t slot = 0; slot < size; ++slot) {
        inverse[display_perm[slot]] = slot;
    }
    return inverse;
}

ColonPuzzle generate_colon(const Corpus& corpus, std::uint64_t seed) {
    const auto& eligible = corpus.colon_eligible();
    if (eligible.size() < ColonPuzzle::size) {
        throw CorpusTooSmall("colon: need at least 4 colon-eligible papers, corpus has " +
                             std::to_string(eligible.size()));
    }

    Rng rng(seed);
    ColonPuzzle puzzle;
    puzzle.seed = seed;
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kMaxColonCandidates && !accepted; ++attempt) {
        const auto picks = rng.sample_distinct(ColonPuzzle::size, eligible.size());
        for (std::size_t i = 0; i < ColonPuzzle::size; ++i) {
            const PaperId id = eligible[picks[i]];
            auto split = colon_split(corpus.paper(id).title);
            puzzle.items[i] = ColonItem{id, std::move(split->prefix), std::move(split->suffix)};
        }
        accepted = !has_collision(puzzle.items);
    }
    if (!accepted) {
        throw GenerationExhausted("colon: every candidate had a duplicate prefix or suffix (seed " +
                                  seed_to_hex(seed) + ")");
    }

    constexpr std::array<std::size_t, ColonPuzzle::size> identity{0, 1, 2, 3};
    do {
        puzzle.display_perm = identity;
        rng.shuffle(std::span<std::size_t>(puzzle.display_perm));
    } while (puzzle.display_perm == identity);
    return puzzle;
}

ColonView colon_view(const ColonPuzzle& puzzle) {
    ColonView view;
    view.seed = puzzle.seed;
    for (std::size_t i = 0; i < ColonPuzzle::size; ++i) {
        view.prefixes[i] = puzzle.items[i].prefix;
        view.suffixes[i] = puzzle.items[puzzle.display_perm[i]].suffix;
    }
    return view;
}

nlohmann::ordered_json to_json(const ColonPuzzle& puzzle) {
    nlohmann::ordered_json j;
    j["game"] = "colon";
    j["seed"] = seed_to_hex(puzzle.seed);
    auto& items = j["items"] = nlohmann::ordered_json::array();
    for (const auto& item : puzzle.items) {
        items.push_back({{"paper", item.paper}, {"prefix", item.prefix}, {"suffix", item.suffix}});
    }
    j["display_perm"] = puzzle.display_perm;
    return j;
}

nlohmann::ordered_json to_json(const ColonView& view) {
    nlohmann::ordered_json j;
    j["game"] = "colon";
    j["seed"] = seed_to_hex(view.seed);
    j["prefixes"] = view.prefixes;
    j["suffixes"] = view.suffixes;
    return j;
}

ColonPuzzle colon_puzzle_from_json(const nlohmann::ordered_json& j) {
    try {
        if (j.at("game") != "colon") {
            throw BadInput("not a colon puzzle");
        }
        ColonPuzzle puzzle;
        const auto seed = parse_seed_hex(j.at("seed").get<std::string>());
        if (!seed) {
            throw BadInput("bad seed");
        }
        puzzle.seed = *seed;
        const auto& items = j.at("items");
        const auto& perm = j.at("display_perm");
        if (items.size() != ColonPuzzle::size || perm.size() != ColonPuzzle::size) {
            throw BadInput("colon puzzle needs 4 items and a 4-element display_perm");
        }
        for (std::size_t i = 0; i < ColonPuzzle::size; ++i) {
            puzzle.items[i] = ColonItem{items[i].at("paper").get<PaperId>(), items[i].at("prefix").get<std::string>(),
                                        items[i].at("suffix").get<std::string>()};
            puzzle.display_perm[i] = perm[i].get<std::size_t>();
        }
        auto sorted = puzzle.display_perm;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<std::size_t, 4>{0, 1, 2, 3}) {
            throw BadInput("display_perm is not a permutation");
        }
        return puzzle;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("malformed colon puzzle: ") + e.what());
    }
}

}  // namespace pubgames
