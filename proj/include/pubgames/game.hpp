#pragma once

#include "pubgames/authored.hpp"
#include "pubgames/colon.hpp"

#include <optional>
#include <variant>

namespace pubgames {

enum class GameKind { Colon, Authored };

const char* to_string(GameKind kind) noexcept;
/// "colon" / "authored"; absent for anything else.
std::optional<GameKind> parse_game_kind(std::string_view name) noexcept;

struct ColonGuess {
    std::size_t prefix_item = 0;
    std::size_t suffix_slot = 0;

    bool operator==(const ColonGuess&) const = default;
};

struct AuthoredGuess {
    std::vector<std::size_t> cells;  // grid positions

    bool operator==(const AuthoredGuess&) const = default;
};

using Guess = std::variant<ColonGuess, AuthoredGuess>;

enum class VerdictKind { Correct, Incorrect, Rejected };

const char* to_string(VerdictKind kind) noexcept;

/// Hint unlocked by an incorrect Authored guess, one entry per grid cell.
struct HintPayload {
    enum class Kind { Venues, Years };
    Kind kind = Kind::Venues;
    std::vector<std::string> venues;
    std::vector<int> years;

    bool operator==(const HintPayload&) const = default;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Rejected;
    std::optional<HintPayload> newly_revealed;
    bool completed = false;
    /// Target author of the group just locked (Authored, Correct only).
    std::optional<std::string> author;
    /// Why a guess was rejected.
    std::string reason;

    bool operator==(const Verdict&) const = default;
};

struct GuessRecord {
    Guess guess;
    Verdict verdict;

    bool operator==(const GuessRecord&) const = default;
};

/// One play session. `solved` holds locked item indices (Colon) or locked
/// group indices (Authored), in the order they were solved.
struct GameState {
    GameKind kind = GameKind::Colon;
    std::uint64_t seed = 0;
    std::vector<GuessRecord> guesses;
    std::vector<std::size_t> solved;
    unsigned mistakes = 0;
    unsigned hint_level = 0;

    static GameState start(const ColonPuzzle& puzzle);
    static GameState start(const AuthoredPuzzle& puzzle);

    bool is_solved(std::size_t piece) const;
    bool completed() const;

    bool operator==(const GameState&) const = default;
};

inline constexpr unsigned kMaxHintLevel = 2;

Verdict submit_colon_guess(GameState& state, const ColonPuzzle& puzzle, std::size_t prefix_item,
                           std::size_t suffix_slot);

/// `corpus` supplies the venue/year hint payloads.
Verdict submit_authored_guess(GameState& state, const AuthoredPuzzle& puzzle, const Corpus& corpus,
                              std::span<const std::size_t> cells);

/// Three lines joined by LF: "<Colon|Authored> #<8 hex>", one emoji per
/// counted guess, "Mistakes: <m>". Throws NotCompleted.
std::string share_text(const GameState& state);

struct RevealRecord {
    PaperId paper = 0;
    std::string title;
    std::vector<std::string> authors;
    int year = 0;
    std::string venue;
    std::optional<std::string> doi;
    std::optional<std::string> url;
    /// Target author of the record's group (Authored only).
    std::optional<std::string> group_author;
};

/// Colon: four records in item order. Authored: nine records, grouped by
/// target author in group order.
std::vector<RevealRecord> reveal(const ColonPuzzle& puzzle, const Corpus& corpus);
std::vector<RevealRecord> reveal(const AuthoredPuzzle& puzzle, const Corpus& corpus);

nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const RevealRecord& record);
nlohmann::ordered_json to_json(const GameState& state);
GameState game_state_from_json(const nlohmann::ordered_json& j);

}  // namespace pubgames
