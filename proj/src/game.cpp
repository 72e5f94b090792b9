#include "pubgames/game.hpp"

#include "pubgames/rng.hpp"

#include <algorithm>

namespace pubgames {

const char* to_string(GameKind kind) noexcept {
    return kind == GameKind::Colon ? "colon" : "authored";
}

std::optional<GameKind> parse_game_kind(std::string_view name) noexcept {
    if (name == "colon") {
        return GameKind::Colon;
    }
    if (name == "authored") {
        return GameKind::Authored;
    }
    return std::nullopt;
}

const char* to_string(VerdictKind kind) noexcept {
    switch (kind) {
        case VerdictKind::Correct: return "Correct";
        case VerdictKind::Incorrect: return "Incorrect";
        case VerdictKind::Rejected: return "Rejected";
    }
    return "?";
}

GameState GameState::start(const ColonPuzzle& puzzle) {
    return GameState{GameKind::Colon, puzzle.seed, {}, {}, 0, 0};
}

GameState GameState::start(const AuthoredPuzzle& puzzle) {
    return GameState{GameKind::Authored, puzzle.seed, {}, {}, 0, 0};
}

bool GameState::is_solved(std::size_t piece) const {
    return std::find(solved.begin(), solved.end(), piece) != solved.end();
}

bool GameState::completed() const {
    const std::size_t pieces = kind == GameKind::Colon ? ColonPuzzle::size : AuthoredPuzzle::group_count;
    return solved.size() == pieces;
}

namespace {

Verdict rejected(std::string reason) {
    Verdict v;
    v.kind = VerdictKind::Rejected;
    v.reason = std::move(reason);
    return v;
}

}  // namespace

Verdict submit_colon_guess(GameState& state, const ColonPuzzle& puzzle, std::size_t prefix_item,
                           std::size_t suffix_slot) {
    Verdict verdict;
    if (prefix_item >= ColonPuzzle::size || suffix_slot >= ColonPuzzle::size) {
        verdict = rejected("index out of range");
    } else if (state.is_solved(prefix_item)) {
        verdict = rejected("prefix already locked");
    } else if (state.is_solved(puzzle.display_perm[suffix_slot])) {
        verdict = rejected("suffix already locked");
    } else if (puzzle.display_perm[suffix_slot] == prefix_item) {
        state.solved.push_back(prefix_item);
        verdict.kind = VerdictKind::Correct;
    } else {
        ++state.mistakes;
        verdict.kind = VerdictKind::Incorrect;
    }
    verdict.completed = state.completed();
    state.guesses.push_back({ColonGuess{prefix_item, suffix_slot}, verdict});
    return verdict;
}

Verdict submit_authored_guess(GameState& state, const AuthoredPuzzle& puzzle, const Corpus& corpus,
                              std::span<const std::size_t> cells) {
    Verdict verdict;
    std::vector<std::size_t> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());

    if (cells.size() != AuthoredPuzzle::group_size) {
        verdict = rejected("select exactly 3 cells");
    } else if (sorted.back() >= AuthoredPuzzle::cell_count) {
        verdict = rejected("cell out of range");
    } else if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        verdict = rejected("duplicate cell");
    } else if (std::any_of(sorted.begin(), sorted.end(),
                           [&](std::size_t c) { return state.is_solved(puzzle.group_of_cell(c)); })) {
        verdict = rejected("cell already solved");
    } else {
        const std::size_t group = puzzle.group_of_cell(sorted[0]);
        const bool same_group = std::all_of(sorted.begin(), sorted.end(),
                                            [&](std::size_t c) { return puzzle.group_of_cell(c) == group; });
        if (same_group) {
            state.solved.push_back(group);
            verdict.kind = VerdictKind::Correct;
            verdict.author = puzzle.groups[group].target_author;
        } else {
            ++state.mistakes;
            verdict.kind = VerdictKind::Incorrect;
            const unsigned level = std::min(state.mistakes, kMaxHintLevel);
            if (level > state.hint_level) {
                state.hint_level = level;
                HintPayload hint;
                hint.kind = level == 1 ? HintPayload::Kind::Venues : HintPayload::Kind::Years;
                for (PaperId id : puzzle.grid_order) {
                    const auto& paper = corpus.paper(id);
                    if (hint.kind == HintPayload::Kind::Venues) {
                        hint.venues.push_back(paper.venue);
                    } else {
                        hint.years.push_back(paper.year);
                    }
                }
                verdict.newly_revealed = std::move(hint);
            }
        }
    }
    verdict.completed = state.completed();
    state.guesses.push_back({AuthoredGuess{{cells.begin(), cells.end()}}, verdict});
    return verdict;
}

std::string share_text(const GameState& state) {
    if (!state.completed()) {
        throw NotCompleted("share card is only available for a completed game");
    }
    std::string text = state.kind == GameKind::Colon ? "Colon #" : "Authored #";
    text += seed_to_hex(state.seed).substr(0, 8);
    text += '\n';
    for (const auto& record : state.guesses) {
        if (record.verdict.kind == VerdictKind::Correct) {
            text += "\xF0\x9F\x9F\xA9";  // U+1F7E9
        } else if (record.verdict.kind == VerdictKind::Incorrect) {
            text += "\xF0\x9F\x9F\xA5";  // U+1F7E5
        }
    }
    text += "\nMistakes: ";
    text += std::to_string(state.mistakes);
    return text;
}

namespace {

RevealRecord make_record(const PaperRecord& paper) {
    return RevealRecord{paper.id, paper.title, paper.authors, paper.year, paper.venue, paper.doi, paper.url, {}};
}

}  // namespace

std::vector<RevealRecord> reveal(const ColonPuzzle& puzzle, const Corpus& corpus) {
    std::vector<RevealRecord> records;
    for (const auto& item : puzzle.items) {
        records.push_back(make_record(corpus.paper(item.paper)));
    }
    return records;
}

std::vector<RevealRecord> reveal(const AuthoredPuzzle& puzzle, const Corpus& corpus) {
    std::vector<RevealRecord> records;
    for (const auto& group : puzzle.groups) {
        for (PaperId id : group.paper_ids) {
            auto record = make_record(corpus.paper(id));
            record.group_author = group.target_author;
            records.push_back(std::move(record));
        }
    }
    return records;
}

nlohmann::ordered_json to_json(const Verdict& verdict) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(verdict.kind);
    j["completed"] = verdict.completed;
    if (verdict.author) {
        j["author"] = *verdict.author;
    }
    if (verdict.newly_revealed) {
        const auto& hint = *verdict.newly_revealed;
        if (hint.kind == HintPayload::Kind::Venues) {
            j["newly_revealed"] = {{"venues", hint.venues}};
        } else {
            j["newly_revealed"] = {{"years", hint.years}};
        }
    }
    if (!verdict.reason.empty()) {
        j["reason"] = verdict.reason;
    }
    return j;
}

nlohmann::ordered_json to_json(const RevealRecord& record) {
    nlohmann::ordered_json j;
    j["paper"] = record.paper;
    j["title"] = record.title;
    j["authors"] = record.authors;
    j["year"] = record.year;
    j["venue"] = record.venue;
    if (record.doi) {
        j["doi"] = *record.doi;
    }
    if (record.url) {
        j["url"] = *record.url;
    }
    return j;
}

namespace {

Verdict verdict_from_json(const nlohmann::ordered_json& j) {
    Verdict v;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Correct") {
        v.kind = VerdictKind::Correct;
    } else if (kind == "Incorrect") {
        v.kind = VerdictKind::Incorrect;
    } else if (kind == "Rejected") {
        v.kind = VerdictKind::Rejected;
    } else {
        throw BadInput("unknown verdict kind '" + kind + "'");
    }
    v.completed = j.at("completed").get<bool>();
    if (j.contains("author")) {
        v.author = j["author"].get<std::string>();
    }
    if (j.contains("newly_revealed")) {
        const auto& h = j["newly_revealed"];
        HintPayload hint;
        if (h.contains("venues")) {
            hint.kind = HintPayload::Kind::Venues;
            hint.venues = h["venues"].get<std::vector<std::string>>();
        } else {
            hint.kind = HintPayload::Kind::Years;
            hint.years = h.at("years").get<std::vector<int>>();
        }
        v.newly_revealed = std::move(hint);
    }
    if (j.contains("reason")) {
        v.reason = j["reason"].get<std::string>();
    }
    return v;
}

}  // namespace

nlohmann::ordered_json to_json(const GameState& state) {
    nlohmann::ordered_json j;
    j["game"] = to_string(state.kind);
    j["seed"] = seed_to_hex(state.seed);
    auto& guesses = j["guesses"] = nlohmann::ordered_json::array();
    for (const auto& record : state.guesses) {
        nlohmann::ordered_json guess;
        if (const auto* colon = std::get_if<ColonGuess>(&record.guess)) {
            guess = {{"prefix_item", colon->prefix_item}, {"suffix_display_slot", colon->suffix_slot}};
        } else {
            guess = {{"cells", std::get<AuthoredGuess>(record.guess).cells}};
        }
        guesses.push_back({{"guess", std::move(guess)}, {"verdict", to_json(record.verdict)}});
    }
    j["solved"] = state.solved;
    j["mistakes"] = state.mistakes;
    j["hint_level"] = state.hint_level;
    return j;
}

GameState game_state_from_json(const nlohmann::ordered_json& j) {
    try {
        GameState state;
        const auto kind = parse_game_kind(j.at("game").get<std::string>());
        const auto seed = parse_seed_hex(j.at("seed").get<std::string>());
        if (!kind || !seed) {
            throw BadInput("bad game kind or seed");
        }
        state.kind = *kind;
        state.seed = *seed;
        for (const auto& record : j.at("guesses")) {
            const auto& g = record.at("guess");
            Guess guess;
            if (state.kind == GameKind::Colon) {
                guess = ColonGuess{g.at("prefix_item").get<std::size_t>(),
                                   g.at("suffix_display_slot").get<std::size_t>()};
            } else {
                guess = AuthoredGuess{g.at("cells").get<std::vector<std::size_t>>()};
            }
            state.guesses.push_back({std::move(guess), verdict_from_json(record.at("verdict"))});
        }
        state.solved = j.at("solved").get<std::vector<std::size_t>>();
        state.mistakes = j.at("mistakes").get<unsigned>();
        state.hint_level = j.at("hint_level").get<unsigned>();
        return state;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("malformed game state: ") + e.what());
    }
}

}  // namespace pubgames
