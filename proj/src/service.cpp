#include "pubgames/service.hpp"

#include "pubgames/rng.hpp"

#include <httplib.h>

#include <algorithm>
#include <ctime>
#include <fstream>
#include <set>

namespace pubgames {

using json = nlohmann::ordered_json;

namespace {

HttpResponse json_response(int status, const json& body) {
    return HttpResponse{status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, const std::string& message) {
    return json_response(status, json{{"error", message}});
}

HttpResponse unavailable() {
    return error_response(503, "corpus not loaded");
}

std::optional<std::uint64_t> non_negative(const json& value) {
    if (value.is_number_unsigned()) {
        return value.get<std::uint64_t>();
    }
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(value.get<std::int64_t>());
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> index_list(const json& value) {
    if (!value.is_array()) {
        return std::nullopt;
    }
    std::vector<std::size_t> out;
    for (const auto& v : value) {
        const auto n = non_negative(v);
        if (!n) {
            return std::nullopt;
        }
        out.push_back(static_cast<std::size_t>(*n));
    }
    return out;
}

// Generates the puzzle for (game, seed) and hands it to `fn`; maps
// generation failures to HTTP errors.
template <typename Fn>
HttpResponse with_puzzle(const Corpus& corpus, GameKind game, std::uint64_t seed, Fn&& fn) {
    try {
        if (game == GameKind::Colon) {
            return fn(generate_colon(corpus, seed));
        }
        return fn(generate_authored(corpus, seed));
    } catch (const CorpusTooSmall& e) {
        return error_response(409, e.what());
    } catch (const GenerationExhausted& e) {
        return error_response(500, e.what());
    }
}

HttpResponse view_response(const Corpus& corpus, GameKind game, std::uint64_t seed) {
    return with_puzzle(corpus, game, seed, [&](const auto& puzzle) {
        using P = std::decay_t<decltype(puzzle)>;
        if constexpr (std::is_same_v<P, ColonPuzzle>) {
            return json_response(200, to_json(colon_view(puzzle)));
        } else {
            return json_response(200, to_json(authored_view(puzzle, corpus)));
        }
    });
}

}  // namespace

std::string utc_date(std::chrono::system_clock::time_point t) {
    return utc_timestamp(t).substr(0, 10);
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
    const std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool valid_date(std::string_view date) {
    if (date.size() != 10 || date[4] != '-' || date[7] != '-') {
        return false;
    }
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
        if (date[i] < '0' || date[i] > '9') {
            return false;
        }
    }
    auto number = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        for (std::size_t i = pos; i < pos + len; ++i) {
            v = v * 10 + (date[i] - '0');
        }
        return v;
    };
    const std::chrono::year_month_day ymd{std::chrono::year{number(0, 4)},
                                          std::chrono::month{static_cast<unsigned>(number(5, 2))},
                                          std::chrono::day{static_cast<unsigned>(number(8, 2))}};
    return ymd.ok();
}

Service::Service(std::shared_ptr<const Corpus> corpus, ServiceConfig config)
    : corpus_(std::move(corpus)), config_(std::move(config)) {}

HttpResponse Service::stats() const {
    if (!corpus_) {
        return unavailable();
    }
    return json_response(200, to_json(corpus_stats(*corpus_)));
}

HttpResponse Service::puzzle(std::string_view game, const std::optional<std::string>& seed_hex) const {
    if (!corpus_) {
        return unavailable();
    }
    const auto kind = parse_game_kind(game);
    if (!kind) {
        return error_response(400, "unknown game '" + std::string(game) + "'");
    }
    if (!seed_hex) {
        return error_response(400, "missing seed parameter");
    }
    const auto seed = parse_seed_hex(*seed_hex);
    if (!seed) {
        return error_response(400, "seed must be 16 lowercase hex digits");
    }
    return view_response(*corpus_, *kind, *seed);
}

HttpResponse Service::daily(std::string_view game, const std::optional<std::string>& date) const {
    if (!corpus_) {
        return unavailable();
    }
    const auto kind = parse_game_kind(game);
    if (!kind) {
        return error_response(400, "unknown game '" + std::string(game) + "'");
    }
    const std::string day = date ? *date : utc_date(config_.clock());
    if (!valid_date(day)) {
        return error_response(400, "date must be YYYY-MM-DD");
    }
    return view_response(*corpus_, *kind, derive_seed(std::string(to_string(*kind)) + ":" + day));
}

HttpResponse Service::guess(std::string_view body) const {
    if (!corpus_) {
        return unavailable();
    }
    const json request = json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object()) {
        return error_response(400, "body must be a JSON object");
    }
    const auto game_it = request.find("game");
    const auto seed_it = request.find("seed_hex");
    const auto mistakes_it = request.find("mistakes_so_far");
    const auto guess_it = request.find("guess");
    if (game_it == request.end() || seed_it == request.end() || mistakes_it == request.end() ||
        guess_it == request.end() || !game_it->is_string() || !seed_it->is_string() || !guess_it->is_object()) {
        return error_response(400, "expected game, seed_hex, mistakes_so_far and guess");
    }
    const auto kind = parse_game_kind(game_it->get<std::string>());
    const auto seed = parse_seed_hex(seed_it->get<std::string>());
    const auto mistakes = non_negative(*mistakes_it);
    if (!kind || !seed || !mistakes) {
        return error_response(400, "bad game, seed_hex or mistakes_so_far");
    }

    GameState state;
    state.kind = *kind;
    state.seed = *seed;
    state.mistakes = static_cast<unsigned>(std::min<std::uint64_t>(*mistakes, 1'000'000));
    state.hint_level = std::min(state.mistakes, kMaxHintLevel);

    return with_puzzle(*corpus_, *kind, *seed, [&](const auto& puzzle) -> HttpResponse {
        using P = std::decay_t<decltype(puzzle)>;
        Verdict verdict;
        if constexpr (std::is_same_v<P, ColonPuzzle>) {
            const auto& g = *guess_it;
            const auto item = g.contains("prefix_item") ? non_negative(g["prefix_item"]) : std::nullopt;
            const auto slot = g.contains("suffix_display_slot") ? non_negative(g["suffix_display_slot"]) : std::nullopt;
            if (!item || !slot) {
                return error_response(400, "colon guess needs prefix_item and suffix_display_slot");
            }
            if (request.contains("locked_items")) {
                const auto locked = index_list(request["locked_items"]);
                if (!locked || std::set<std::size_t>(locked->begin(), locked->end()).size() != locked->size() ||
                    std::any_of(locked->begin(), locked->end(), [](std::size_t i) { return i >= ColonPuzzle::size; })) {
                    return error_response(400, "locked_items must be distinct item indices 0-3");
                }
                state.solved = *locked;
            }
            verdict = submit_colon_guess(state, puzzle, static_cast<std::size_t>(std::min<std::uint64_t>(*item, 4)),
                                         static_cast<std::size_t>(std::min<std::uint64_t>(*slot, 4)));
        } else {
            const auto cells = guess_it->contains("cells") ? index_list((*guess_it)["cells"]) : std::nullopt;
            if (!cells) {
                return error_response(400, "authored guess needs a cells array");
            }
            if (request.contains("solved_cells")) {
                const auto solved = index_list(request["solved_cells"]);
                if (!solved) {
                    return error_response(400, "solved_cells must be an array of grid positions");
                }
                std::set<std::size_t> cell_set(solved->begin(), solved->end());
                if (cell_set.size() != solved->size() ||
                    std::any_of(solved->begin(), solved->end(),
                                [](std::size_t c) { return c >= AuthoredPuzzle::cell_count; })) {
                    return error_response(400, "solved_cells must be distinct grid positions 0-8");
                }
                for (std::size_t g = 0; g < AuthoredPuzzle::group_count; ++g) {
                    std::size_t present = 0;
                    for (std::size_t c = 0; c < AuthoredPuzzle::cell_count; ++c) {
                        present += puzzle.group_of_cell(c) == g && cell_set.contains(c);
                    }
                    if (present == AuthoredPuzzle::group_size) {
                        state.solved.push_back(g);
                    } else if (present != 0) {
                        return error_response(400, "solved_cells does not match solved groups");
                    }
                }
            }
            verdict = submit_authored_guess(state, puzzle, *corpus_, *cells);
        }
        return json_response(verdict.kind == VerdictKind::Rejected ? 422 : 200, to_json(verdict));
    });
}

HttpResponse Service::reveal(const std::optional<std::string>& game, const std::optional<std::string>& seed_hex) const {
    if (!corpus_) {
        return unavailable();
    }
    const auto kind = game ? parse_game_kind(*game) : std::nullopt;
    const auto seed = seed_hex ? parse_seed_hex(*seed_hex) : std::nullopt;
    if (!kind || !seed) {
        return error_response(400, "reveal needs game and seed_hex");
    }
    return with_puzzle(*corpus_, *kind, *seed, [&](const auto& puzzle) {
        json body;
        body["game"] = to_string(*kind);
        body["seed"] = seed_to_hex(*seed);
        const auto records = pubgames::reveal(puzzle, *corpus_);
        if (*kind == GameKind::Colon) {
            auto& papers = body["papers"] = json::array();
            for (const auto& record : records) {
                papers.push_back(to_json(record));
            }
        } else {
            auto& groups = body["groups"] = json::array();
            for (std::size_t i = 0; i < records.size(); i += AuthoredPuzzle::group_size) {
                json group;
                group["author"] = *records[i].group_author;
                auto& papers = group["papers"] = json::array();
                for (std::size_t k = i; k < i + AuthoredPuzzle::group_size; ++k) {
                    papers.push_back(to_json(records[k]));
                }
                groups.push_back(std::move(group));
            }
        }
        return json_response(200, body);
    });
}

HttpResponse Service::result(std::string_view body) {
    const json request = json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object()) {
        return error_response(400, "body must be a JSON object");
    }
    const auto game = request.contains("game") && request["game"].is_string()
                          ? parse_game_kind(request["game"].get<std::string>())
                          : std::nullopt;
    const auto seed = request.contains("seed_hex") && request["seed_hex"].is_string()
                          ? parse_seed_hex(request["seed_hex"].get<std::string>())
                          : std::nullopt;
    const auto mistakes = request.contains("mistakes") ? non_negative(request["mistakes"]) : std::nullopt;
    if (!game || !seed || !mistakes) {
        return error_response(400, "result needs game, seed_hex and a non-negative mistakes count");
    }
    std::optional<std::uint64_t> duration;
    if (request.contains("duration_ms") && !request["duration_ms"].is_null()) {
        duration = non_negative(request["duration_ms"]);
        if (!duration) {
            return error_response(400, "duration_ms must be a non-negative integer");
        }
    }

    json record;
    record["timestamp"] = utc_timestamp(config_.clock());
    record["game"] = to_string(*game);
    record["seed_hex"] = seed_to_hex(*seed);
    record["mistakes"] = *mistakes;
    if (duration) {
        record["duration_ms"] = *duration;
    }
    if (config_.results_path) {
        const std::string line = record.dump() + "\n";
        std::lock_guard lock(log_mutex_);
        std::ofstream out(*config_.results_path, std::ios::app | std::ios::binary);
        out << line;
        out.flush();
        if (!out) {
            return error_response(500, "cannot append to results log");
        }
    }
    return HttpResponse{204, "", "application/json"};
}

void Service::mount(httplib::Server& server) {
    auto send = [](httplib::Response& res, const HttpResponse& r) {
        res.status = r.status;
        if (r.status != 204) {
            res.set_content(r.body, r.content_type);
        }
    };
    auto param = [](const httplib::Request& req, const char* name) -> std::optional<std::string> {
        if (!req.has_param(name)) {
            return std::nullopt;
        }
        return req.get_param_value(name);
    };

    server.Get("/api/v1/stats", [this, send](const httplib::Request&, httplib::Response& res) { send(res, stats()); });
    server.Get(R"(/api/v1/puzzle/([^/]+)/daily)", [this, send, param](const httplib::Request& req, httplib::Response& res) {
        send(res, daily(req.matches[1].str(), param(req, "date")));
    });
    server.Get(R"(/api/v1/puzzle/([^/]+))", [this, send, param](const httplib::Request& req, httplib::Response& res) {
        send(res, puzzle(req.matches[1].str(), param(req, "seed")));
    });
    server.Post("/api/v1/guess", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, guess(req.body));
    });
    server.Get("/api/v1/reveal", [this, send, param](const httplib::Request& req, httplib::Response& res) {
        send(res, reveal(param(req, "game"), param(req, "seed_hex")));
    });
    server.Post("/api/v1/result", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, result(req.body));
    });
    if (config_.web_root) {
        server.set_mount_point("/", *config_.web_root);
    }
}

}  // namespace pubgames
