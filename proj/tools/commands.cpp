#include "commands.hpp"

#include "pubgames/rng.hpp"
#include "pubgames/service.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pubgames::cli {

namespace {

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream out;
    out << "row " << d.row;
    if (!d.column.empty()) {
        out << ", column " << d.column;
    }
    out << ": " << to_string(d.kind) << ": " << d.message;
    return out.str();
}

std::optional<Corpus> open_corpus(const std::string& path, std::ostream& err) {
    try {
        return load_corpus(read_file(path));
    } catch (const std::exception& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

int ingest(const std::string& path, bool strict, std::ostream& out, std::ostream& err) {
    std::string bytes;
    try {
        bytes = read_file(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    const auto diagnostics = validate_corpus(bytes);
    if (!diagnostics.empty()) {
        const std::size_t shown = strict ? diagnostics.size() : 1;
        for (std::size_t i = 0; i < shown; ++i) {
            err << path << ": " << format_diagnostic(diagnostics[i]) << "\n";
        }
        if (!strict && diagnostics.size() > 1) {
            err << "(" << diagnostics.size() - 1 << " more; rerun with --strict to list all)\n";
        }
        return kFailure;
    }
    const Corpus corpus = load_corpus(bytes);
    out << corpus.size() << " papers loaded (" << corpus.colon_eligible().size() << " colon-eligible, "
        << corpus.eligible_authors().size() << " eligible authors)\n";
    return kOk;
}

int stats(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto corpus = open_corpus(path, err);
    if (!corpus) {
        return kFailure;
    }
    out << to_json(corpus_stats(*corpus)).dump() << "\n";
    return kOk;
}

int generate(const std::string& path, GameKind game, const std::string& seed_arg, std::size_t count,
             const std::string& out_dir, std::ostream& out, std::ostream& err) {
    const auto corpus = open_corpus(path, err);
    if (!corpus) {
        return kFailure;
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        err << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
        return kFailure;
    }
    int status = kOk;
    for (std::uint64_t seed : generation_seeds(game, seed_arg, count)) {
        const auto file = std::filesystem::path(out_dir) / (std::string(to_string(game)) + "-" + seed_to_hex(seed) + ".json");
        try {
            const auto j = game == GameKind::Colon ? to_json(generate_colon(*corpus, seed))
                                                   : to_json(generate_authored(*corpus, seed));
            std::ofstream f(file, std::ios::binary);
            f << j.dump(2) << "\n";
            if (!f) {
                throw std::runtime_error("write failed");
            }
            out << file.string() << "\n";
        } catch (const CorpusTooSmall& e) {
            err << "CorpusTooSmall: " << e.what() << "\n";
            status = kFailure;
        } catch (const GenerationExhausted& e) {
            err << "GenerationExhausted: " << e.what() << "\n";
            status = kFailure;
        } catch (const std::exception& e) {
            err << "error: " << file.string() << ": " << e.what() << "\n";
            status = kFailure;
        }
    }
    return status;
}

int serve(const std::string& path, const std::string& host, int port, const std::string& results,
          const std::string& web_root, std::ostream& out, std::ostream& err) {
    auto corpus = open_corpus(path, err);
    if (!corpus) {
        return kFailure;
    }
    ServiceConfig config;
    if (!results.empty()) {
        config.results_path = results;
    }
    if (!web_root.empty()) {
        config.web_root = web_root;
    }
    Service service(std::make_shared<const Corpus>(std::move(*corpus)), std::move(config));
    httplib::Server server;
    service.mount(server);
    out << "serving " << path << " on http://" << host << ":" << port << std::endl;
    if (!server.listen(host, port)) {
        err << "error: cannot listen on " << host << ":" << port << "\n";
        return kFailure;
    }
    return kOk;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

bool is_quit(const std::string& line) {
    return line == "q" || line == "quit" || line == "exit";
}

void print_reveal_and_share(const GameState& state, const std::vector<RevealRecord>& records, std::ostream& out) {
    out << "\nSolved!\n\nPapers:\n";
    for (const auto& r : records) {
        out << "  " << r.title << " (" << r.venue << " " << r.year << ")";
        if (r.doi) {
            out << " https://doi.org/" << *r.doi;
        } else if (r.url) {
            out << " " << *r.url;
        }
        out << "\n";
    }
    out << "\n" << share_text(state) << "\n";
}

void print_verdict(const Verdict& v, std::ostream& out) {
    switch (v.kind) {
        case VerdictKind::Correct:
            out << "Correct!";
            if (v.author) {
                out << " Shared author: " << *v.author;
            }
            out << "\n";
            break;
        case VerdictKind::Incorrect: out << "Incorrect.\n"; break;
        case VerdictKind::Rejected: out << "Rejected: " << v.reason << "\n"; break;
    }
}

void print_colon_board(const ColonPuzzle& puzzle, const GameState& state, std::ostream& out) {
    const auto view = colon_view(puzzle);
    out << "\nPrefixes:\n";
    for (std::size_t i = 0; i < ColonPuzzle::size; ++i) {
        out << "  " << i + 1 << ". " << view.prefixes[i];
        if (state.is_solved(i)) {
            out << ": " << puzzle.items[i].suffix << "  [locked]";
        }
        out << "\n";
    }
    out << "Suffixes:\n";
    for (std::size_t d = 0; d < ColonPuzzle::size; ++d) {
        if (!state.is_solved(puzzle.display_perm[d])) {
            out << "  " << static_cast<char>('A' + d) << ". " << view.suffixes[d] << "\n";
        }
    }
    out << "Mistakes: " << state.mistakes << "\n";
}

}  // namespace

std::uint64_t resolve_seed(GameKind game, const std::string& seed_or_tag) {
    if (const auto seed = parse_seed_hex(seed_or_tag)) {
        return *seed;
    }
    return derive_seed(std::string(to_string(game)) + ":" + seed_or_tag);
}

std::vector<std::uint64_t> generation_seeds(GameKind game, const std::string& seed_or_tag, std::size_t count) {
    std::vector<std::uint64_t> seeds;
    const auto hex = parse_seed_hex(seed_or_tag);
    for (std::size_t i = 0; i < count; ++i) {
        seeds.push_back(hex ? *hex + i
                            : derive_seed(std::string(to_string(game)) + ":" + seed_or_tag + ":" + std::to_string(i)));
    }
    return seeds;
}

int play_colon(const Corpus& corpus, std::uint64_t seed, std::istream& in, std::ostream& out, std::ostream& err) {
    ColonPuzzle puzzle;
    try {
        puzzle = generate_colon(corpus, seed);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    GameState state = GameState::start(puzzle);
    out << "Colon #" << seed_to_hex(seed).substr(0, 8) << " (seed " << seed_to_hex(seed) << ")\n"
        << "Reconnect each prefix with its suffix.\n";
    std::string line;
    while (!state.completed()) {
        print_colon_board(puzzle, state, out);
        out << "Pair (e.g. \"1 B\", or \"quit\")> " << std::flush;
        if (!std::getline(in, line)) {
            out << "\n";
            return kAborted;
        }
        line = trim(line);
        if (is_quit(line)) {
            return kAborted;
        }
        std::istringstream tokens(line);
        std::size_t number = 0;
        char letter = 0;
        std::string rest;
        if (!(tokens >> number >> letter) || (tokens >> rest) || !std::isalpha(static_cast<unsigned char>(letter)) ||
            number == 0) {
            out << "Could not read that; enter a prefix number and a suffix letter.\n";
            continue;
        }
        const auto slot = static_cast<std::size_t>(std::toupper(static_cast<unsigned char>(letter)) - 'A');
        print_verdict(submit_colon_guess(state, puzzle, number - 1, slot), out);
    }
    print_reveal_and_share(state, reveal(puzzle, corpus), out);
    return kOk;
}

int play_authored(const Corpus& corpus, std::uint64_t seed, std::istream& in, std::ostream& out, std::ostream& err) {
    AuthoredPuzzle puzzle;
    try {
        puzzle = generate_authored(corpus, seed);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    GameState state = GameState::start(puzzle);
    const auto view = authored_view(puzzle, corpus);
    std::vector<std::string> venues;
    std::vector<int> years;
    out << "Authored #" << seed_to_hex(seed).substr(0, 8) << " (seed " << seed_to_hex(seed) << ")\n"
        << "Find three groups of three papers that share an author.\n";
    std::string line;
    while (!state.completed()) {
        out << "\n";
        for (std::size_t c = 0; c < AuthoredPuzzle::cell_count; ++c) {
            out << "  " << c + 1 << ". " << view.grid[c];
            if (!venues.empty() || !years.empty()) {
                out << "  [";
                if (!venues.empty()) {
                    out << venues[c];
                }
                if (!years.empty()) {
                    out << (venues.empty() ? "" : " ") << years[c];
                }
                out << "]";
            }
            if (const auto g = puzzle.group_of_cell(c); state.is_solved(g)) {
                out << "  <" << puzzle.groups[g].target_author << ">";
            }
            out << "\n";
        }
        out << "Mistakes: " << state.mistakes << "\n";
        out << "Three papers (e.g. \"1 4 7\", or \"quit\")> " << std::flush;
        if (!std::getline(in, line)) {
            out << "\n";
            return kAborted;
        }
        line = trim(line);
        if (is_quit(line)) {
            return kAborted;
        }
        std::istringstream tokens(line);
        std::vector<std::size_t> cells;
        std::string token;
        bool parsed = true;
        while (tokens >> token) {
            if (!std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
                token.size() > 3) {
                parsed = false;
                break;
            }
            const auto n = static_cast<std::size_t>(std::stoul(token));
            // 0 maps past the grid so the engine rejects it.
            cells.push_back(n == 0 ? AuthoredPuzzle::cell_count : n - 1);
        }
        if (!parsed || cells.empty()) {
            out << "Could not read that; enter three paper numbers.\n";
            continue;
        }
        const Verdict verdict = submit_authored_guess(state, puzzle, corpus, cells);
        print_verdict(verdict, out);
        if (verdict.newly_revealed) {
            if (verdict.newly_revealed->kind == HintPayload::Kind::Venues) {
                venues = verdict.newly_revealed->venues;
                out << "Hint: venues revealed.\n";
            } else {
                years = verdict.newly_revealed->years;
                out << "Hint: years revealed.\n";
            }
        }
    }
    print_reveal_and_share(state, reveal(puzzle, corpus), out);
    return kOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colon and Authored: puzzle games over publication metadata", "pubgames"};
    app.require_subcommand(1);

    std::string corpus_path;
    auto add_corpus = [&](CLI::App* sub) {
        sub->add_option("--corpus", corpus_path, "Corpus CSV (title,authors,year,venue,doi,url)")
            ->envname("PUBGAMES_CORPUS")
            ->required();
    };
    const std::map<std::string, GameKind> games{{"colon", GameKind::Colon}, {"authored", GameKind::Authored}};

    auto* ingest_cmd = app.add_subcommand("ingest", "Validate a corpus file");
    add_corpus(ingest_cmd);
    bool strict = false;
    ingest_cmd->add_flag("--strict", strict, "Report every diagnostic, not just the first");

    auto* stats_cmd = app.add_subcommand("stats", "Print corpus statistics as JSON");
    add_corpus(stats_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "Write puzzle JSON files");
    add_corpus(generate_cmd);
    GameKind game = GameKind::Colon;
    std::string seed_arg;
    std::size_t count = 1;
    std::string out_dir;
    generate_cmd->add_option("--game", game, "colon or authored")
        ->required()
        ->transform(CLI::CheckedTransformer(games, CLI::ignore_case));
    generate_cmd->add_option("--seed", seed_arg, "16 hex digits, or a tag")->required();
    generate_cmd->add_option("--count", count, "Number of puzzles")->check(CLI::PositiveNumber);
    generate_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
    add_corpus(serve_cmd);
    std::string host = "0.0.0.0";
    int port = 8080;
    std::string results;
    std::string web_root;
    serve_cmd->add_option("--host", host, "Listen address");
    serve_cmd->add_option("--port", port, "Listen port")->envname("PUBGAMES_PORT")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--results", results, "JSON-lines results log")->envname("PUBGAMES_RESULTS");
    serve_cmd->add_option("--web-root", web_root, "Static web client directory served at /")
        ->check(CLI::ExistingDirectory);

    auto* play_cmd = app.add_subcommand("play", "Play in the terminal");
    add_corpus(play_cmd);
    std::string play_seed;
    play_cmd->add_option("--game", game, "colon or authored")
        ->required()
        ->transform(CLI::CheckedTransformer(games, CLI::ignore_case));
    play_cmd->add_option("--seed", play_seed, "16 hex digits, or a tag such as a date (default: today's daily)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    if (ingest_cmd->parsed()) {
        return ingest(corpus_path, strict, out, err);
    }
    if (stats_cmd->parsed()) {
        return stats(corpus_path, out, err);
    }
    if (generate_cmd->parsed()) {
        return generate(corpus_path, game, seed_arg, count, out_dir, out, err);
    }
    if (serve_cmd->parsed()) {
        return serve(corpus_path, host, port, results, web_root, out, err);
    }
    const auto corpus = open_corpus(corpus_path, err);
    if (!corpus) {
        return kFailure;
    }
    const std::uint64_t seed =
        resolve_seed(game, play_seed.empty() ? utc_date(std::chrono::system_clock::now()) : play_seed);
    return game == GameKind::Colon ? play_colon(*corpus, seed, in, out, err)
                                   : play_authored(*corpus, seed, in, out, err);
}

}  // namespace pubgames::cli
