#include "commands.hpp"

#include "pubgames/authored.hpp"
#include "pubgames/colon.hpp"
#include "pubgames/rng.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pubgames;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "pubgames-cli-tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string write_csv(const std::string& name, const std::string& body) {
    const auto path = scratch(name) / "corpus.csv";
    std::ofstream(path) << body;
    return path.string();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

const std::string kFixture = test::data_path("fixture.csv");

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ingest") {
    SUBCASE("fixture loads") {
        const auto r = run_cli({"ingest", "--corpus", kFixture});
        CHECK(r.code == cli::kOk);
        CHECK(r.out.rfind("120 papers loaded", 0) == 0);
    }
    SUBCASE("missing title names the row and column") {
        const auto path = write_csv("missing-title", "title,authors,year,venue,doi,url\n"
                                                     "A: B,Ann Lee,2020,VIS,,\n"
                                                     ",Bo Chan,2021,VIS,,\n");
        const auto r = run_cli({"ingest", "--corpus", path});
        CHECK(r.code == cli::kFailure);
        CHECK(r.err.find("row 1, column title") != std::string::npos);
        CHECK(r.err.find("BadField") != std::string::npos);
    }
    SUBCASE("duplicate author within a row") {
        const auto path = write_csv("dup-author", "title,authors,year,venue,doi,url\n"
                                                  "A: B,Ann Lee|Ann  Lee,2020,VIS,,\n");
        const auto r = run_cli({"ingest", "--corpus", path});
        CHECK(r.code == cli::kFailure);
        CHECK(r.err.find("column authors") != std::string::npos);
    }
    SUBCASE("strict lists every diagnostic") {
        const auto first = run_cli({"ingest", "--corpus", test::data_path("bad.csv")});
        const auto all = run_cli({"ingest", "--strict", "--corpus", test::data_path("bad.csv")});
        CHECK(first.code == cli::kFailure);
        CHECK(all.code == cli::kFailure);
        CHECK(first.err.find("2 more") != std::string::npos);
        CHECK(std::count(all.err.begin(), all.err.end(), '\n') == 3);
    }
    SUBCASE("missing file") {
        CHECK(run_cli({"ingest", "--corpus", "/nonexistent/corpus.csv"}).code == cli::kFailure);
    }
}

TEST_CASE("argument errors") {
    CHECK(run_cli({}).code == cli::kFailure);
    CHECK(run_cli({"ingest", "--corpus", kFixture, "--bogus"}).code == cli::kFailure);
    CHECK(run_cli({"ingest"}).code == cli::kFailure);
    CHECK(run_cli({"generate", "--corpus", kFixture, "--game", "chess", "--seed", "x", "--out", "/tmp"}).code ==
          cli::kFailure);
    CHECK(run_cli({"--help"}).code == cli::kOk);
}

TEST_CASE("stats") {
    const auto r = run_cli({"stats", "--corpus", kFixture});
    CHECK(r.code == cli::kOk);
    CHECK(r.out ==
          R"({"total_papers":120,"colon_eligible":20,"eligible_authors":30,"colon_pool":"4845","colon_coupon":15,"authored_coupon":34})"
          "\n");
}

TEST_CASE("seed resolution") {
    CHECK(cli::resolve_seed(GameKind::Colon, "ca5af6cb9ecc13d4") == 0xca5af6cb9ecc13d4ULL);
    CHECK(cli::resolve_seed(GameKind::Colon, "test-1") == derive_seed("colon:test-1"));
    CHECK(cli::resolve_seed(GameKind::Authored, "2025-01-31") == 0x3070a562b38805abULL);
    CHECK(cli::generation_seeds(GameKind::Colon, "0000000000000010", 3) ==
          std::vector<std::uint64_t>{0x10, 0x11, 0x12});
    CHECK(cli::generation_seeds(GameKind::Authored, "test", 2) ==
          std::vector<std::uint64_t>{derive_seed("authored:test:0"), derive_seed("authored:test:1")});
}

TEST_CASE("generate") {
    SUBCASE("three files, byte-identical on rerun") {
        const auto dir_a = scratch("gen-a");
        const auto dir_b = scratch("gen-b");
        for (const auto& dir : {dir_a, dir_b}) {
            const auto r = run_cli({"generate", "--corpus", kFixture, "--game", "authored", "--seed", "test",
                                    "--count", "3", "--out", dir.string()});
            REQUIRE(r.code == cli::kOk);
        }
        std::size_t files = 0;
        for (const auto& entry : fs::directory_iterator(dir_a)) {
            ++files;
            CHECK(slurp(entry.path()) == slurp(dir_b / entry.path().filename()));
        }
        CHECK(files == 3);
        const auto seed = derive_seed("authored:test:0");
        const auto file = dir_a / ("authored-" + seed_to_hex(seed) + ".json");
        CHECK(slurp(file) == to_json(generate_authored(test::fixture(), seed)).dump(2) + "\n");
    }
    SUBCASE("colon from a hex seed") {
        const auto dir = scratch("gen-hex");
        const auto r = run_cli({"generate", "--corpus", kFixture, "--game", "colon", "--seed", "ca5af6cb9ecc13d4",
                                "--out", dir.string()});
        CHECK(r.code == cli::kOk);
        const auto puzzle = colon_puzzle_from_json(
            nlohmann::ordered_json::parse(slurp(dir / "colon-ca5af6cb9ecc13d4.json")));
        CHECK(puzzle == generate_colon(test::fixture(), 0xca5af6cb9ecc13d4ULL));
    }
    SUBCASE("too few colon titles") {
        const auto path = write_csv("three-colon", "title,authors,year,venue,doi,url\n"
                                                   "A: One,Ann Lee,2020,VIS,,\n"
                                                   "B: Two,Ann Lee,2020,VIS,,\n"
                                                   "C: Three,Ann Lee,2020,VIS,,\n");
        const auto dir = scratch("gen-small");
        const auto r = run_cli({"generate", "--corpus", path, "--game", "colon", "--seed", "x", "--out",
                                dir.string()});
        CHECK(r.code == cli::kFailure);
        CHECK(r.err.find("CorpusTooSmall") != std::string::npos);
        CHECK(fs::is_empty(dir));
    }
}

TEST_CASE("play colon") {
    const std::vector<std::string> args{"play", "--corpus", kFixture, "--game", "colon", "--seed",
                                        "ca5af6cb9ecc13d4"};
    SUBCASE("scripted solve ends with the share card") {
        const auto r = run_cli(args, "1 B\n2 A\n3 C\n4 D\n");
        CHECK(r.code == cli::kOk);
        const std::string card =
            "Colon #ca5af6cb\n" + test::kGreen + test::kGreen + test::kGreen + test::kGreen + "\nMistakes: 0\n";
        CHECK(ends_with(r.out, card));
        CHECK(r.out.find("Solved!") != std::string::npos);
        CHECK(r.out.find("Mosaic: Scalable Linked Views") != std::string::npos);
    }
    SUBCASE("garbage re-prompts without costing a mistake") {
        const auto r = run_cli(args, "hello\n9 Z\n1 B\n2 A\n3 C\n4 D\n");
        CHECK(r.code == cli::kOk);
        CHECK(ends_with(r.out, "Mistakes: 0\n"));
    }
    SUBCASE("a wrong pair counts") {
        const auto r = run_cli(args, "1 A\n1 B\n2 A\n3 C\n4 D\n");
        CHECK(r.code == cli::kOk);
        CHECK(ends_with(r.out, "\nMistakes: 1\n"));
    }
    SUBCASE("quit and EOF abort") {
        CHECK(run_cli(args, "1 B\nquit\n").code == cli::kAborted);
        CHECK(run_cli(args, "1 B\n").code == cli::kAborted);
    }
}

TEST_CASE("play authored") {
    const std::vector<std::string> args{"play", "--corpus", kFixture, "--game", "authored", "--seed",
                                        "ad5dac18f6489381"};
    const auto r = run_cli(args, "1 2 3\n1 5 6\n3 4 8\n2 7 9\n");
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("Hint: venues revealed.") != std::string::npos);
    CHECK(r.out.find("Shared author: Sven Nilsson") != std::string::npos);
    CHECK(ends_with(r.out, "Authored #ad5dac18\n" + test::kRed + test::kGreen + test::kGreen + test::kGreen +
                               "\nMistakes: 1\n"));
    CHECK(run_cli(args, "q\n").code == cli::kAborted);
}

}  // TEST_SUITE
