#pragma once

#include "pubgames/game.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pubgames::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kAborted = 2;  // play ended before completion

/// Parses argv and runs one subcommand. All normal output goes to `out`,
/// diagnostics to `err`; `in` feeds interactive play.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// A 16-hex-digit seed is used verbatim; anything else is a tag hashed as
/// "<game>:<tag>".
std::uint64_t resolve_seed(GameKind game, const std::string& seed_or_tag);

/// Seeds for `generate`: tag -> derive_seed("<game>:<tag>:<i>"),
/// hex -> seed + i.
std::vector<std::uint64_t> generation_seeds(GameKind game, const std::string& seed_or_tag, std::size_t count);

int play_colon(const Corpus& corpus, std::uint64_t seed, std::istream& in, std::ostream& out, std::ostream& err);
int play_authored(const Corpus& corpus, std::uint64_t seed, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pubgames::cli
