#pragma once

#include "pubgames/corpus.hpp"

#include <cstdint>
#include <string>

namespace pubgames {

/// Exact C(n, k) as a decimal string. Throws BadInput if k > n.
std::string n_choose_k(std::uint64_t n, std::uint64_t k);

/// round(n * ln(n) / k), half away from zero: expected number of games
/// showing k of n items before every item has been seen once.
/// Throws BadInput on zero arguments.
std::uint64_t coupon_estimate(std::uint64_t n, std::uint64_t k);

/// round(n * H_n / k), the exact coupon-collector expectation, for
/// comparison with coupon_estimate.
std::uint64_t coupon_estimate_harmonic(std::uint64_t n, std::uint64_t k);

struct CorpusStats {
    std::uint64_t total_papers = 0;
    std::uint64_t colon_eligible = 0;
    std::uint64_t eligible_authors = 0;
    std::string colon_pool = "0";  // C(colon_eligible, 4); "0" below 4
    std::uint64_t colon_coupon = 0;
    std::uint64_t authored_coupon = 0;
    std::uint64_t colon_coupon_harmonic = 0;
    std::uint64_t authored_coupon_harmonic = 0;
};

/// Derived fields follow from the three counts.
CorpusStats stats_from_counts(std::uint64_t total_papers, std::uint64_t colon_eligible,
                              std::uint64_t eligible_authors);

CorpusStats corpus_stats(const Corpus& corpus);

/// {"total_papers","colon_eligible","eligible_authors","colon_pool","colon_coupon","authored_coupon"}
nlohmann::ordered_json to_json(const CorpusStats& stats);

}  // namespace pubgames
