#include "pubgames/stats.hpp"

#include "pubgames/colon.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace pubgames {

std::string n_choose_k(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        throw BadInput("n_choose_k: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    }
    k = std::min(k, n - k);
    boost::multiprecision::cpp_int value = 1;
    // After step i the accumulator equals C(n - k + i, i), so every division is exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        value *= n - k + i;
        value /= i;
    }
    return value.str();
}

std::uint64_t coupon_estimate(std::uint64_t n, std::uint64_t k) {
    if (n == 0 || k == 0) {
        throw BadInput("coupon_estimate: n and k must be at least 1");
    }
    const double nd = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::llround(nd * std::log(nd) / static_cast<double>(k)));
}

std::uint64_t coupon_estimate_harmonic(std::uint64_t n, std::uint64_t k) {
    if (n == 0 || k == 0) {
        throw BadInput("coupon_estimate_harmonic: n and k must be at least 1");
    }
    double harmonic = 0.0;
    for (std::uint64_t i = n; i >= 1; --i) {
        harmonic += 1.0 / static_cast<double>(i);
    }
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * harmonic / static_cast<double>(k)));
}

CorpusStats stats_from_counts(std::uint64_t total_papers, std::uint64_t colon_eligible,
                              std::uint64_t eligible_authors) {
    CorpusStats stats;
    stats.total_papers = total_papers;
    stats.colon_eligible = colon_eligible;
    stats.eligible_authors = eligible_authors;
    if (colon_eligible >= ColonPuzzle::size) {
        stats.colon_pool = n_choose_k(colon_eligible, ColonPuzzle::size);
    }
    if (colon_eligible > 0) {
        stats.colon_coupon = coupon_estimate(colon_eligible, ColonPuzzle::size);
        stats.colon_coupon_harmonic = coupon_estimate_harmonic(colon_eligible, ColonPuzzle::size);
    }
    if (eligible_authors > 0) {
        stats.authored_coupon = coupon_estimate(eligible_authors, 3);
        stats.authored_coupon_harmonic = coupon_estimate_harmonic(eligible_authors, 3);
    }
    return stats;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    return stats_from_counts(corpus.size(), corpus.colon_eligible().size(), corpus.eligible_authors().size());
}

nlohmann::ordered_json to_json(const CorpusStats& stats) {
    nlohmann::ordered_json j;
    j["total_papers"] = stats.total_papers;
    j["colon_eligible"] = stats.colon_eligible;
    j["eligible_authors"] = stats.eligible_authors;
    j["colon_pool"] = stats.colon_pool;
    j["colon_coupon"] = stats.colon_coupon;
    j["authored_coupon"] = stats.authored_coupon;
    return j;
}

}  // namespace pubgames
