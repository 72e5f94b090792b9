#include "pubgames/rng.hpp"

#include "pubgames/error.hpp"

#include <numeric>

namespace pubgames {

std::uint64_t Rng::next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw BadInput("next_below: bound must be positive");
    }
    // 2^64 mod bound, computed without 128-bit arithmetic.
    const std::uint64_t remainder = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next_u64();
        // remainder == 0 means the acceptance limit is 2^64 itself.
        if (remainder == 0 || x < 0 - remainder) {
            return x % bound;
        }
    }
}

std::vector<std::size_t> Rng::sample_distinct(std::size_t k, std::size_t n) {
    if (k > n) {
        throw InsufficientPopulation("sample_distinct: k=" + std::to_string(k) +
                                     " exceeds population " + std::to_string(n));
    }
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(next_below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

std::uint64_t derive_seed(std::string_view tag) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char byte : tag) {
        h ^= byte;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string seed_to_hex(std::uint64_t seed) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[seed & 0xF];
        seed >>= 4;
    }
    return out;
}

std::optional<std::uint64_t> parse_seed_hex(std::string_view text) noexcept {
    if (text.size() != 16) {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    for (char c : text) {
        std::uint64_t digit;
        if (c >= '0' && c <= '9') {
            digit = static_cast<std::uint64_t>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            digit = static_cast<std::uint64_t>(c - 'a' + 10);
        } else {
            return std::nullopt;
        }
        value = (value << 4) | digit;
    }
    return value;
}

}  // namespace pubgames
