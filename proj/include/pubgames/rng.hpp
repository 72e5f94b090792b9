#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pubgames {

/// splitmix64 generator. The output sequence is a pure function of the
/// initial state, which makes every puzzle reproducible from its seed in any
/// language that implements the same few lines.
class Rng {
public:
    explicit Rng(std::uint64_t state) noexcept : state_(state) {}

    std::uint64_t next_u64() noexcept;

    /// Uniform value in [0, bound). Rejects draws at or above the largest
    /// multiple of `bound` that fits in 2^64, so every residue is equally likely.
    std::uint64_t next_below(std::uint64_t bound);

    /// Descending Fisher-Yates.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i-- > 1;) {
            auto j = static_cast<std::size_t>(next_below(i + 1));
            using std::swap;
            swap(items[i], items[j]);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        shuffle(std::span<T>(items));
    }

    /// k distinct indices in [0, n), in selection order (partial Fisher-Yates).
    std::vector<std::size_t> sample_distinct(std::size_t k, std::size_t n);

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// FNV-1a 64 over the UTF-8 bytes of `tag` ("<game>:<label>").
std::uint64_t derive_seed(std::string_view tag) noexcept;

/// Exactly 16 lowercase hex digits.
std::string seed_to_hex(std::uint64_t seed);

/// Accepts exactly 16 lowercase hex digits; anything else is absent.
std::optional<std::uint64_t> parse_seed_hex(std::string_view text) noexcept;

}  // namespace pubgames
