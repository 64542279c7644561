#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hyperspec {

inline constexpr std::uint64_t kDefaultSeed = 0xE11975;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the named stream `name`/`index` under a master seed. Every
/// randomized operation draws from its own stream so that adding or
/// reordering calls elsewhere does not shift its draws.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name, std::uint64_t index = 0);

/// mt19937_64 with platform-independent bounded draws (the standard
/// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// `count` distinct values from [0, n), ascending.
    std::vector<std::uint32_t> sample_subset(std::uint32_t n, std::uint32_t count);

private:
    std::mt19937_64 engine_;
};

}  // namespace hyperspec
