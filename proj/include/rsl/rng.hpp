#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rsl {

// Default seed for every randomized suite and for CLI sampling.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Thin deterministic wrapper around mt19937_64. We avoid the standard
// distributions because their output is not pinned across library
// implementations; raw modulo keeps generated corpora stable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish pick in [0, n). n must be > 0.
    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den = 100) { return next() % den < num; }

    template <typename T>
    const T& choose(const std::vector<T>& xs) {
        return xs[pick(xs.size())];
    }

    // Derive an independent stream, e.g. one per generated model.
    Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace rsl
