#ifndef INVGEO_SWEEP_HPP
#define INVGEO_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace invgeo {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1b0a'7c3dULL;

// Controls whether an N^3 sweep runs exhaustively or by seeded sampling.
// A sweep is exhaustive when the carrier size is at most `exhaustive_limit`.
struct SweepPolicy {
  std::size_t exhaustive_limit;
  std::size_t samples;
  std::uint64_t seed = kDefaultSeed;

  bool exhaustive(std::size_t n) const { return n <= exhaustive_limit; }
};

// Defaults for the individual sweeps.
inline constexpr SweepPolicy kAssociativitySweep{512, 100'000, kDefaultSeed};
inline constexpr SweepPolicy kSubinvarianceSweep{250, 1'000'000, kDefaultSeed};
// Action-law sweep runs over |X| * N * N triples; the limit is on that count.
inline constexpr SweepPolicy kActionLawSweep{50'000'000, 2'000'000,
                                             kDefaultSeed};

// Calls fn(a, b, c) for every triple in [0,n)^3 or for policy.samples random
// triples. fn returns false to stop early. Returns true iff exhaustive.
template <typename Fn>
bool for_each_triple(std::size_t n, const SweepPolicy& policy, Fn&& fn) {
  if (n == 0) return true;
  if (policy.exhaustive(n)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!fn(a, b, c)) return true;
    return true;
  }
  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < policy.samples; ++i) {
    auto a = pick(rng);
    auto b = pick(rng);
    auto c = pick(rng);
    if (!fn(a, b, c)) break;
  }
  return false;
}

}  // namespace invgeo

#endif  // INVGEO_SWEEP_HPP
