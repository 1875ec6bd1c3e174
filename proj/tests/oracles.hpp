#ifndef INVGEO_TESTS_ORACLES_HPP
#define INVGEO_TESTS_ORACLES_HPP

// Independent reference computations. Nothing here calls into the library
// except to read raw image arrays, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Image = std::vector<std::uint32_t>;
inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Every injective partial map on {0..n-1}, by odometer over n+1 choices.
inline std::vector<Image> all_partial_bijections(std::size_t n) {
  std::vector<Image> out;
  std::vector<std::uint32_t> digit(n, 0);  // value n means undefined
  while (true) {
    Image img(n);
    std::set<std::uint32_t> used;
    bool injective = true;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = digit[i] == n ? kNone : digit[i];
      if (img[i] != kNone && !used.insert(img[i]).second) injective = false;
    }
    if (injective) out.push_back(img);
    std::size_t i = 0;
    while (i < n && digit[i] == n) digit[i++] = 0;
    if (i == n) break;
    ++digit[i];
  }
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sum_k C(n,k)^2 k!
inline std::uint64_t symmetric_inverse_order(std::uint64_t n) {
  std::uint64_t total = 0, fact = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k) fact *= k;
    total += binomial(n, k) * binomial(n, k) * fact;
  }
  return total;
}

// g after f.
inline Image compose(const Image& g, const Image& f) {
  Image out(f.size(), kNone);
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != kNone) out[x] = g[f[x]];
  return out;
}

inline Image invert(const Image& f) {
  Image out(f.size(), kNone);
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != kNone) out[f[x]] = static_cast<std::uint32_t>(x);
  return out;
}

inline Image random_partial_bijection(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution keep(0.7);
  Image out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = keep(rng) ? perm[i] : kNone;
  return out;
}

// All-pairs shortest paths on an undirected unit-weight graph.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(
    std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges)
    if (a != b) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = d[i][j] >= kInf ? kInf : static_cast<std::uint32_t>(d[i][j]);
  return out;
}

// Word metric of M on a list of partial bijections, from raw composition:
// edges s -- g s for g in M u M^-1 whenever g s has the domain of s.
inline std::vector<std::vector<std::uint32_t>> word_metric(
    const std::vector<Image>& elems, const std::vector<Image>& gens) {
  std::map<Image, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  auto dom = [](const Image& f) { return compose(invert(f), f); };
  std::vector<Image> sym = gens;
  for (const auto& g : gens) sym.push_back(invert(g));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s = 0; s < elems.size(); ++s)
    for (const auto& g : sym) {
      auto t = compose(g, elems[s]);
      if (dom(t) == dom(elems[s])) edges.emplace(s, index.at(t));
    }
  return floyd_warshall(elems.size(), edges);
}

}  // namespace oracle

#endif  // INVGEO_TESTS_ORACLES_HPP
