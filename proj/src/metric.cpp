#include "invgeo/metric.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace invgeo {

Partition::Partition(const std::vector<std::uint32_t>& block_of) {
  block_of_.resize(block_of.size());
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = relabel.try_emplace(
        block_of[i], static_cast<std::uint32_t>(blocks_.size()));
    if (fresh) blocks_.emplace_back();
    block_of_[i] = it->second;
    blocks_[it->second].push_back(static_cast<std::uint32_t>(i));
  }
}

ExtendedMetric::ExtendedMetric(std::size_t n)
    : n_(n), table_(n * n, Distance::infinite()) {
  for (std::size_t i = 0; i < n; ++i) table_[i * n + i] = Distance(0);
}

void ExtendedMetric::set(std::size_t i, std::size_t j, Distance d) {
  table_[i * n_ + j] = d;
  table_[j * n_ + i] = d;
}

Partition ExtendedMetric::components() const {
  std::vector<std::uint32_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j).is_finite()) {
        auto a = find(static_cast<std::uint32_t>(i));
        auto b = find(static_cast<std::uint32_t>(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::uint32_t> root(n_);
  for (std::size_t i = 0; i < n_; ++i)
    root[i] = find(static_cast<std::uint32_t>(i));
  return Partition(root);
}

Distance ExtendedMetric::max_finite() const {
  Distance best(0);
  for (auto d : table_)
    if (d.is_finite() && d > best) best = d;
  return best;
}

ValidationReport ExtendedMetric::check_axioms() const {
  ValidationReport report;
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != Distance(0)) report.add("zero-diagonal", {i});
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) report.add("symmetry", {i, j});
      if (i != j && (*this)(i, j) == Distance(0))
        report.add("positivity", {i, j});
    }
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      auto dij = (*this)(i, j);
      if (dij.is_infinite()) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        auto via = dij + (*this)(j, k);
        if (via.is_finite() && (*this)(i, k) > via)
          report.add("triangle", {i, j, k});
      }
    }
  return report;
}

}  // namespace invgeo
