#ifndef INVGEO_METRIC_HPP
#define INVGEO_METRIC_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "invgeo/report.hpp"

namespace invgeo {

// Non-negative integer distance or INFINITE. INFINITE compares greater than
// every finite value and absorbs addition.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t v) : v_(v) {
    if (v == kInf) throw std::overflow_error("Distance: value out of range");
  }
  static constexpr Distance infinite() {
    Distance d;
    d.v_ = kInf;
    return d;
  }

  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr bool is_infinite() const { return v_ == kInf; }
  std::uint32_t value() const {
    if (v_ == kInf) throw std::logic_error("Distance: value() of INFINITE");
    return v_;
  }
  std::string to_string() const {
    return is_finite() ? std::to_string(v_) : std::string("inf");
  }

  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr auto operator<=>(Distance a, Distance b) {
    return a.v_ <=> b.v_;
  }
  friend Distance operator+(Distance a, Distance b) {
    if (!a.is_finite() || !b.is_finite()) return infinite();
    return Distance(a.v_ + b.v_);
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = 0;
};

// A set partition with a canonical layout: each block sorted, blocks ordered
// by their least member.
class Partition {
 public:
  Partition() = default;
  // block_of[i] is an arbitrary label of i's block.
  explicit Partition(const std::vector<std::uint32_t>& block_of);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::uint32_t block_of(std::size_t i) const { return block_of_[i]; }
  const std::vector<std::vector<std::uint32_t>>& blocks() const {
    return blocks_;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<std::uint32_t>> blocks_;
};

// Dense symmetric distance table with a zero diagonal. Entries default to
// INFINITE off the diagonal.
class ExtendedMetric {
 public:
  ExtendedMetric() = default;
  explicit ExtendedMetric(std::size_t n);

  std::size_t size() const { return n_; }
  Distance operator()(std::size_t i, std::size_t j) const {
    return table_[i * n_ + j];
  }
  // Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, Distance d);

  // Finite-distance classes.
  Partition components() const;
  // Largest finite entry (0 for an empty or totally disconnected carrier).
  Distance max_finite() const;
  // Symmetry, zero diagonal, positivity, triangle inequality.
  ValidationReport check_axioms() const;

  friend bool operator==(const ExtendedMetric&, const ExtendedMetric&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> table_;
};

}  // namespace invgeo

#endif  // INVGEO_METRIC_HPP
