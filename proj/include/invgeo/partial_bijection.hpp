#ifndef INVGEO_PARTIAL_BIJECTION_HPP
#define INVGEO_PARTIAL_BIJECTION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace invgeo {

// An injective partial map {0..n-1} -> {0..n-1}, stored as its image array.
// Undefined points hold kUndefined, which is the largest value, so the
// defaulted ordering is lexicographic with undefined entries ordered last.
class PartialBijection {
 public:
  static constexpr std::uint32_t kUndefined =
      std::numeric_limits<std::uint32_t>::max();

  PartialBijection() = default;
  // Throws ValidationError if an entry is out of range or repeated.
  explicit PartialBijection(std::vector<std::uint32_t> image);

  static PartialBijection identity(std::size_t n);
  static PartialBijection empty(std::size_t n);
  static PartialBijection partial_identity(std::size_t n,
                                           std::span<const std::uint32_t> points);
  static PartialBijection transposition(std::size_t n, std::uint32_t a,
                                        std::uint32_t b);

  std::size_t ground_size() const { return image_.size(); }
  std::uint32_t operator[](std::size_t x) const { return image_[x]; }
  bool defined(std::size_t x) const { return image_[x] != kUndefined; }
  std::span<const std::uint32_t> image() const { return image_; }
  std::size_t rank() const;
  bool is_idempotent() const;

  // e.g. "[1,-,0]"
  std::string to_string() const;

  friend auto operator<=>(const PartialBijection&,
                          const PartialBijection&) = default;
  friend bool operator==(const PartialBijection&,
                         const PartialBijection&) = default;

 private:
  struct Unchecked {};
  PartialBijection(Unchecked, std::vector<std::uint32_t> image)
      : image_(std::move(image)) {}
  friend PartialBijection compose(const PartialBijection&,
                                  const PartialBijection&);
  friend PartialBijection invert(const PartialBijection&);

  std::vector<std::uint32_t> image_;
};

// (g f)(x) = g(f(x)): apply f first. Throws SizeMismatchError when the
// ground sets differ.
PartialBijection compose(const PartialBijection& g, const PartialBijection& f);
PartialBijection invert(const PartialBijection& f);

std::ostream& operator<<(std::ostream& os, const PartialBijection& f);

struct PartialBijectionHash {
  std::size_t operator()(const PartialBijection& f) const noexcept;
};

}  // namespace invgeo

#endif  // INVGEO_PARTIAL_BIJECTION_HPP
