#include "invgeo/partial_bijection.hpp"

#include <algorithm>

#include "invgeo/errors.hpp"

namespace invgeo {

PartialBijection::PartialBijection(std::vector<std::uint32_t> image)
    : image_(std::move(image)) {
  const auto n = image_.size();
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    auto y = image_[x];
    if (y == kUndefined) continue;
    if (y >= n)
      throw ValidationError("image entry out of range", {x, y});
    if (hit[y]) throw ValidationError("image is not injective", {x, y});
    hit[y] = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t n) {
  std::vector<std::uint32_t> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = static_cast<std::uint32_t>(x);
  return PartialBijection(std::move(image));
}

PartialBijection PartialBijection::empty(std::size_t n) {
  return PartialBijection(std::vector<std::uint32_t>(n, kUndefined));
}

PartialBijection PartialBijection::partial_identity(
    std::size_t n, std::span<const std::uint32_t> points) {
  std::vector<std::uint32_t> image(n, kUndefined);
  for (auto p : points) {
    if (p >= n) throw ValidationError("point out of range", {p, n});
    image[p] = p;
  }
  return PartialBijection(std::move(image));
}

PartialBijection PartialBijection::transposition(std::size_t n, std::uint32_t a,
                                                 std::uint32_t b) {
  auto f = identity(n);
  if (a >= n || b >= n) throw ValidationError("point out of range", {a, b});
  std::swap(f.image_[a], f.image_[b]);
  return f;
}

std::size_t PartialBijection::rank() const {
  return static_cast<std::size_t>(
      std::count_if(image_.begin(), image_.end(),
                    [](auto y) { return y != kUndefined; }));
}

bool PartialBijection::is_idempotent() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != kUndefined && image_[x] != x) return false;
  return true;
}

std::string PartialBijection::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (x) out += ',';
    out += defined(x) ? std::to_string(image_[x]) : std::string("-");
  }
  return out + "]";
}

PartialBijection compose(const PartialBijection& g, const PartialBijection& f) {
  if (g.ground_size() != f.ground_size())
    throw SizeMismatchError("compose: ground sizes " +
                            std::to_string(g.ground_size()) + " and " +
                            std::to_string(f.ground_size()) + " differ");
  const auto n = f.ground_size();
  std::vector<std::uint32_t> image(n, PartialBijection::kUndefined);
  for (std::size_t x = 0; x < n; ++x)
    if (f.defined(x)) image[x] = g[f[x]];
  return PartialBijection(PartialBijection::Unchecked{}, std::move(image));
}

PartialBijection invert(const PartialBijection& f) {
  const auto n = f.ground_size();
  std::vector<std::uint32_t> image(n, PartialBijection::kUndefined);
  for (std::size_t x = 0; x < n; ++x)
    if (f.defined(x)) image[f[x]] = static_cast<std::uint32_t>(x);
  return PartialBijection(PartialBijection::Unchecked{}, std::move(image));
}

std::ostream& operator<<(std::ostream& os, const PartialBijection& f) {
  return os << f.to_string();
}

std::size_t PartialBijectionHash::operator()(
    const PartialBijection& f) const noexcept {
  std::size_t h = f.ground_size();
  for (auto y : f.image())
    h ^= std::hash<std::uint32_t>{}(y) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  return h;
}

}  // namespace invgeo
