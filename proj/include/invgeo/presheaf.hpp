#ifndef INVGEO_PRESHEAF_HPP
#define INVGEO_PRESHEAF_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invgeo/metric.hpp"
#include "invgeo/monoid.hpp"
#include "invgeo/report.hpp"

namespace invgeo {

using PointRef = std::uint32_t;
using BaseRef = std::uint32_t;

// A finite meet-semilattice. `elements[i]` names base element i inside a
// monoid (the idempotent it stands for); `meet` is a k*k table.
struct Semilattice {
  std::vector<ElementRef> elements;
  std::vector<BaseRef> meet;

  std::size_t size() const { return elements.size(); }
  BaseRef operator()(BaseRef a, BaseRef b) const {
    return meet[std::size_t(a) * elements.size() + b];
  }
  std::optional<BaseRef> index_of(ElementRef e) const;

  // E(S) with the restricted product, in increasing index order.
  static Semilattice of_idempotents(const InverseMonoid& monoid);
  // Commutative, associative, idempotent and closed.
  ValidationReport validate() const;
};

// Raw tables of a presheaf; what the file format stores.
struct PresheafData {
  std::vector<std::string> labels;  // one per point
  Semilattice base;
  std::vector<BaseRef> proj;        // |X|
  std::vector<PointRef> restrict;   // |X| * k, row-major by point
  // Unit-length undirected edges of each fiber graph, indexed by base
  // element, given as pairs of global point indices.
  std::vector<std::vector<std::pair<PointRef, PointRef>>> fiber_edges;
};

// Presheaf of graph-metric spaces over a semilattice. The constructor
// checks table shapes, edge endpoints and fiber connectivity (throwing
// PreconditionError); the presheaf axioms themselves are checked by
// validate_presheaf so that broken inputs can be reported on.
class MetricPresheaf {
 public:
  explicit MetricPresheaf(PresheafData data);

  std::size_t size() const { return data_.proj.size(); }
  std::size_t base_size() const { return data_.base.size(); }
  const Semilattice& base() const { return data_.base; }
  const PresheafData& data() const { return data_; }

  BaseRef proj(PointRef x) const { return data_.proj[x]; }
  PointRef restrict(PointRef x, BaseRef e) const {
    return data_.restrict[std::size_t(x) * base_size() + e];
  }
  std::span<const PointRef> fiber(BaseRef e) const { return fibers_[e]; }
  const std::string& label(PointRef x) const { return data_.labels[x]; }

  // Shortest-path length in the common fiber; INFINITE across fibers.
  Distance distance(PointRef x, PointRef y) const;
  // Largest finite distance within fiber e.
  Distance fiber_diameter(BaseRef e) const;
  // Some shortest edge path from x to y (inclusive); empty across fibers.
  std::vector<PointRef> geodesic(PointRef x, PointRef y) const;
  // x <= y iff x = y . p(x).
  bool leq(PointRef x, PointRef y) const {
    return x == restrict(y, proj(x));
  }
  ExtendedMetric metric() const;

 private:
  PresheafData data_;
  std::vector<std::vector<PointRef>> fibers_;
  std::vector<std::uint32_t> local_;  // index of each point inside its fiber
  std::vector<std::vector<std::uint32_t>> dist_;       // per fiber, dense
  std::vector<std::vector<std::vector<std::uint32_t>>> adjacency_;  // local
};

ValidationReport validate_presheaf(const MetricPresheaf& presheaf);

// For every pair f <= e of base elements, whether restriction X_e -> X_f
// preserves distances exactly.
ValidationReport check_restriction_isometries(const MetricPresheaf& presheaf);

inline Distance ext_distance(const MetricPresheaf& p, PointRef x, PointRef y) {
  return p.distance(x, y);
}
inline bool presheaf_leq(const MetricPresheaf& p, PointRef x, PointRef y) {
  return p.leq(x, y);
}

// Presheaf on the monoid itself: p = dom, x . e = xe, fibers are the
// Schutzenberger graphs of M u E(S) on the L-classes. Throws
// PreconditionError naming an unreachable element unless M
// quasi-generates.
MetricPresheaf cayley_presheaf(const InverseMonoid& monoid,
                               std::span<const ElementRef> quasi_generators);

}  // namespace invgeo

#endif  // INVGEO_PRESHEAF_HPP
