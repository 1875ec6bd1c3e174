#ifndef INVGEO_MONOID_HPP
#define INVGEO_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "invgeo/metric.hpp"
#include "invgeo/partial_bijection.hpp"
#include "invgeo/report.hpp"
#include "invgeo/sweep.hpp"

namespace invgeo {

// Index of an element in an InverseMonoid.
using ElementRef = std::uint32_t;

struct GenerateOptions {
  std::size_t element_cap = 100'000;
  // Product tables are stored densely up to this order; above it products
  // are composed on demand and looked up by canonical image array.
  std::size_t dense_limit = 4096;
};

struct TableOptions {
  SweepPolicy associativity = kAssociativitySweep;
};

// A fully enumerated finite inverse monoid. Element indices are stable:
// generated monoids are sorted by the canonical image-array order, table
// monoids keep the indices of their table. Immutable after construction.
class InverseMonoid {
 public:
  // Submonoid of I_n generated by `gens` and their inverses.
  // Throws CapacityError when the closure exceeds options.element_cap and
  // SizeMismatchError when a generator has the wrong ground size.
  static InverseMonoid generate(std::size_t ground_size,
                                std::span<const PartialBijection> gens,
                                const GenerateOptions& options = {});

  // Validates associativity, the identity and unique inverses, throwing
  // ValidationError with a witness on failure. `elements` (image arrays)
  // and `labels` are optional descriptions indexed like the table.
  static InverseMonoid from_table(
      const std::vector<std::vector<ElementRef>>& product, ElementRef identity,
      const TableOptions& options = {},
      std::vector<PartialBijection> elements = {},
      std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  ElementRef identity() const { return identity_; }

  ElementRef product(ElementRef a, ElementRef b) const {
    if (!table_.empty()) return table_[std::size_t(a) * order_ + b];
    return lazy_product(a, b);
  }
  ElementRef inverse(ElementRef s) const { return inverse_[s]; }
  bool is_idempotent(ElementRef e) const { return idempotent_[e]; }
  // Idempotents in increasing index order.
  const std::vector<ElementRef>& idempotents() const { return idempotents_; }

  // s^-1 s and s s^-1.
  ElementRef dom(ElementRef s) const { return dom_[s]; }
  ElementRef ran(ElementRef s) const { return ran_[s]; }

  // s <= t iff s = e t for some idempotent e (checked by scanning E(S)).
  bool natural_leq(ElementRef s, ElementRef t) const;
  bool green_L(ElementRef s, ElementRef t) const { return dom_[s] == dom_[t]; }
  bool green_R(ElementRef s, ElementRef t) const { return ran_[s] == ran_[t]; }
  Partition l_classes() const;
  Partition r_classes() const;

  // Subsemigroup generated by `gens`, as a sorted index list.
  std::vector<ElementRef> closure(std::span<const ElementRef> gens) const;

  bool has_elements() const { return !elements_.empty(); }
  std::size_t ground_size() const { return ground_size_; }
  const PartialBijection& element(ElementRef s) const { return elements_[s]; }
  std::optional<ElementRef> find(const PartialBijection& f) const;
  bool has_labels() const { return !labels_.empty(); }
  // Image array, label, or "#i".
  std::string describe(ElementRef s) const;

  // Throws PreconditionError unless s < order().
  void check(ElementRef s) const;

  bool dense() const { return !table_.empty(); }

  // Re-checks every structural invariant; empty iff all hold.
  ValidationReport validate(const SweepPolicy& associativity =
                                kAssociativitySweep) const;

 private:
  InverseMonoid() = default;
  ElementRef lazy_product(ElementRef a, ElementRef b) const;
  void derive_tables();

  std::size_t order_ = 0;
  ElementRef identity_ = 0;
  std::vector<ElementRef> table_;
  std::vector<ElementRef> inverse_;
  std::vector<bool> idempotent_;
  std::vector<ElementRef> idempotents_;
  std::vector<ElementRef> dom_;
  std::vector<ElementRef> ran_;

  std::size_t ground_size_ = 0;
  std::vector<PartialBijection> elements_;
  std::unordered_map<PartialBijection, ElementRef, PartialBijectionHash> index_;
  std::vector<std::string> labels_;
};

}  // namespace invgeo

#endif  // INVGEO_MONOID_HPP
