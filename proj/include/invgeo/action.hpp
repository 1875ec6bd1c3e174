#ifndef INVGEO_ACTION_HPP
#define INVGEO_ACTION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "invgeo/monoid.hpp"
#include "invgeo/presheaf.hpp"
#include "invgeo/report.hpp"
#include "invgeo/sweep.hpp"

namespace invgeo {

// Right action X x S -> X of an inverse monoid on a metric presheaf over
// E(S). The presheaf's base elements must be exactly the idempotents of
// the monoid. Axioms are checked by validate_action.
class EtaleAction {
 public:
  EtaleAction(std::shared_ptr<const InverseMonoid> monoid,
              std::shared_ptr<const MetricPresheaf> presheaf,
              std::vector<PointRef> act);

  const InverseMonoid& monoid() const { return *monoid_; }
  const MetricPresheaf& presheaf() const { return *presheaf_; }
  std::shared_ptr<const InverseMonoid> monoid_ptr() const { return monoid_; }
  std::shared_ptr<const MetricPresheaf> presheaf_ptr() const { return presheaf_; }
  const std::vector<PointRef>& table() const { return act_; }

  PointRef act(PointRef x, ElementRef s) const {
    return act_[std::size_t(x) * monoid_->order() + s];
  }
  // Base index of an idempotent of the monoid.
  BaseRef base_of(ElementRef idempotent) const { return base_of_[idempotent]; }
  // Fiber over the identity idempotent.
  std::span<const PointRef> identity_fiber() const {
    return presheaf_->fiber(base_of(monoid_->identity()));
  }
  bool in_identity_fiber(PointRef x) const {
    return presheaf_->proj(x) == base_of(monoid_->identity());
  }
  Distance distance(PointRef x, PointRef y) const {
    return presheaf_->distance(x, y);
  }

 private:
  std::shared_ptr<const InverseMonoid> monoid_;
  std::shared_ptr<const MetricPresheaf> presheaf_;
  std::vector<PointRef> act_;
  std::vector<BaseRef> base_of_;
};

// S acting on cayley_presheaf(S, M) by right multiplication.
EtaleAction cayley_action(std::shared_ptr<const InverseMonoid> monoid,
                          std::span<const ElementRef> quasi_generators);

// Rules: extends-restriction, action-law, fiber-preservation, lipschitz,
// plus the presheaf axioms (prefixed "presheaf/").
ValidationReport validate_action(const EtaleAction& action,
                                 const SweepPolicy& law = kActionLawSweep);

struct IsometryCheck {
  bool isometric = true;
  std::optional<std::pair<PointRef, PointRef>> witness;
};

// Whether acting by s is an isometry of X . ss^-1 onto its image,
// INFINITE distances included.
IsometryCheck check_theta_isometry(const EtaleAction& action, ElementRef s);

// Least T with B(x1, T) . S = X, or nullopt if some point lies outside
// X_1 . S. Throws PreconditionError unless x1 is in the identity fiber.
std::optional<std::uint32_t> coboundedness_constant(const EtaleAction& action,
                                                     PointRef x1);

// {s : d(y1 . s, y1 . dom s) <= radius}, sorted.
std::vector<ElementRef> qualifying_elements(const EtaleAction& action,
                                            PointRef y1, std::uint32_t radius);

// s in f E(S), decided by scanning idempotents.
bool in_coset(const InverseMonoid& monoid, ElementRef s, ElementRef f);

struct ProperWitness {
  std::vector<ElementRef> cover;       // C, sorted
  std::vector<ElementRef> qualifying;  // the set C E(S) must contain
  bool exact = false;                  // true when |C| is provably minimal
};

// A finite C with qualifying(y1, radius) inside C E(S). Greedy set cover;
// exact minimum when at most 20 candidate cosets remain after pruning.
ProperWitness properness_witness(const EtaleAction& action, PointRef y1,
                                 std::uint32_t radius);

// Whether every element of `set` lies in cover . E(S).
bool covers(const InverseMonoid& monoid, std::span<const ElementRef> cover,
            std::span<const ElementRef> set);

struct BasepointShift {
  Distance shift;        // D = d(y1, z1)
  bool inequality = true;  // d(y1 s, y1 dom s) <= d(z1 s, z1 dom s) + 2D for all s
  bool cover = true;       // C(y1, R + 2D) covers qualifying(z1, R)
};

BasepointShift check_basepoint_shift(const EtaleAction& action, PointRef y1,
                                     PointRef z1, std::uint32_t radius);

}  // namespace invgeo

#endif  // INVGEO_ACTION_HPP
