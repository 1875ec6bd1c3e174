#ifndef INVGEO_GEOMETRY_HPP
#define INVGEO_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invgeo/action.hpp"
#include "invgeo/cayley.hpp"
#include "invgeo/metric.hpp"
#include "invgeo/rational.hpp"
#include "invgeo/report.hpp"

namespace invgeo {

// One step of the chain that writes s as u_k ... u_1.
struct ChainLink {
  PointRef point;        // p_i on a fiber geodesic from x1.dom(s) to x1.s
  ElementRef orbit_rep;  // s_i with d(p_i, x1.s_i) <= T; s_k = s
  ElementRef step;       // u_1 = s_1, u_i = s_i s_{i-1}^-1
  ElementRef partial;    // v_i = u_i ... u_1 dom(s)
};

struct GenerationCertificate {
  ElementRef element;
  Distance orbit_distance;  // d(x1.dom(s), x1.s)
  std::vector<ChainLink> chain;
};

struct GeneratorExtraction {
  std::uint32_t cobounded_radius;  // T
  std::uint32_t radius;            // 2T + 1
  std::vector<ElementRef> generators;
  std::vector<GenerationCertificate> certificates;  // indexed by element
};

// G = {s : d(x1.s, x1.dom s) <= 2T+1} with a factorisation certificate for
// every element. Throws PreconditionError if x1 is not in X_1 or the action
// is not T-cobounded at x1, TheoremViolation if a certificate or the
// closure check fails.
GeneratorExtraction extract_generators(const EtaleAction& action, PointRef x1,
                                       std::uint32_t cobounded_radius);

struct QiReport {
  Rational multiplicative{1};
  Rational additive{0};
  Distance coarse_radius;
  bool components_correspond = true;
  std::optional<bool> order_preserving;
};

// Ladder L = 1, 5/4, ..., 16: report the L minimising the exact residual
// C(L) = max(d_B(fa,fb) - L d_A(a,b), d_A(a,b)/L - d_B(fa,fb), 0).
// Throws PreconditionError if f sends a finite pair to an infinite one.
QiReport qi_constants(std::span<const std::uint32_t> map,
                      const ExtendedMetric& source, const ExtendedMetric& target);

// s -> x1.s from (S, d_M) to (X, d). Throws TheoremViolation if finite
// distances do not correspond exactly.
QiReport orbit_map_qi(const EtaleAction& action, PointRef x1,
                      std::span<const ElementRef> quasi_generators);

struct OrbitBound {
  ElementRef element;
  Distance word;                // d_M(dom s, s)
  Distance orbit;               // d(x1.dom s, x1.s)
  std::size_t chain_length;     // k of the extraction certificate
  std::uint32_t step_max;       // max_i d(x1.t_i, x1.dom t_i)
  bool chain_ok;                // d_M <= k <= d + 2
  bool reverse_ok;              // d <= d_M * step_max
  bool vchain_ok;               // per-step domination, sampled factorisations
};

std::vector<OrbitBound> milnor_schwarz_bounds(
    const EtaleAction& action, PointRef x1,
    std::span<const ElementRef> quasi_generators,
    const GeneratorExtraction& extraction, std::uint64_t seed = kDefaultSeed,
    std::size_t samples_per_element = 4);

struct MilnorSchwarzResult {
  GeneratorExtraction extraction;
  ProperWitness cover;            // C(x1, 2T+1), the finite generating set
  bool generators_covered = false;  // G inside C E(S)
  bool cover_quasi_generates = false;
  QiReport qi;
  std::vector<OrbitBound> bounds;
};

MilnorSchwarzResult milnor_schwarz(const EtaleAction& action, PointRef x1,
                                   std::uint32_t cobounded_radius,
                                   std::uint64_t seed = kDefaultSeed);

struct RipsGraph {
  std::uint32_t radius;
  LabeledDigraph graph;  // edges s < t, labelled by orbit distance
  ExtendedMetric metric;
};

RipsGraph rips_graph(const EtaleAction& action, PointRef x1,
                     std::uint32_t radius);

struct RipsBounds {
  std::size_t pairs = 0;
  std::size_t lower_violations = 0;       // R d^R > d + R
  std::size_t upper_violations = 0;       // d > R d^R
  std::size_t finiteness_violations = 0;
  bool ok() const {
    return lower_violations == 0 && upper_violations == 0 &&
           finiteness_violations == 0;
  }
};

// Exact integer check of d^R <= d/R + 1 and d <= R d^R on orbit pairs.
// Requires radius >= 1.
RipsBounds check_rips_bounds(const EtaleAction& action, PointRef x1,
                             const RipsGraph& rips);

struct CmsReport {
  PredicateResult metric_axioms;
  PredicateResult components;
  PredicateResult discreteness;
  PredicateResult subinvariance;
  PredicateResult properness;
  PredicateResult uniform_properness;
  std::vector<ElementRef> uniform_generators;  // F_1

  bool pass() const;
  std::vector<PredicateResult> predicates() const;
};

// When `f1` is empty, F_1 is derived from the metric: the least f with
// y = f x for every pair at distance <= 1.
CmsReport validate_cms_metric(const InverseMonoid& monoid,
                              const ExtendedMetric& metric,
                              std::optional<std::vector<ElementRef>> f1 = {},
                              const SweepPolicy& policy = kSubinvarianceSweep);

struct Factorization {
  ElementRef element;
  Distance distance;                // D = d(s, dom s)
  std::vector<ElementRef> factors;  // s = f_k ... f_1 dom(s), f_1 first
};

struct QuasiGeneration {
  std::vector<ElementRef> generators;  // F_1
  std::vector<Factorization> factorizations;
};

// Throws PreconditionError unless the metric is uniformly proper with the
// chosen F_1, TheoremViolation if a factorisation or the closure fails.
QuasiGeneration quasi_generators_from_metric(
    const InverseMonoid& monoid, const ExtendedMetric& metric,
    std::optional<std::vector<ElementRef>> f1 = {});

}  // namespace invgeo

#endif  // INVGEO_GEOMETRY_HPP
