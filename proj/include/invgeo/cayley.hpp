#ifndef INVGEO_CAYLEY_HPP
#define INVGEO_CAYLEY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "invgeo/metric.hpp"
#include "invgeo/monoid.hpp"
#include "invgeo/rational.hpp"

namespace invgeo {

struct LabeledEdge {
  std::uint32_t source;
  std::uint32_t target;
  std::uint32_t label;
  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  // Sorts the edges; throws PreconditionError on out-of-range endpoints or
  // duplicate triples.
  LabeledDigraph(std::size_t vertex_count, std::vector<LabeledEdge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  // Strongly connected components.
  Partition strong_components() const;

 private:
  std::size_t n_ = 0;
  std::vector<LabeledEdge> edges_;
};

struct DotOptions {
  std::string name = "G";
  bool directed = true;
  // Restrict output to these vertices (all when empty).
  std::vector<std::uint32_t> vertices;
  std::function<std::string(std::uint32_t)> vertex_name;
  std::function<std::string(std::uint32_t)> edge_label;
};

void write_dot(std::ostream& os, const LabeledDigraph& graph,
               const DotOptions& options = {});

// Edge (s, gs, g) for every s in S and g in `gens`.
LabeledDigraph cayley_graph(const InverseMonoid& monoid,
                            std::span<const ElementRef> gens);

// gens u gens^-1, sorted and deduplicated.
std::vector<ElementRef> symmetrize(const InverseMonoid& monoid,
                                   std::span<const ElementRef> gens);

// Least element outside <M u E(S)>, if any.
std::optional<ElementRef> quasi_generation_witness(
    const InverseMonoid& monoid, std::span<const ElementRef> gens);
bool is_quasi_generating(const InverseMonoid& monoid,
                         std::span<const ElementRef> gens);

// Drops generators (with their inverses) one at a time, keeping the set
// quasi-generating. No minimality claim.
std::vector<ElementRef> reduce_quasi_generating(
    const InverseMonoid& monoid, std::span<const ElementRef> gens);

// Strong components of Cay(S, G u E(S)). Throws TheoremViolation if they
// differ from the L-classes.
Partition schutzenberger_components(const InverseMonoid& monoid,
                                    std::span<const ElementRef> gens);

struct CayleyMetricTable {
  ExtendedMetric metric;
  std::vector<ElementRef> generators;  // symmetrized
  Partition components;
};

// Word metric of a quasi-generating set by BFS over M-edges inside each
// L-class. Throws PreconditionError unless M quasi-generates.
CayleyMetricTable cayley_metric(const InverseMonoid& monoid,
                                std::span<const ElementRef> gens);

// The same distances computed by BFS over M u E(S) edges; used as an
// independent route to check that idempotent edges never shorten paths.
ExtendedMetric cayley_metric_with_idempotents(const InverseMonoid& monoid,
                                              std::span<const ElementRef> gens);

struct BiLipschitzConstants {
  Rational forward;   // max d_N / d_M
  Rational backward;  // max d_M / d_N
};

// Throws TheoremViolation if the two metrics have different components.
BiLipschitzConstants bilipschitz_constants(const InverseMonoid& monoid,
                                           std::span<const ElementRef> m,
                                           std::span<const ElementRef> n);

// Counts violations of d(sx, tx) <= d(s, t).
ValidationReport check_right_subinvariance(const ExtendedMetric& metric,
                                           const InverseMonoid& monoid,
                                           const SweepPolicy& policy =
                                               kSubinvarianceSweep);

// Within an L-class every edge (s, t, x) has the reverse edge labelled x^-1
// and idempotent labels give loops. Sweeps all labels x in S.
ValidationReport check_edge_pairing(const InverseMonoid& monoid);

}  // namespace invgeo

#endif  // INVGEO_CAYLEY_HPP
