#include "invgeo/cayley.hpp"

#include <algorithm>
#include <limits>

#include "invgeo/errors.hpp"

namespace invgeo {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<ElementRef> sorted_unique(std::vector<ElementRef> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Some pair lying in one block of `a` but different blocks of `b`, or the
// reverse.
std::vector<std::uint64_t> partition_witness(const Partition& a,
                                             const Partition& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a.block_of(i) == a.block_of(j)) != (b.block_of(i) == b.block_of(j)))
        return {i, j};
  return {};
}

}  // namespace

LabeledDigraph::LabeledDigraph(std::size_t vertex_count,
                               std::vector<LabeledEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.source >= n_ || e.target >= n_)
      throw PreconditionError("edge endpoint out of range", {e.source, e.target});
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw PreconditionError("duplicate edge", {dup->source, dup->target, dup->label});
}

Partition LabeledDigraph::strong_components() const {
  // CSR adjacency (edges are sorted by source).
  std::vector<std::uint32_t> start(n_ + 1, 0);
  for (const auto& e : edges_) ++start[e.source + 1];
  for (std::size_t i = 0; i < n_; ++i) start[i + 1] += start[i];

  // Iterative Tarjan.
  std::vector<std::uint32_t> index(n_, kUnreached), low(n_, 0), comp(n_, kUnreached);
  std::vector<std::uint32_t> stack, call, cursor(n_, 0);
  std::vector<bool> on_stack(n_, false);
  std::uint32_t counter = 0, components = 0;
  for (std::uint32_t root = 0; root < n_; ++root) {
    if (index[root] != kUnreached) continue;
    call.push_back(root);
    while (!call.empty()) {
      auto v = call.back();
      if (index[v] == kUnreached) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        cursor[v] = start[v];
      }
      bool descended = false;
      while (cursor[v] < start[v + 1]) {
        auto w = edges_[cursor[v]++].target;
        if (index[w] == kUnreached) {
          call.push_back(w);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
    }
  }
  return Partition(comp);
}

void write_dot(std::ostream& os, const LabeledDigraph& graph,
               const DotOptions& options) {
  std::vector<bool> keep(graph.vertex_count(), options.vertices.empty());
  for (auto v : options.vertices) keep.at(v) = true;
  const char* arrow = options.directed ? " -> " : " -- ";
  os << (options.directed ? "digraph " : "graph ") << quote(options.name)
     << " {\n";
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    if (!keep[v]) continue;
    os << "  " << v;
    if (options.vertex_name) os << " [label=" << quote(options.vertex_name(v)) << "]";
    os << ";\n";
  }
  for (const auto& e : graph.edges()) {
    if (!keep[e.source] || !keep[e.target]) continue;
    os << "  " << e.source << arrow << e.target << " [label="
       << quote(options.edge_label ? options.edge_label(e.label)
                                   : std::to_string(e.label))
       << "];\n";
  }
  os << "}\n";
}

LabeledDigraph cayley_graph(const InverseMonoid& monoid,
                            std::span<const ElementRef> gens) {
  auto labels = sorted_unique({gens.begin(), gens.end()});
  for (auto g : labels) monoid.check(g);
  std::vector<LabeledEdge> edges;
  edges.reserve(labels.size() * monoid.order());
  for (ElementRef s = 0; s < monoid.order(); ++s)
    for (auto g : labels) edges.push_back({s, monoid.product(g, s), g});
  return LabeledDigraph(monoid.order(), std::move(edges));
}

std::vector<ElementRef> symmetrize(const InverseMonoid& monoid,
                                   std::span<const ElementRef> gens) {
  std::vector<ElementRef> out;
  for (auto g : gens) {
    monoid.check(g);
    out.push_back(g);
    out.push_back(monoid.inverse(g));
  }
  return sorted_unique(std::move(out));
}

std::optional<ElementRef> quasi_generation_witness(
    const InverseMonoid& monoid, std::span<const ElementRef> gens) {
  std::vector<ElementRef> pool(gens.begin(), gens.end());
  pool.insert(pool.end(), monoid.idempotents().begin(), monoid.idempotents().end());
  auto reached = monoid.closure(pool);
  for (ElementRef s = 0; s < monoid.order(); ++s)
    if (!std::binary_search(reached.begin(), reached.end(), s)) return s;
  return std::nullopt;
}

bool is_quasi_generating(const InverseMonoid& monoid,
                         std::span<const ElementRef> gens) {
  return !quasi_generation_witness(monoid, gens).has_value();
}

std::vector<ElementRef> reduce_quasi_generating(
    const InverseMonoid& monoid, std::span<const ElementRef> gens) {
  auto current = symmetrize(monoid, gens);
  if (!is_quasi_generating(monoid, current))
    throw PreconditionError("input set is not quasi-generating");
  for (auto g : symmetrize(monoid, gens)) {
    if (!std::binary_search(current.begin(), current.end(), g)) continue;
    std::vector<ElementRef> trial;
    for (auto h : current)
      if (h != g && h != monoid.inverse(g)) trial.push_back(h);
    if (is_quasi_generating(monoid, trial)) current = std::move(trial);
  }
  return current;
}

Partition schutzenberger_components(const InverseMonoid& monoid,
                                    std::span<const ElementRef> gens) {
  std::vector<ElementRef> labels(gens.begin(), gens.end());
  labels.insert(labels.end(), monoid.idempotents().begin(),
                monoid.idempotents().end());
  auto components = cayley_graph(monoid, labels).strong_components();
  auto l = monoid.l_classes();
  if (!(components == l))
    throw TheoremViolation(
        "Schutzenberger components differ from the L-classes; G u E(S) does "
        "not generate",
        partition_witness(components, l));
  return components;
}

CayleyMetricTable cayley_metric(const InverseMonoid& monoid,
                                std::span<const ElementRef> gens) {
  auto sym = symmetrize(monoid, gens);
  if (auto missing = quasi_generation_witness(monoid, sym))
    throw PreconditionError("generating set is not quasi-generating",
                            {*missing});
  const auto n = monoid.order();
  std::vector<std::vector<ElementRef>> adj(n);
  for (ElementRef s = 0; s < n; ++s)
    for (auto m : sym) {
      auto t = monoid.product(m, s);
      if (t != s && monoid.green_L(s, t)) {
        adj[s].push_back(t);
        adj[t].push_back(s);
      }
    }
  for (auto& row : adj) row = sorted_unique(std::move(row));

  CayleyMetricTable out{ExtendedMetric(n), sym, monoid.l_classes()};
  std::vector<std::uint32_t> dist(n, kUnreached);
  std::vector<ElementRef> queue;
  for (ElementRef src = 0; src < n; ++src) {
    queue.assign(1, src);
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto v : adj[u])
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (auto v : queue) {
      if (v > src) out.metric.set(src, v, Distance(dist[v]));
      dist[v] = kUnreached;
    }
  }
  if (!(out.metric.components() == out.components))
    throw TheoremViolation("Cayley metric components differ from L-classes",
                           partition_witness(out.metric.components(),
                                             out.components));
  return out;
}

ExtendedMetric cayley_metric_with_idempotents(const InverseMonoid& monoid,
                                              std::span<const ElementRef> gens) {
  auto labels = symmetrize(monoid, gens);
  labels.insert(labels.end(), monoid.idempotents().begin(),
                monoid.idempotents().end());
  labels = sorted_unique(std::move(labels));
  const auto n = monoid.order();
  // Directed BFS t -> g t over all of S: d(s, t) = min k with s = g_k..g_1 t.
  std::vector<std::vector<std::uint32_t>> directed(n,
                                                   std::vector<std::uint32_t>());
  for (ElementRef t = 0; t < n; ++t) {
    auto& dist = directed[t];
    dist.assign(n, kUnreached);
    dist[t] = 0;
    std::vector<ElementRef> queue{t};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto g : labels) {
        auto v = monoid.product(g, u);
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  ExtendedMetric out(n);
  for (ElementRef t = 0; t < n; ++t)
    for (ElementRef s = t + 1; s < n; ++s) {
      if (!monoid.green_L(s, t)) continue;
      if (directed[t][s] != directed[s][t])
        throw TheoremViolation("Schutzenberger graph distances are asymmetric",
                               {s, t});
      if (directed[t][s] == kUnreached)
        throw PreconditionError("generating set is not quasi-generating", {s});
      out.set(s, t, Distance(directed[t][s]));
    }
  return out;
}

BiLipschitzConstants bilipschitz_constants(const InverseMonoid& monoid,
                                           std::span<const ElementRef> m,
                                           std::span<const ElementRef> n) {
  auto dm = cayley_metric(monoid, m).metric;
  auto dn = cayley_metric(monoid, n).metric;
  auto cm = dm.components();
  auto cn = dn.components();
  if (!(cm == cn))
    throw TheoremViolation("Cayley metrics have different components",
                           partition_witness(cm, cn));
  BiLipschitzConstants out{Rational(1), Rational(1)};
  for (std::size_t s = 0; s < monoid.order(); ++s)
    for (std::size_t t = s + 1; t < monoid.order(); ++t) {
      if (dm(s, t).is_infinite()) continue;
      auto a = static_cast<std::int64_t>(dm(s, t).value());
      auto b = static_cast<std::int64_t>(dn(s, t).value());
      out.forward = std::max(out.forward, Rational(b, a));
      out.backward = std::max(out.backward, Rational(a, b));
    }
  return out;
}

ValidationReport check_right_subinvariance(const ExtendedMetric& metric,
                                           const InverseMonoid& monoid,
                                           const SweepPolicy& policy) {
  if (metric.size() != monoid.order())
    throw SizeMismatchError("metric and monoid sizes differ");
  ValidationReport report;
  for_each_triple(monoid.order(), policy, [&](auto s, auto t, auto x) {
    auto d = metric(s, t);
    if (d.is_finite()) {
      auto sx = monoid.product(ElementRef(s), ElementRef(x));
      auto tx = monoid.product(ElementRef(t), ElementRef(x));
      if (metric(sx, tx) > d) report.add("right-subinvariance", {s, t, x});
    }
    return true;
  });
  return report;
}

ValidationReport check_edge_pairing(const InverseMonoid& monoid) {
  ValidationReport report;
  const auto n = monoid.order();
  for (ElementRef x = 0; x < n; ++x) {
    auto xinv = monoid.inverse(x);
    bool idem = monoid.is_idempotent(x);
    for (ElementRef s = 0; s < n; ++s) {
      auto t = monoid.product(x, s);
      if (!monoid.green_L(s, t)) continue;
      if (monoid.product(xinv, t) != s) report.add("inverse-edge", {s, t, x});
      if (idem && t != s) report.add("idempotent-loop", {s, t, x});
    }
  }
  return report;
}

}  // namespace invgeo
