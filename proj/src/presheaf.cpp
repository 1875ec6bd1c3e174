#include "invgeo/presheaf.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "invgeo/cayley.hpp"
#include "invgeo/errors.hpp"

namespace invgeo {

namespace {
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
}

std::optional<BaseRef> Semilattice::index_of(ElementRef e) const {
  auto it = std::find(elements.begin(), elements.end(), e);
  if (it == elements.end()) return std::nullopt;
  return static_cast<BaseRef>(it - elements.begin());
}

Semilattice Semilattice::of_idempotents(const InverseMonoid& monoid) {
  Semilattice s;
  s.elements = monoid.idempotents();
  const auto k = s.elements.size();
  std::vector<BaseRef> position(monoid.order(), 0);
  for (std::size_t i = 0; i < k; ++i) position[s.elements[i]] = BaseRef(i);
  s.meet.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      s.meet[a * k + b] =
          position[monoid.product(s.elements[a], s.elements[b])];
  return s;
}

ValidationReport Semilattice::validate() const {
  ValidationReport report;
  const auto k = size();
  if (meet.size() != k * k) {
    report.add("meet-shape", {meet.size(), k});
    return report;
  }
  for (BaseRef a = 0; a < k; ++a) {
    if ((*this)(a, a) != a) report.add("meet-idempotent", {a});
    for (BaseRef b = 0; b < k; ++b) {
      if ((*this)(a, b) >= k) {
        report.add("meet-closed", {a, b});
        continue;
      }
      if ((*this)(a, b) != (*this)(b, a)) report.add("meet-commutative", {a, b});
    }
  }
  if (!report.empty()) return report;
  for (BaseRef a = 0; a < k; ++a)
    for (BaseRef b = 0; b < k; ++b)
      for (BaseRef c = 0; c < k; ++c)
        if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
          report.add("meet-associative", {a, b, c});
  return report;
}

MetricPresheaf::MetricPresheaf(PresheafData data) : data_(std::move(data)) {
  const auto n = data_.proj.size();
  const auto k = data_.base.size();
  if (data_.base.meet.size() != k * k)
    throw PreconditionError("meet table must be k*k", {data_.base.meet.size(), k});
  for (auto m : data_.base.meet)
    if (m >= k) throw PreconditionError("meet entry out of range", {m});
  if (data_.labels.empty()) {
    for (std::size_t x = 0; x < n; ++x) data_.labels.push_back(std::to_string(x));
  } else if (data_.labels.size() != n) {
    throw PreconditionError("label count differs from point count",
                            {data_.labels.size(), n});
  }
  for (std::size_t x = 0; x < n; ++x)
    if (data_.proj[x] >= k) throw PreconditionError("proj out of range", {x});
  if (data_.restrict.size() != n * k)
    throw PreconditionError("restrict table must be |X|*k",
                            {data_.restrict.size(), n * k});
  for (std::size_t i = 0; i < data_.restrict.size(); ++i)
    if (data_.restrict[i] >= n)
      throw PreconditionError("restrict entry out of range", {i / k, i % k});
  if (data_.fiber_edges.empty()) data_.fiber_edges.resize(k);
  if (data_.fiber_edges.size() != k)
    throw PreconditionError("need one edge list per base element",
                            {data_.fiber_edges.size(), k});

  fibers_.resize(k);
  local_.resize(n);
  for (PointRef x = 0; x < n; ++x) {
    local_[x] = static_cast<std::uint32_t>(fibers_[data_.proj[x]].size());
    fibers_[data_.proj[x]].push_back(x);
  }

  adjacency_.resize(k);
  dist_.resize(k);
  for (BaseRef e = 0; e < k; ++e) {
    const auto& fiber = fibers_[e];
    const auto m = fiber.size();
    auto& adj = adjacency_[e];
    adj.resize(m);
    for (auto [u, v] : data_.fiber_edges[e]) {
      if (u >= n || v >= n || data_.proj[u] != e || data_.proj[v] != e)
        throw PreconditionError("fiber edge leaves its fiber", {e, u, v});
      if (u == v) continue;
      adj[local_[u]].push_back(local_[v]);
      adj[local_[v]].push_back(local_[u]);
    }
    for (auto& row : adj) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    auto& dist = dist_[e];
    dist.assign(m * m, kUnreached);
    std::vector<std::uint32_t> queue;
    for (std::size_t src = 0; src < m; ++src) {
      auto* row = &dist[src * m];
      row[src] = 0;
      queue.assign(1, static_cast<std::uint32_t>(src));
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto u = queue[head];
        for (auto v : adj[u])
          if (row[v] == kUnreached) {
            row[v] = row[u] + 1;
            queue.push_back(v);
          }
      }
      if (queue.size() != m) {
        auto missing = std::find(row, row + m, kUnreached) - row;
        throw PreconditionError("fiber graph is disconnected",
                                {e, fiber[src], fiber[missing]});
      }
    }
  }
}

Distance MetricPresheaf::distance(PointRef x, PointRef y) const {
  auto e = data_.proj[x];
  if (e != data_.proj[y]) return Distance::infinite();
  return Distance(dist_[e][local_[x] * fibers_[e].size() + local_[y]]);
}

Distance MetricPresheaf::fiber_diameter(BaseRef e) const {
  std::uint32_t best = 0;
  for (auto d : dist_[e]) best = std::max(best, d);
  return Distance(best);
}

std::vector<PointRef> MetricPresheaf::geodesic(PointRef x, PointRef y) const {
  auto e = data_.proj[x];
  if (e != data_.proj[y]) return {};
  const auto m = fibers_[e].size();
  const auto* to_y = &dist_[e][local_[y] * m];
  std::vector<PointRef> path{x};
  auto cur = local_[x];
  // Walk downhill in the distance-to-y field, taking the least neighbour.
  while (to_y[cur] != 0) {
    for (auto v : adjacency_[e][cur])
      if (to_y[v] + 1 == to_y[cur]) {
        cur = v;
        break;
      }
    path.push_back(fibers_[e][cur]);
  }
  return path;
}

ExtendedMetric MetricPresheaf::metric() const {
  ExtendedMetric d(size());
  for (const auto& fiber : fibers_)
    for (auto x : fiber)
      for (auto y : fiber) d.set(x, y, distance(x, y));
  return d;
}

ValidationReport validate_presheaf(const MetricPresheaf& p) {
  ValidationReport report = p.base().validate();
  const auto n = p.size();
  const auto k = p.base_size();
  const auto& meet = p.base();
  for (PointRef x = 0; x < n; ++x) {
    if (p.restrict(x, p.proj(x)) != x) report.add("axiom-2", {x});
    for (BaseRef e = 0; e < k; ++e) {
      auto xe = p.restrict(x, e);
      if (p.proj(xe) != meet(p.proj(x), e)) report.add("axiom-3", {x, e});
      for (BaseRef f = 0; f < k; ++f)
        if (p.restrict(xe, f) != p.restrict(x, meet(e, f)))
          report.add("axiom-1", {x, e, f});
    }
  }
  for (BaseRef e = 0; e < k; ++e)
    if (p.fiber(e).empty()) report.add("global", {e});
  for (BaseRef e = 0; e < k; ++e) {
    auto fiber = p.fiber(e);
    for (auto x : fiber)
      for (auto y : fiber) {
        if (y < x) continue;
        auto d = p.distance(x, y);
        for (BaseRef f = 0; f < k; ++f)
          if (p.distance(p.restrict(x, f), p.restrict(y, f)) > d)
            report.add("monotonicity", {x, y, f});
      }
  }
  return report;
}

ValidationReport check_restriction_isometries(const MetricPresheaf& p) {
  ValidationReport report;
  const auto& meet = p.base();
  for (BaseRef e = 0; e < p.base_size(); ++e)
    for (BaseRef f = 0; f < p.base_size(); ++f) {
      if (meet(e, f) != f) continue;
      auto fiber = p.fiber(e);
      for (auto x : fiber)
        for (auto y : fiber)
          if (x < y && p.distance(x, y) !=
                           p.distance(p.restrict(x, f), p.restrict(y, f)))
            report.add("restriction-isometry", {x, y, f});
    }
  return report;
}

MetricPresheaf cayley_presheaf(const InverseMonoid& monoid,
                               std::span<const ElementRef> quasi_generators) {
  auto missing = quasi_generation_witness(monoid, quasi_generators);
  if (missing)
    throw PreconditionError(
        "generating set is not quasi-generating; unreachable element " +
            monoid.describe(*missing),
        {*missing});

  PresheafData data;
  data.base = Semilattice::of_idempotents(monoid);
  const auto k = data.base.size();
  const auto n = monoid.order();
  std::vector<BaseRef> position(n, 0);
  for (std::size_t i = 0; i < k; ++i) position[data.base.elements[i]] = BaseRef(i);

  data.labels.reserve(n);
  data.proj.resize(n);
  data.restrict.resize(n * k);
  for (ElementRef s = 0; s < n; ++s) {
    data.labels.push_back(monoid.describe(s));
    data.proj[s] = position[monoid.dom(s)];
    for (std::size_t e = 0; e < k; ++e)
      data.restrict[s * k + e] = monoid.product(s, data.base.elements[e]);
  }

  std::vector<ElementRef> labels(quasi_generators.begin(), quasi_generators.end());
  labels.insert(labels.end(), monoid.idempotents().begin(),
                monoid.idempotents().end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  data.fiber_edges.resize(k);
  for (ElementRef s = 0; s < n; ++s)
    for (auto g : labels) {
      auto t = monoid.product(g, s);
      if (t > s && monoid.green_L(s, t))
        data.fiber_edges[data.proj[s]].emplace_back(s, t);
      else if (t < s && monoid.green_L(s, t))
        data.fiber_edges[data.proj[s]].emplace_back(t, s);
    }
  for (auto& edges : data.fiber_edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  return MetricPresheaf(std::move(data));
}

}  // namespace invgeo
