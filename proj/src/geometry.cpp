#include "invgeo/geometry.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "invgeo/errors.hpp"

namespace invgeo {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::string pair_string(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

GeneratorExtraction extract_generators(const EtaleAction& a, PointRef x1,
                                       std::uint32_t t) {
  const auto& m = a.monoid();
  const auto& p = a.presheaf();
  auto needed = coboundedness_constant(a, x1);
  if (!needed || *needed > t)
    throw PreconditionError("action is not T-cobounded at the basepoint",
                            {x1, t});
  GeneratorExtraction out;
  out.cobounded_radius = t;
  out.radius = 2 * t + 1;
  out.generators = qualifying_elements(a, x1, out.radius);

  // Least orbit representative within T of each point.
  std::vector<ElementRef> rep(p.size(), kUnreached);
  for (PointRef y = 0; y < p.size(); ++y)
    for (ElementRef s = 0; s < m.order(); ++s)
      if (p.distance(y, a.act(x1, s)) <= Distance(t)) {
        rep[y] = s;
        break;
      }

  auto in_g = [&](ElementRef u) {
    return std::binary_search(out.generators.begin(), out.generators.end(), u);
  };
  out.certificates.reserve(m.order());
  for (ElementRef s = 0; s < m.order(); ++s) {
    GenerationCertificate cert{s, Distance::infinite(), {}};
    auto from = a.act(x1, m.dom(s));
    auto to = a.act(x1, s);
    cert.orbit_distance = p.distance(from, to);
    auto path = p.geodesic(from, to);
    if (path.empty())
      throw TheoremViolation("x1.dom(s) and x1.s lie in different fibers", {s});
    const auto k = path.size();
    if (Distance(static_cast<std::uint32_t>(k)) > cert.orbit_distance + Distance(2))
      throw TheoremViolation("chain longer than d + 2", {s, k});
    ElementRef prev = 0;
    ElementRef partial = m.dom(s);
    ElementRef product = m.identity();
    for (std::size_t i = 0; i < k; ++i) {
      auto si = (i + 1 == k) ? s : rep[path[i]];
      if (si == kUnreached)
        throw TheoremViolation("no orbit point within T of a chain point",
                               {s, path[i]});
      auto ui = (i == 0) ? si : m.product(si, m.inverse(prev));
      if (!in_g(ui))
        throw TheoremViolation("chain step outside G", {s, i, ui});
      partial = m.product(ui, partial);
      product = m.product(ui, product);
      cert.chain.push_back({path[i], si, ui, partial});
      prev = si;
    }
    if (product != s || partial != s)
      throw TheoremViolation("chain product differs from the element", {s});
    out.certificates.push_back(std::move(cert));
  }
  if (m.closure(out.generators).size() != m.order())
    throw TheoremViolation("extracted set does not generate the monoid",
                           {out.generators.size()});
  return out;
}

QiReport qi_constants(std::span<const std::uint32_t> map,
                      const ExtendedMetric& source,
                      const ExtendedMetric& target) {
  const auto n = source.size();
  if (map.size() != n)
    throw SizeMismatchError("map is not total on the source carrier");
  for (std::size_t a = 0; a < n; ++a)
    if (map[a] >= target.size())
      throw PreconditionError("map value out of range", {a, map[a]});

  QiReport out;
  std::set<std::pair<std::uint32_t, std::uint32_t>> samples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto da = source(a, b);
      auto db = target(map[a], map[b]);
      if (da.is_finite() && db.is_infinite())
        throw PreconditionError("map sends a finite pair to INFINITE", {a, b});
      if (da.is_infinite()) {
        if (db.is_finite()) out.components_correspond = false;
        continue;
      }
      samples.emplace(da.value(), db.value());
    }

  bool first = true;
  for (std::int64_t q = 4; q <= 64; ++q) {
    Rational l(q, 4);
    Rational c(0);
    for (auto [da, db] : samples) {
      c = std::max(c, Rational(db) - l * Rational(da));
      c = std::max(c, Rational(da) / l - Rational(db));
    }
    if (first || c < out.additive) {
      out.multiplicative = l;
      out.additive = c;
      first = false;
    }
  }

  Distance radius(0);
  std::vector<Distance> nearest(target.size(), Distance::infinite());
  for (std::size_t y = 0; y < target.size(); ++y)
    for (std::size_t a = 0; a < n; ++a)
      nearest[y] = std::min(nearest[y], target(map[a], y));
  for (auto d : nearest) radius = std::max(radius, d);
  out.coarse_radius = target.size() == 0 ? Distance(0) : radius;
  return out;
}

QiReport orbit_map_qi(const EtaleAction& a, PointRef x1,
                      std::span<const ElementRef> gens) {
  if (!a.in_identity_fiber(x1))
    throw PreconditionError("basepoint is not in the identity fiber", {x1});
  const auto& m = a.monoid();
  auto dm = cayley_metric(m, gens).metric;
  auto dx = a.presheaf().metric();
  std::vector<std::uint32_t> orbit(m.order());
  for (ElementRef s = 0; s < m.order(); ++s) orbit[s] = a.act(x1, s);
  for (ElementRef s = 0; s < m.order(); ++s)
    for (ElementRef t = 0; t < m.order(); ++t)
      if (dm(s, t).is_finite() != dx(orbit[s], orbit[t]).is_finite())
        throw TheoremViolation("finite distances of the orbit map do not "
                               "correspond",
                               {s, t});
  auto out = qi_constants(orbit, dm, dx);
  bool order = true;
  for (ElementRef s = 0; s < m.order() && order; ++s)
    for (ElementRef t = 0; t < m.order(); ++t)
      if (m.natural_leq(s, t) && !a.presheaf().leq(orbit[s], orbit[t])) {
        order = false;
        break;
      }
  out.order_preserving = order;
  return out;
}

std::vector<OrbitBound> milnor_schwarz_bounds(
    const EtaleAction& a, PointRef x1, std::span<const ElementRef> gens,
    const GeneratorExtraction& extraction, std::uint64_t seed,
    std::size_t samples_per_element) {
  const auto& m = a.monoid();
  auto table = cayley_metric(m, gens);
  const auto& dm = table.metric;
  const auto& sym = table.generators;
  auto orbit_step = [&](ElementRef t) {
    return a.distance(a.act(x1, t), a.act(x1, m.dom(t))).value();
  };

  // BFS from each idempotent e over v -> g v gives shortest factorisations
  // s = t_n ... t_1 e of every s with dom(s) = e.
  std::vector<ElementRef> parent(m.order(), kUnreached);
  std::vector<ElementRef> via(m.order(), kUnreached);
  for (auto e : m.idempotents()) {
    std::vector<ElementRef> queue{e};
    parent[e] = e;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto v = queue[head];
      for (auto g : sym) {
        auto w = m.product(g, v);
        if (parent[w] == kUnreached && m.dom(w) == e) {
          parent[w] = v;
          via[w] = g;
          queue.push_back(w);
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<OrbitBound> rows;
  rows.reserve(m.order());
  for (ElementRef s = 0; s < m.order(); ++s) {
    OrbitBound row{};
    row.element = s;
    row.word = dm(m.dom(s), s);
    row.orbit = a.distance(a.act(x1, m.dom(s)), a.act(x1, s));
    row.chain_length = extraction.certificates.at(s).chain.size();
    const auto k = Distance(static_cast<std::uint32_t>(row.chain_length));
    row.chain_ok = row.word <= k && k <= row.orbit + Distance(2);

    // v_0 = dom s, ..., v_n = s; steps[i] = t_{i+1}.
    std::vector<ElementRef> steps, vs{s};
    for (auto v = s; v != m.dom(s); v = parent[v]) {
      steps.push_back(via[v]);
      vs.push_back(parent[v]);
    }
    std::reverse(steps.begin(), steps.end());
    std::reverse(vs.begin(), vs.end());
    row.step_max = 0;
    for (auto t : steps) row.step_max = std::max(row.step_max, orbit_step(t));
    row.reverse_ok =
        row.orbit.value() <= static_cast<std::uint64_t>(steps.size()) * row.step_max;

    auto dominated = [&](const std::vector<ElementRef>& ts) {
      for (std::size_t i = 0; i < ts.size(); ++i) {
        auto lhs = a.distance(a.act(x1, vs[i + 1]), a.act(x1, vs[i]));
        if (lhs > Distance(orbit_step(ts[i]))) return false;
      }
      return true;
    };
    row.vchain_ok = dominated(steps);
    // Alternative factorisations t_i e with ran(v_{i-1}) <= e.
    for (std::size_t trial = 0; trial < samples_per_element && !steps.empty();
         ++trial) {
      std::vector<ElementRef> ts;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        auto r = m.ran(vs[i]);
        std::vector<ElementRef> above;
        for (auto e : m.idempotents())
          if (m.product(e, r) == r) above.push_back(e);
        std::uniform_int_distribution<std::size_t> pick(0, above.size() - 1);
        auto t = m.product(steps[i], above[pick(rng)]);
        if (m.product(t, vs[i]) != vs[i + 1])
          throw TheoremViolation("alternative factorisation changed the chain",
                                 {s, i});
        ts.push_back(t);
      }
      row.vchain_ok = row.vchain_ok && dominated(ts);
    }
    rows.push_back(row);
  }
  return rows;
}

MilnorSchwarzResult milnor_schwarz(const EtaleAction& a, PointRef x1,
                                   std::uint32_t t, std::uint64_t seed) {
  MilnorSchwarzResult out;
  out.extraction = extract_generators(a, x1, t);
  out.cover = properness_witness(a, x1, out.extraction.radius);
  out.generators_covered =
      covers(a.monoid(), out.cover.cover, out.extraction.generators);
  out.cover_quasi_generates = is_quasi_generating(a.monoid(), out.cover.cover);
  if (!out.generators_covered || !out.cover_quasi_generates)
    throw TheoremViolation("properness cover does not quasi-generate",
                           {out.cover.cover.size()});
  out.qi = orbit_map_qi(a, x1, out.cover.cover);
  out.bounds =
      milnor_schwarz_bounds(a, x1, out.cover.cover, out.extraction, seed);
  return out;
}

RipsGraph rips_graph(const EtaleAction& a, PointRef x1, std::uint32_t radius) {
  if (!a.in_identity_fiber(x1))
    throw PreconditionError("basepoint is not in the identity fiber", {x1});
  const auto n = a.monoid().order();
  std::vector<PointRef> orbit(n);
  for (ElementRef s = 0; s < n; ++s) orbit[s] = a.act(x1, s);
  std::vector<LabeledEdge> edges;
  std::vector<std::vector<ElementRef>> adj(n);
  for (ElementRef s = 0; s < n; ++s)
    for (ElementRef t = s + 1; t < n; ++t) {
      auto d = a.distance(orbit[s], orbit[t]);
      if (d <= Distance(radius)) {
        edges.push_back({s, t, d.value()});
        adj[s].push_back(t);
        adj[t].push_back(s);
      }
    }
  RipsGraph out{radius, LabeledDigraph(n, std::move(edges)), ExtendedMetric(n)};
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
  return out;
}

RipsBounds check_rips_bounds(const EtaleAction& a, PointRef x1,
                             const RipsGraph& rips) {
  if (rips.radius == 0) throw PreconditionError("radius must be at least 1");
  const auto n = a.monoid().order();
  const std::uint64_t r = rips.radius;
  RipsBounds out;
  for (ElementRef s = 0; s < n; ++s)
    for (ElementRef t = s + 1; t < n; ++t) {
      auto d = a.distance(a.act(x1, s), a.act(x1, t));
      auto dr = rips.metric(s, t);
      if (d.is_finite() != dr.is_finite()) {
        ++out.finiteness_violations;
        continue;
      }
      if (d.is_infinite()) continue;
      ++out.pairs;
      if (r * dr.value() > d.value() + r) ++out.lower_violations;
      if (d.value() > r * dr.value()) ++out.upper_violations;
    }
  return out;
}

bool CmsReport::pass() const {
  for (const auto& p : predicates())
    if (!p.pass) return false;
  return true;
}

std::vector<PredicateResult> CmsReport::predicates() const {
  return {metric_axioms, components,  discreteness,
          subinvariance, properness, uniform_properness};
}

CmsReport validate_cms_metric(const InverseMonoid& m, const ExtendedMetric& d,
                              std::optional<std::vector<ElementRef>> f1,
                              const SweepPolicy& policy) {
  if (d.size() != m.order())
    throw SizeMismatchError("metric and monoid sizes differ");
  const auto n = m.order();
  CmsReport out;

  auto axioms = d.check_axioms();
  out.metric_axioms = {"extended-metric", axioms.empty(), "", {}};
  if (!axioms.empty()) out.metric_axioms.witness = axioms.violations().front().rule;

  out.components.name = "components-are-L-classes";
  out.components.pass = true;
  for (ElementRef s = 0; s < n && out.components.pass; ++s)
    for (ElementRef t = 0; t < n; ++t)
      if (d(s, t).is_finite() != m.green_L(s, t)) {
        out.components.pass = false;
        out.components.witness = pair_string(s, t);
        break;
      }

  out.discreteness.name = "uniform-discreteness";
  Distance least = Distance::infinite();
  for (ElementRef s = 0; s < n; ++s)
    for (ElementRef t = s + 1; t < n; ++t) least = std::min(least, d(s, t));
  out.discreteness.pass = least > Distance(0);
  out.discreteness.constants["inf"] = least.to_string();

  auto sub = check_right_subinvariance(d, m, policy);
  out.subinvariance.name = "right-subinvariance";
  out.subinvariance.pass = sub.empty();
  out.subinvariance.constants["exhaustive"] =
      policy.exhaustive(n) ? "true" : "false";
  if (!sub.empty()) {
    const auto& w = sub.violations().front().witness;
    out.subinvariance.witness = "(" + std::to_string(w[0]) + "," +
                                std::to_string(w[1]) + "," +
                                std::to_string(w[2]) + ")";
  }

  // Properness: the least f with y = f x for every finite pair.
  out.properness.name = "properness";
  out.properness.pass = true;
  std::vector<std::set<ElementRef>> by_radius(d.max_finite().value() + 1);
  std::set<ElementRef> derived_f1;
  for (ElementRef x = 0; x < n && out.properness.pass; ++x)
    for (ElementRef y = 0; y < n; ++y) {
      if (x == y || d(x, y).is_infinite()) continue;
      ElementRef f = 0;
      while (f < n && m.product(f, x) != y) ++f;
      if (f == n) {
        out.properness.pass = false;
        out.properness.witness = pair_string(x, y);
        break;
      }
      by_radius[d(x, y).value()].insert(f);
      if (d(x, y) <= Distance(1)) derived_f1.insert(f);
    }
  std::set<ElementRef> cumulative;
  for (std::size_t r = 0; r < by_radius.size(); ++r) {
    cumulative.insert(by_radius[r].begin(), by_radius[r].end());
    out.properness.constants["|F_" + std::to_string(r) + "|"] =
        std::to_string(cumulative.size());
  }

  out.uniform_generators =
      f1 ? *f1 : std::vector<ElementRef>(derived_f1.begin(), derived_f1.end());
  for (auto f : out.uniform_generators) m.check(f);
  out.uniform_properness.name = "uniform-properness";
  out.uniform_properness.pass = true;
  out.uniform_properness.constants["|F_1|"] =
      std::to_string(out.uniform_generators.size());
  std::vector<std::uint32_t> steps(n);
  std::vector<ElementRef> queue;
  for (ElementRef x = 0; x < n && out.uniform_properness.pass; ++x) {
    std::fill(steps.begin(), steps.end(), kUnreached);
    steps[x] = 0;
    queue.assign(1, x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (auto f : out.uniform_generators) {
        auto v = m.product(f, u);
        if (steps[v] == kUnreached) {
          steps[v] = steps[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (ElementRef y = 0; y < n; ++y) {
      if (y == x || d(x, y).is_infinite()) continue;
      // Distances are integers, so ceil(d) = d.
      if (steps[y] == kUnreached || steps[y] > d(x, y).value()) {
        out.uniform_properness.pass = false;
        out.uniform_properness.witness = pair_string(x, y);
        break;
      }
    }
  }
  return out;
}

QuasiGeneration quasi_generators_from_metric(
    const InverseMonoid& m, const ExtendedMetric& d,
    std::optional<std::vector<ElementRef>> f1) {
  auto report = validate_cms_metric(m, d, std::move(f1));
  if (!report.components.pass || !report.uniform_properness.pass)
    throw PreconditionError(
        "metric is not uniformly proper with L-class components");
  QuasiGeneration out;
  out.generators = report.uniform_generators;
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()),
                       out.generators.end());

  std::vector<ElementRef> parent(m.order()), via(m.order());
  for (ElementRef s = 0; s < m.order(); ++s) {
    if (m.is_idempotent(s)) continue;
    auto start = m.dom(s);
    Factorization fac{s, d(s, start), {}};
    std::fill(parent.begin(), parent.end(), kUnreached);
    parent[start] = start;
    std::vector<ElementRef> queue{start};
    for (std::size_t head = 0; head < queue.size() && parent[s] == kUnreached;
         ++head) {
      auto u = queue[head];
      for (auto f : out.generators) {
        auto v = m.product(f, u);
        if (parent[v] == kUnreached) {
          parent[v] = u;
          via[v] = f;
          queue.push_back(v);
        }
      }
    }
    if (parent[s] == kUnreached)
      throw TheoremViolation("element not reachable from its domain", {s});
    for (auto v = s; v != start; v = parent[v]) fac.factors.push_back(via[v]);
    std::reverse(fac.factors.begin(), fac.factors.end());
    if (Distance(static_cast<std::uint32_t>(fac.factors.size())) > fac.distance)
      throw TheoremViolation("factorisation longer than ceil(D)", {s});
    out.factorizations.push_back(std::move(fac));
  }
  std::vector<ElementRef> pool = out.generators;
  pool.insert(pool.end(), m.idempotents().begin(), m.idempotents().end());
  if (m.closure(pool).size() != m.order())
    throw TheoremViolation("F_1 u E(S) does not generate the monoid",
                           {out.generators.size()});
  return out;
}

}  // namespace invgeo
