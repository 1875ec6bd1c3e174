#include <numeric>

#include "doctest.h"
#include "invgeo/errors.hpp"
#include "invgeo/examples.hpp"
#include "invgeo/geometry.hpp"

using namespace invgeo;
constexpr auto U = PartialBijection::kUndefined;

namespace {

std::shared_ptr<const InverseMonoid> shared(InverseMonoid m) {
  return std::make_shared<const InverseMonoid>(std::move(m));
}

std::vector<ElementRef> transpositions(const InverseMonoid& m, std::size_t n) {
  std::vector<ElementRef> out;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      out.push_back(*m.find(PartialBijection::transposition(n, a, b)));
  return out;
}

struct Fixture {
  std::shared_ptr<const InverseMonoid> m;
  std::vector<ElementRef> gens;
  EtaleAction a;
};

Fixture symmetric(std::size_t n) {
  auto m = shared(symmetric_inverse_monoid(n));
  auto gens = transpositions(*m, n);
  auto a = cayley_action(m, gens);
  return {m, gens, a};
}

std::vector<std::uint32_t> identity_map(std::size_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

TEST_CASE("extract generators on I2") {
  auto f = symmetric(2);
  const auto& m = *f.m;
  auto x = extract_generators(f.a, m.identity(), 0);
  CHECK(x.radius == 1);
  auto dm = cayley_metric(m, f.gens).metric;
  std::vector<ElementRef> want;
  for (ElementRef s = 0; s < m.order(); ++s)
    if (dm(s, m.dom(s)) <= Distance(1)) want.push_back(s);
  CHECK(x.generators == want);
  for (auto e : m.idempotents())
    CHECK(std::binary_search(x.generators.begin(), x.generators.end(), e));
  CHECK(m.closure(x.generators).size() == m.order());
  for (const auto& cert : x.certificates) {
    CHECK(Distance(static_cast<std::uint32_t>(cert.chain.size())) <=
          cert.orbit_distance + Distance(2));
    CHECK(cert.chain.back().partial == cert.element);
    CHECK(cert.chain.back().orbit_rep == cert.element);
  }
}

TEST_CASE("extract generators on the trivial monoid") {
  auto m = shared(InverseMonoid::from_table({{0}}, 0));
  auto a = cayley_action(m, {});
  auto x = extract_generators(a, 0, 0);
  CHECK(x.generators == std::vector<ElementRef>{0});
}

TEST_CASE("extract generators needs coboundedness") {
  auto f = symmetric(2);
  auto nonid = *f.m->find(PartialBijection({0, U}));
  CHECK_THROWS_AS(extract_generators(f.a, nonid, 0), PreconditionError);
}

TEST_CASE("orbit map of the self-action") {
  auto f = symmetric(3);
  const auto& m = *f.m;
  auto qi = orbit_map_qi(f.a, m.identity(), f.gens);
  CHECK(qi.multiplicative == Rational(1));
  CHECK(qi.additive == Rational(0));
  CHECK(qi.components_correspond);
  CHECK(qi.order_preserving == true);

  auto x = extract_generators(f.a, m.identity(), 0);
  auto bounds = milnor_schwarz_bounds(f.a, m.identity(), f.gens, x);
  CHECK(bounds.size() == m.order());
  for (const auto& b : bounds) {
    CHECK(b.chain_ok);
    CHECK(b.reverse_ok);
    CHECK(b.vchain_ok);
    CHECK(b.word <= b.orbit + Distance(2));
  }
}

TEST_CASE("order preservation on I2") {
  auto f = symmetric(2);
  const auto& m = *f.m;
  auto e0 = *m.find(PartialBijection({0, U}));
  CHECK(m.natural_leq(e0, m.identity()));
  auto x1 = m.identity();
  CHECK(f.a.presheaf().leq(f.a.act(x1, e0), f.a.act(x1, m.identity())));
}

TEST_CASE("non-proper fallback: G from extraction gives a finite QI") {
  auto f = symmetric(3);
  auto x = extract_generators(f.a, f.m->identity(), 0);
  CHECK(f.m->closure(x.generators).size() == f.m->order());
  auto qi = orbit_map_qi(f.a, f.m->identity(), x.generators);
  CHECK(qi.components_correspond);
}

TEST_CASE("milnor-schwarz pipeline on E x G") {
  auto ex = build_example("chain3xZ3");
  auto r = milnor_schwarz(*ex.action, 0, 0);
  CHECK(r.generators_covered);
  CHECK(r.cover_quasi_generates);
  CHECK(r.qi.order_preserving == true);
}

TEST_CASE("rips graph edge cases") {
  auto f = symmetric(2);
  const auto& m = *f.m;
  auto x1 = m.identity();
  auto r0 = rips_graph(f.a, x1, 0);
  for (const auto& e : r0.graph.edges())
    CHECK(f.a.act(x1, e.source) == f.a.act(x1, e.target));
  auto r1 = rips_graph(f.a, x1, 1);
  auto e0 = *m.find(PartialBijection({0, U}));
  auto a = *m.find(PartialBijection({1, U}));
  CHECK(r1.metric(e0, a) == Distance(1));

  auto g = symmetric(3);
  std::uint32_t diam = 0;
  for (BaseRef e = 0; e < g.a.presheaf().base_size(); ++e)
    diam = std::max(diam, g.a.presheaf().fiber_diameter(e).value());
  auto big = rips_graph(g.a, g.m->identity(), diam);
  for (ElementRef s = 0; s < g.m->order(); ++s)
    for (ElementRef t = 0; t < g.m->order(); ++t) {
      auto d = big.metric(s, t);
      CHECK((d == Distance(0) || d == Distance(1) || d.is_infinite()));
      CHECK(d.is_finite() == g.m->green_L(s, t));
    }
}

TEST_CASE("rips bounds") {
  auto f = symmetric(3);
  for (std::uint32_t r = 1; r <= 3; ++r) {
    auto rips = rips_graph(f.a, f.m->identity(), r);
    auto b = check_rips_bounds(f.a, f.m->identity(), rips);
    CHECK(b.ok());
    CHECK(b.pairs > 0);
  }
  auto r0 = rips_graph(f.a, f.m->identity(), 0);
  CHECK_THROWS_AS(check_rips_bounds(f.a, f.m->identity(), r0), PreconditionError);
}

TEST_CASE("cms validation of the word metric and of d^R") {
  auto f = symmetric(3);
  const auto& m = *f.m;
  auto dm = cayley_metric(m, f.gens).metric;
  auto rep = validate_cms_metric(m, dm);
  CHECK(rep.pass());
  CHECK(rep.predicates().size() == 6);

  auto rips = rips_graph(f.a, m.identity(), 2);
  auto f1 = properness_witness(f.a, m.identity(), 2).cover;
  CHECK(validate_cms_metric(m, rips.metric, f1).pass());
}

TEST_CASE("cms validation flags finite distance across L-classes") {
  auto m = symmetric_inverse_monoid(2);
  auto gens = transpositions(m, 2);
  auto d = cayley_metric(m, gens).metric;
  d.set(m.identity(), *m.find(PartialBijection({0, U})), Distance(1));
  auto rep = validate_cms_metric(m, d);
  CHECK_FALSE(rep.components.pass);
  CHECK_FALSE(rep.components.witness.empty());
  CHECK_FALSE(rep.pass());
}

TEST_CASE("d^0 is discrete and fails the component predicate") {
  auto f = symmetric(2);
  auto rips = rips_graph(f.a, f.m->identity(), 0);
  auto rep = validate_cms_metric(*f.m, rips.metric);
  CHECK_FALSE(rep.components.pass);
}

TEST_CASE("quasi-generators from a metric") {
  auto f = symmetric(3);
  const auto& m = *f.m;
  auto q = quasi_generators_from_metric(m, cayley_metric(m, f.gens).metric);
  std::vector<ElementRef> pool = q.generators;
  pool.insert(pool.end(), m.idempotents().begin(), m.idempotents().end());
  CHECK(m.closure(pool).size() == m.order());
  for (const auto& fac : q.factorizations) {
    auto v = m.dom(fac.element);
    for (auto g : fac.factors) {
      CHECK(std::binary_search(q.generators.begin(), q.generators.end(), g));
      v = m.product(g, v);
    }
    CHECK(v == fac.element);
    CHECK(Distance(static_cast<std::uint32_t>(fac.factors.size())) <= fac.distance);
  }

  auto t = InverseMonoid::from_table({{0}}, 0);
  CHECK(quasi_generators_from_metric(t, ExtendedMetric(1)).generators.empty());

  auto g2 = symmetric(2);
  auto rips = rips_graph(g2.a, g2.m->identity(), 1);
  auto f1 = properness_witness(g2.a, g2.m->identity(), 1).cover;
  auto q2 = quasi_generators_from_metric(*g2.m, rips.metric, f1);
  CHECK(is_quasi_generating(*g2.m, q2.generators));
}

TEST_CASE("qi constants") {
  auto f = symmetric(3);
  auto dm = cayley_metric(*f.m, f.gens).metric;
  auto same = qi_constants(identity_map(f.m->order()), dm, dm);
  CHECK(same.multiplicative == Rational(1));
  CHECK(same.additive == Rational(0));
  CHECK(same.coarse_radius == Distance(0));

  for (std::uint32_t r = 1; r <= 3; ++r) {
    auto rips = rips_graph(f.a, f.m->identity(), r);
    auto fwd = qi_constants(identity_map(f.m->order()), rips.metric, dm);
    auto bwd = qi_constants(identity_map(f.m->order()), dm, rips.metric);
    CHECK(fwd.components_correspond);
    CHECK(bwd.components_correspond);
  }

  ExtendedMetric two(2);
  two.set(0, 1, Distance(1));
  std::vector<std::uint32_t> id{0, 1};
  CHECK_THROWS_AS(qi_constants(id, two, ExtendedMetric(2)), PreconditionError);
}

TEST_CASE("qi residual bounds hold on every pair") {
  auto f = symmetric(3);
  auto dm = cayley_metric(*f.m, f.gens).metric;
  auto rips = rips_graph(f.a, f.m->identity(), 2);
  auto r = qi_constants(identity_map(f.m->order()), dm, rips.metric);
  for (ElementRef s = 0; s < f.m->order(); ++s)
    for (ElementRef t = 0; t < f.m->order(); ++t) {
      if (dm(s, t).is_infinite()) continue;
      Rational a(dm(s, t).value()), b(rips.metric(s, t).value());
      CHECK(b <= r.multiplicative * a + r.additive);
      CHECK(a / r.multiplicative - r.additive <= b);
    }
}
