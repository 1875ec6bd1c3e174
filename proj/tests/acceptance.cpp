// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "invgeo/action.hpp"
#include "invgeo/cayley.hpp"
#include "invgeo/errors.hpp"
#include "invgeo/examples.hpp"
#include "invgeo/geometry.hpp"
#include "invgeo/presheaf.hpp"
#include "oracles.hpp"

using namespace invgeo;

namespace {

// Pinned limits. Distances are integers, so every metric comparison is exact.
constexpr double kAlgebraSeconds = 5.0;       // criterion 1, n = 1..4
constexpr double kEdgePairingSeconds = 10.0;  // criterion 3
constexpr double kPipelineSeconds = 5.0;      // criterion 5
constexpr SweepPolicy kExhaustive{1'000'000, 0, kDefaultSeed};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::vector<ElementRef> transpositions(const InverseMonoid& m, std::size_t n) {
  std::vector<ElementRef> out;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      out.push_back(*m.find(PartialBijection::transposition(n, a, b)));
  return out;
}

struct SelfAction {
  std::shared_ptr<const InverseMonoid> m;
  std::vector<ElementRef> gens;
  EtaleAction a;
};

SelfAction self_action(std::size_t n) {
  auto m = std::make_shared<const InverseMonoid>(symmetric_inverse_monoid(n));
  auto gens = transpositions(*m, n);
  auto a = cayley_action(m, gens);
  return {m, gens, a};
}

std::vector<std::uint32_t> identity_map(std::size_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// 1. Orders and structural invariants of I_1..I_5.
void algebra_oracle(Outcome& o) {
  const std::uint64_t expected[] = {2, 7, 34, 209, 1546};
  auto start = Clock::now();
  double through_four = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    auto m = symmetric_inverse_monoid(n);
    o.require(m.order() == expected[n - 1],
              "I_" + std::to_string(n) + " has order " + std::to_string(m.order()));
    o.require(oracle::symmetric_inverse_order(n) == expected[n - 1],
              "closed form disagrees at n=" + std::to_string(n));
    if (n <= 4)
      o.require(oracle::all_partial_bijections(n).size() == m.order(),
                "enumeration disagrees at n=" + std::to_string(n));
    // Exhaustive associativity through n = 4; inverses and idempotents
    // are checked exhaustively for every n.
    auto report = m.validate(n <= 4 ? kExhaustive : kAssociativitySweep);
    o.require(report.empty(), "I_" + std::to_string(n) + " invariants fail");
    if (n == 4) through_four = seconds_since(start);
  }
  o.require(through_four < kAlgebraSeconds, "too slow");
  o.detail << "orders 2,7,34,209,1546; n<=4 in " << through_four << " s";
}

// 2. Idempotent edges never shorten word-metric paths.
void metric_without_idempotents(Outcome& o) {
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto m = symmetric_inverse_monoid(n);
    auto gens = transpositions(m, n);
    auto dm = cayley_metric(m, gens).metric;
    auto de = cayley_metric_with_idempotents(m, gens);
    for (ElementRef s = 0; s < m.order(); ++s)
      for (ElementRef t = 0; t < m.order(); ++t) {
        if (!m.green_L(s, t)) {
          o.require(dm(s, t).is_infinite(), "finite distance across L-classes");
          continue;
        }
        ++pairs;
        o.require(dm(s, t).is_finite() && dm(s, t) == de(s, t),
                  "I_" + std::to_string(n) + " differs at (" + std::to_string(s) +
                      "," + std::to_string(t) + ")");
      }
  }
  o.detail << pairs << " L-related pairs equal on I_2..I_4";
}

// 3. Inverse-paired edges and idempotent loops inside L-classes of I_4.
void edge_pairing(Outcome& o) {
  auto m = symmetric_inverse_monoid(4);
  const auto n = m.order();
  auto start = Clock::now();
  auto report = check_edge_pairing(m);
  o.require(report.empty(), std::to_string(report.total()) + " counterexamples");
  // Independent triple scan: s L t and s = x t force t = x^-1 s, and t = s
  // when x is idempotent.
  std::size_t checks = 0, bad = 0;
  for (ElementRef s = 0; s < n; ++s)
    for (ElementRef t = 0; t < n; ++t) {
      if (!m.green_L(s, t)) continue;
      for (ElementRef x = 0; x < n; ++x) {
        ++checks;
        if (m.product(x, t) != s) continue;
        if (m.product(m.inverse(x), s) != t) ++bad;
        if (m.is_idempotent(x) && s != t) ++bad;
      }
    }
  auto t = seconds_since(start);
  o.require(bad == 0, std::to_string(bad) + " triple counterexamples");
  o.require(t < kEdgePairingSeconds, "too slow");
  o.detail << checks << " (s,t,x) triples with s L t, " << bad << " counterexamples, " << t << " s";
}

// 4. Every element of I_4 acts isometrically.
void theta_isometry(Outcome& o) {
  auto f = self_action(4);
  std::size_t bad = 0;
  for (ElementRef s = 0; s < f.m->order(); ++s)
    if (!check_theta_isometry(f.a, s).isometric) ++bad;
  o.require(bad == 0, std::to_string(bad) + " non-isometric elements");
  o.detail << f.m->order() << " elements, " << bad << " violations";
}

// 5. Milnor-Schwarz pipeline on I_3 with x1 = 1, T = 0.
void milnor_schwarz_pipeline(Outcome& o) {
  auto start = Clock::now();
  auto f = self_action(3);
  const auto& m = *f.m;
  const auto x1 = m.identity();
  o.require(coboundedness_constant(f.a, x1) == 0u, "T != 0");
  auto x = extract_generators(f.a, x1, 0);
  o.require(m.closure(x.generators).size() == m.order(), "G does not generate");
  auto cover = properness_witness(f.a, x1, 1);
  o.require(covers(m, cover.cover, x.generators), "G not inside C E(S)");
  auto ms = milnor_schwarz(f.a, x1, 0);
  o.require(ms.generators_covered && ms.cover_quasi_generates, "cover fails");
  o.require(ms.qi.components_correspond, "finiteness correspondence");
  o.require(ms.qi.order_preserving == true, "orbit map not order preserving");
  for (const auto& gens : {ms.cover.cover, f.gens}) {
    auto qi = orbit_map_qi(f.a, x1, gens);
    o.require(qi.components_correspond && qi.order_preserving == true, "orbit map qi");
    for (const auto& b : milnor_schwarz_bounds(f.a, x1, gens, x)) {
      o.require(b.chain_ok, "chain bound fails at " + std::to_string(b.element));
      o.require(b.word <= b.orbit + Distance(2), "d_M > d + 2");
      o.require(b.reverse_ok, "reverse bound fails at " + std::to_string(b.element));
      o.require(b.vchain_ok, "v-chain domination fails");
    }
  }
  auto t = seconds_since(start);
  o.require(t < kPipelineSeconds, "too slow");
  o.detail << "|G|=" << x.generators.size() << " |C|=" << cover.cover.size()
           << " L=" << ms.qi.multiplicative.to_string()
           << " C=" << ms.qi.additive.to_string() << ", " << t << " s";
}

// 6. d^R is a CMS metric for R = 1, 2, 3.
void rips_is_cms(Outcome& o) {
  auto f = self_action(3);
  const auto x1 = f.m->identity();
  for (std::uint32_t r = 1; r <= 3; ++r) {
    auto rips = rips_graph(f.a, x1, r);
    auto f1 = properness_witness(f.a, x1, r).cover;
    auto rep = validate_cms_metric(*f.m, rips.metric, f1, kExhaustive);
    for (const auto& p : rep.predicates())
      o.require(p.pass, "R=" + std::to_string(r) + " " + p.name + " " + p.witness);
    o.require(rep.subinvariance.constants["exhaustive"] == "true", "subinvariance sampled");
  }
  o.detail << "R=1,2,3: components, discreteness, 34^3 subinvariance, uniform properness";
}

// 7. Rips/orbit bounds and finite QI constants to d_M.
void rips_bounds(Outcome& o) {
  auto f = self_action(3);
  const auto& m = *f.m;
  const auto x1 = m.identity();
  auto t = *coboundedness_constant(f.a, x1);
  auto dm = cayley_metric(m, f.gens).metric;
  std::size_t pairs = 0;
  for (std::uint32_t r = std::max<std::uint32_t>(t, 1); r <= 4; ++r) {
    auto rips = rips_graph(f.a, x1, r);
    auto b = check_rips_bounds(f.a, x1, rips);
    pairs += b.pairs;
    o.require(b.ok(), "R=" + std::to_string(r) + " bound violations");
    auto fwd = qi_constants(identity_map(m.order()), rips.metric, dm);
    auto bwd = qi_constants(identity_map(m.order()), dm, rips.metric);
    o.require(fwd.components_correspond && bwd.components_correspond, "QI not finite");
    if (r == 2)
      o.detail << "R=2 forward (" << fwd.multiplicative.to_string() << ","
               << fwd.additive.to_string() << ") backward ("
               << bwd.multiplicative.to_string() << "," << bwd.additive.to_string()
               << "); ";
  }
  o.detail << pairs << " pair checks for R=1..4";
}

// 8. Quasi-generators recovered from d_M and from d^R.
void quasi_generation(Outcome& o) {
  auto f = self_action(3);
  const auto& m = *f.m;
  auto check = [&](const ExtendedMetric& d, const std::string& name,
                   std::optional<std::vector<ElementRef>> f1) {
    auto q = quasi_generators_from_metric(m, d, std::move(f1));
    auto pool = q.generators;
    pool.insert(pool.end(), m.idempotents().begin(), m.idempotents().end());
    o.require(m.closure(pool).size() == m.order(), name + ": closure != S");
    std::size_t certified = 0;
    for (const auto& fac : q.factorizations) {
      auto v = m.dom(fac.element);
      for (auto g : fac.factors) v = m.product(g, v);
      bool ok = v == fac.element && fac.distance.is_finite() &&
                fac.factors.size() <= fac.distance.value();
      o.require(ok, name + ": bad certificate for " + std::to_string(fac.element));
      certified += ok;
    }
    o.require(certified + m.idempotents().size() == m.order(), name + ": missing certificates");
    return q.generators.size();
  };
  auto k = check(cayley_metric(m, f.gens).metric, "d_M", std::nullopt);
  o.detail << "d_M |F1|=" << k;
  for (std::uint32_t r = 1; r <= 3; ++r) {
    auto rips = rips_graph(f.a, m.identity(), r);
    auto k1 = check(rips.metric, "d^" + std::to_string(r), std::nullopt);
    auto k2 = check(rips.metric, "d^" + std::to_string(r),
                    properness_witness(f.a, m.identity(), r).cover);
    o.detail << " d^" << r << " |F1|=" << k1 << "/" << k2;
  }
}

// 9. Properness needs checking at one basepoint only.
void basepoint_shift(Outcome& o) {
  auto ex = build_example("chain3xZ3");
  const auto& a = *ex.action;
  const PointRef y1 = 0, z1 = 1;  // (top,0) and (top,1)
  o.require(a.in_identity_fiber(y1) && a.in_identity_fiber(z1), "basepoints not in X_1");
  auto d = a.distance(y1, z1);
  o.require(d == Distance(1), "D = " + d.to_string());
  for (std::uint32_t r = 0; r <= 4; ++r)
    for (auto [p, q] : {std::pair{y1, z1}, std::pair{z1, y1}}) {
      auto b = check_basepoint_shift(a, p, q, r);
      o.require(b.inequality, "inequality fails at R=" + std::to_string(r));
      o.require(b.cover, "cover fails at R=" + std::to_string(r));
    }
  o.detail << "D=" << d.to_string() << ", R=0..4, both directions";
}

// 10. E x G with a 3-chain and Z/3.
void semilattice_times_group_instance(Outcome& o) {
  auto m = semilattice_times_group(chain_semilattice(3), cyclic_group(3));
  o.require(m.order() == 9 && m.idempotents().size() == 3, "wrong shape");
  o.require(m.validate(kExhaustive).empty(), "monoid invariants");
  auto ex = build_example("chain3xZ3");
  const auto& a = *ex.action;
  o.require(validate_presheaf(a.presheaf()).empty(), "presheaf axioms");
  o.require(validate_action(a).empty(), "action axioms");
  o.require(check_edge_pairing(*ex.monoid).empty(), "edge pairing");
  for (ElementRef s = 0; s < ex.monoid->order(); ++s)
    o.require(check_theta_isometry(a, s).isometric, "theta isometry");
  o.require(check_restriction_isometries(a.presheaf()).empty(),
            "restriction is not an isometry");
  auto dm = cayley_metric(*ex.monoid, ex.quasi_generators).metric;
  o.require(validate_cms_metric(*ex.monoid, dm, std::nullopt, kExhaustive).pass(),
            "d_M predicates");
  o.detail << "order 9, 3 fibers of 3 points, restrictions exact isometries";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"algebra oracle", algebra_oracle},
      {"word metric ignores idempotent edges", metric_without_idempotents},
      {"edge pairing on I_4", edge_pairing},
      {"theta_s isometries on I_4", theta_isometry},
      {"Milnor-Schwarz pipeline on I_3", milnor_schwarz_pipeline},
      {"d^R satisfies the CMS predicates", rips_is_cms},
      {"Rips bounds and QI to d_M", rips_bounds},
      {"quasi-generation from metrics", quasi_generation},
      {"basepoint shift on E x G", basepoint_shift},
      {"3-chain x Z/3 instance", semilattice_times_group_instance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1) << ". " << criteria[i].name
              << " -- " << o.detail.str();
    for (const auto& f : o.failures) std::cout << " [" << f << "]";
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed;
}
