#include <set>

#include "doctest.h"
#include "invgeo/errors.hpp"
#include "invgeo/examples.hpp"
#include "invgeo/monoid.hpp"
#include "oracles.hpp"

using namespace invgeo;
constexpr auto U = PartialBijection::kUndefined;

namespace {

InverseMonoid i2() { return symmetric_inverse_monoid(2); }

ElementRef idx(const InverseMonoid& m, std::vector<std::uint32_t> img) {
  auto r = m.find(PartialBijection(std::move(img)));
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("generate: small cases") {
  std::vector<PartialBijection> none;
  auto trivial = InverseMonoid::generate(2, none);
  CHECK(trivial.order() == 1);
  CHECK(trivial.element(trivial.identity()) == PartialBijection::identity(2));

  std::uint32_t zero[] = {0};
  std::vector<PartialBijection> gens{PartialBijection::transposition(2, 0, 1),
                                     PartialBijection::partial_identity(2, zero)};
  auto m = InverseMonoid::generate(2, gens);
  CHECK(m.order() == 7);
  std::set<PartialBijection> got, want;
  for (ElementRef s = 0; s < m.order(); ++s) got.insert(m.element(s));
  for (auto& img : oracle::all_partial_bijections(2)) want.insert(PartialBijection(img));
  CHECK(got == want);

  std::uint32_t two[] = {0, 1};
  std::vector<PartialBijection> g3{PartialBijection::transposition(3, 0, 1),
                                   PartialBijection::transposition(3, 0, 2),
                                   PartialBijection::transposition(3, 1, 2),
                                   PartialBijection::partial_identity(3, two)};
  CHECK(InverseMonoid::generate(3, g3).order() == 34);
}

TEST_CASE("generate: element cap and size mismatch") {
  auto gens = symmetric_inverse_generators(4);
  GenerateOptions opt;
  opt.element_cap = 100;
  try {
    InverseMonoid::generate(4, gens, opt);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.cap() == 100);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  std::vector<PartialBijection> bad{PartialBijection::identity(3)};
  CHECK_THROWS_AS(InverseMonoid::generate(2, bad), SizeMismatchError);
}

TEST_CASE("elements are sorted canonically") {
  auto m = symmetric_inverse_monoid(3);
  for (ElementRef s = 1; s < m.order(); ++s) CHECK(m.element(s - 1) < m.element(s));
}

TEST_CASE("from_table: trivial and semilattice") {
  auto t = InverseMonoid::from_table({{0}}, 0);
  CHECK(t.order() == 1);
  auto sl = InverseMonoid::from_table({{0, 1}, {1, 1}}, 0);
  CHECK(sl.idempotents().size() == 2);
}

TEST_CASE("from_table: round trip of I2") {
  auto m = i2();
  std::vector<std::vector<ElementRef>> table(m.order(), std::vector<ElementRef>(m.order()));
  for (ElementRef a = 0; a < m.order(); ++a)
    for (ElementRef b = 0; b < m.order(); ++b) table[a][b] = m.product(a, b);
  auto back = InverseMonoid::from_table(table, m.identity());
  for (ElementRef a = 0; a < m.order(); ++a) {
    CHECK(back.inverse(a) == m.inverse(a));
    for (ElementRef b = 0; b < m.order(); ++b) CHECK(back.product(a, b) == m.product(a, b));
  }
}

TEST_CASE("from_table: errors carry witnesses") {
  // x y = y except 1 1 = 0: not associative.
  std::vector<std::vector<ElementRef>> bad{{0, 1, 2}, {1, 0, 1}, {2, 2, 2}};
  try {
    InverseMonoid::from_table(bad, 0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.witness().size() >= 1);
  }
  // Left-zero band with identity adjoined: associative, but 1 and 2 each
  // have two inverses.
  std::vector<std::vector<ElementRef>> band{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  try {
    InverseMonoid::from_table(band, 0);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK_FALSE(e.witness().empty());
  }
  CHECK_THROWS_AS(InverseMonoid::from_table({{0, 1}, {1, 0}}, 1), ValidationError);
  CHECK_THROWS_AS(InverseMonoid::from_table({{0, 1}}, 0), ValidationError);
  CHECK_THROWS_AS(InverseMonoid::from_table({{0, 5}, {1, 1}}, 0), ValidationError);
}

TEST_CASE("dom, ran and natural order in I2") {
  auto m = i2();
  auto id = idx(m, {0, 1});
  auto swap = idx(m, {1, 0});
  auto e0 = idx(m, {0, U});
  auto e1 = idx(m, {U, 1});
  auto a = idx(m, {1, U});  // 0 -> 1 only
  for (auto e : m.idempotents()) CHECK(m.dom(e) == e);
  CHECK(m.dom(a) == e0);
  CHECK(m.ran(a) == e1);
  CHECK(m.dom(swap) == id);
  CHECK(m.natural_leq(a, a));
  CHECK(m.natural_leq(a, swap));
  CHECK_FALSE(m.natural_leq(swap, id));
  CHECK(m.green_L(e0, a));
  CHECK_FALSE(m.green_L(id, e0));
  CHECK(m.green_R(e1, a));
  CHECK(m.l_classes().block_count() == 4);
}

TEST_CASE("invariants hold exhaustively on I3") {
  auto m = symmetric_inverse_monoid(3);
  const auto n = m.order();
  CHECK(m.validate().empty());
  for (ElementRef s = 0; s < n; ++s) {
    CHECK(m.product(m.product(s, m.inverse(s)), s) == s);
    for (ElementRef t = 0; t < n; ++t) {
      auto st = m.product(s, t);
      CHECK(m.natural_leq(m.dom(st), m.dom(t)));
      CHECK(m.natural_leq(s, t) == (s == m.product(m.ran(s), t)));
      if (m.green_L(s, t)) {
        for (ElementRef x = 0; x < n; ++x) {
          if (m.product(x, t) != s) continue;
          CHECK(t == m.product(m.inverse(x), s));
          if (m.is_idempotent(x)) CHECK(t == s);
        }
      }
    }
  }
  for (auto e : m.idempotents())
    for (auto f : m.idempotents()) {
      CHECK(m.is_idempotent(m.product(e, f)));
      CHECK(m.product(e, f) == m.product(f, e));
    }
}

TEST_CASE("lazy products agree with dense products") {
  auto gens = symmetric_inverse_generators(4);
  GenerateOptions lazy;
  lazy.dense_limit = 0;
  auto a = InverseMonoid::generate(4, gens);
  auto b = InverseMonoid::generate(4, gens, lazy);
  REQUIRE(a.dense());
  REQUIRE_FALSE(b.dense());
  REQUIRE(a.order() == b.order());
  for (ElementRef s = 0; s < a.order(); ++s)
    for (ElementRef t = 0; t < a.order(); t += 7) CHECK(a.product(s, t) == b.product(s, t));
}

TEST_CASE("property: random submonoids satisfy the invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<PartialBijection> gens;
    for (int k = 0; k < 2; ++k)
      gens.emplace_back(oracle::random_partial_bijection(n, rng));
    auto m = InverseMonoid::generate(n, gens);
    CHECK(m.validate().empty());
    // Closed under the raw composition of its elements.
    for (ElementRef s = 0; s < m.order(); ++s)
      for (ElementRef t = 0; t < m.order(); ++t) {
        auto raw = oracle::compose(
            {m.element(s).image().begin(), m.element(s).image().end()},
            {m.element(t).image().begin(), m.element(t).image().end()});
        CHECK(m.element(m.product(s, t)) == PartialBijection(raw));
      }
  }
}

TEST_CASE("closure") {
  auto m = i2();
  std::vector<ElementRef> swap{idx(m, {1, 0})};
  CHECK(m.closure(swap).size() == 2);
  std::vector<ElementRef> all;
  for (ElementRef s = 0; s < m.order(); ++s) all.push_back(s);
  CHECK(m.closure(all).size() == m.order());
}
