#include "doctest.h"
#include "invgeo/cayley.hpp"
#include "invgeo/errors.hpp"
#include "invgeo/examples.hpp"
#include "oracles.hpp"

using namespace invgeo;

TEST_CASE("symmetric inverse monoid orders") {
  CHECK(symmetric_inverse_monoid(1).order() == 2);
  CHECK(symmetric_inverse_monoid(2).order() == 7);
  CHECK(symmetric_inverse_monoid(4).order() == 209);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(symmetric_inverse_monoid(n).order() == oracle::symmetric_inverse_order(n));
  CHECK_THROWS_AS(symmetric_inverse_monoid(0), CapacityError);
  CHECK_THROWS_AS(symmetric_inverse_monoid(7), CapacityError);
}

TEST_CASE("semilattice times group") {
  auto trivial = semilattice_times_group({{0}}, {{0}});
  CHECK(trivial.order() == 1);
  auto small = semilattice_times_group(chain_semilattice(2), cyclic_group(2));
  CHECK(small.order() == 4);
  CHECK(small.idempotents().size() == 2);
  CHECK(small.describe(1) == "(0,1)");
  // Two minimal elements, so no top.
  OperationTable v{{0, 2, 2}, {2, 1, 2}, {2, 2, 2}};
  CHECK_THROWS_AS(semilattice_times_group(v, cyclic_group(2)), PreconditionError);
  OperationTable not_group{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(semilattice_times_group(chain_semilattice(2), not_group),
                  PreconditionError);
}

TEST_CASE("restriction maps of E x G are isometries") {
  auto ex = build_example("chain3xZ3");
  const auto& p = ex.action->presheaf();
  CHECK(check_restriction_isometries(p).empty());
  CHECK(validate_presheaf(p).empty());
  for (BaseRef e = 0; e < p.base_size(); ++e) CHECK(p.fiber(e).size() == 3);
}

TEST_CASE("every bundled example validates") {
  for (const auto& spec : example_catalog()) {
    if (spec.params.size() == 1 && spec.params[0] > 4) continue;  // I5, I6 below
    CAPTURE(spec.name);
    auto b = build_example(spec.name);
    CHECK(b.monoid->validate().empty());
    CHECK(is_quasi_generating(*b.monoid, b.quasi_generators));
    CHECK(b.action.has_value() == spec.has_action);
    if (b.action) CHECK(validate_action(*b.action).empty());
  }
  CHECK_THROWS_AS(build_example("nope"), PreconditionError);
}

TEST_CASE("larger symmetric examples build without an action") {
  auto b = build_example("sym5");
  CHECK(b.monoid->order() == 1546);
  CHECK_FALSE(b.action.has_value());
  CHECK(b.generator_images->size() == 11);
}
