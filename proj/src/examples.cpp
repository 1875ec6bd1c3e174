#include "invgeo/examples.hpp"

#include <algorithm>

#include "invgeo/errors.hpp"

namespace invgeo {

std::vector<PartialBijection> symmetric_inverse_generators(std::size_t n) {
  std::vector<PartialBijection> gens;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      gens.push_back(PartialBijection::transposition(n, a, b));
  std::vector<std::uint32_t> points;
  for (std::uint32_t x = 0; x + 1 < n; ++x) points.push_back(x);
  gens.push_back(PartialBijection::partial_identity(n, points));
  return gens;
}

InverseMonoid symmetric_inverse_monoid(std::size_t n) {
  if (n < 1 || n > 6)
    throw CapacityError("symmetric inverse monoid supported for 1 <= n <= 6", 6);
  auto gens = symmetric_inverse_generators(n);
  return InverseMonoid::generate(n, gens);
}

OperationTable chain_semilattice(std::size_t k) {
  OperationTable t(k, std::vector<std::uint32_t>(k));
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b) t[a][b] = std::max(a, b);
  return t;
}

OperationTable cyclic_group(std::size_t n) {
  OperationTable t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      t[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return t;
}

namespace {

void check_square(const OperationTable& t, const char* what) {
  if (t.empty()) throw PreconditionError(std::string(what) + " is empty");
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a].size() != t.size())
      throw PreconditionError(std::string(what) + " table is not square", {a});
    for (auto v : t[a])
      if (v >= t.size())
        throw PreconditionError(std::string(what) + " entry out of range", {a, v});
  }
}

bool associative(const OperationTable& t) {
  const auto n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

}  // namespace

InverseMonoid semilattice_times_group(const OperationTable& e,
                                      const OperationTable& g) {
  check_square(e, "semilattice");
  check_square(g, "group");
  const auto ne = e.size();
  const auto ng = g.size();
  for (std::size_t a = 0; a < ne; ++a) {
    if (e[a][a] != a) throw PreconditionError("semilattice meet is not idempotent", {a});
    for (std::size_t b = 0; b < ne; ++b)
      if (e[a][b] != e[b][a])
        throw PreconditionError("semilattice meet is not commutative", {a, b});
  }
  if (!associative(e)) throw PreconditionError("semilattice meet is not associative");
  std::optional<std::uint32_t> top;
  for (std::uint32_t t = 0; t < ne && !top; ++t) {
    bool is_top = true;
    for (std::size_t a = 0; a < ne; ++a) is_top = is_top && e[t][a] == a;
    if (is_top) top = t;
  }
  if (!top) throw PreconditionError("semilattice has no top element");

  if (!associative(g)) throw PreconditionError("group operation is not associative");
  std::optional<std::uint32_t> unit;
  for (std::uint32_t u = 0; u < ng && !unit; ++u) {
    bool ok = true;
    for (std::size_t a = 0; a < ng; ++a) ok = ok && g[u][a] == a && g[a][u] == a;
    if (ok) unit = u;
  }
  if (!unit) throw PreconditionError("group has no identity");
  for (std::size_t a = 0; a < ng; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < ng; ++b) has_inverse = has_inverse || g[a][b] == *unit;
    if (!has_inverse) throw PreconditionError("group element has no inverse", {a});
  }

  const auto n = ne * ng;
  std::vector<std::vector<ElementRef>> product(n, std::vector<ElementRef>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t x = 0; x < ng; ++x)
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(x) + ")");
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t x = 0; x < ng; ++x)
      for (std::size_t b = 0; b < ne; ++b)
        for (std::size_t y = 0; y < ng; ++y)
          product[a * ng + x][b * ng + y] =
              static_cast<ElementRef>(e[a][b] * ng + g[x][y]);
  return InverseMonoid::from_table(product,
                                   static_cast<ElementRef>(*top * ng + *unit),
                                   {}, {}, std::move(labels));
}

const std::vector<ExampleSpec>& example_catalog() {
  static const std::vector<ExampleSpec> catalog = [] {
    std::vector<ExampleSpec> c;
    for (std::size_t n = 1; n <= 6; ++n)
      c.push_back({"sym" + std::to_string(n), "symmetric", {n},
                   "symmetric inverse monoid I_" + std::to_string(n) +
                       ", M = transpositions",
                   n <= 4});
    c.push_back({"chain2xZ2", "semilattice-times-group", {2, 2},
                 "2-chain x Z/2, M = {(top,1)}", true});
    c.push_back({"chain3xZ3", "semilattice-times-group", {3, 3},
                 "3-chain x Z/3, M = {(top,1)}", true});
    return c;
  }();
  return catalog;
}

ExampleBundle build_example(const std::string& name) {
  const auto& catalog = example_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(),
                         [&](const auto& s) { return s.name == name; });
  if (it == catalog.end()) throw PreconditionError("unknown example: " + name);
  ExampleBundle out{*it, nullptr, {}, std::nullopt, std::nullopt};
  if (it->family == "symmetric") {
    const auto n = it->params[0];
    auto gens = symmetric_inverse_generators(n);
    auto monoid = std::make_shared<const InverseMonoid>(symmetric_inverse_monoid(n));
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        out.quasi_generators.push_back(
            *monoid->find(PartialBijection::transposition(n, a, b)));
    out.generator_images = std::move(gens);
    out.monoid = std::move(monoid);
  } else {
    const auto k = it->params[0];
    const auto order = it->params[1];
    out.monoid = std::make_shared<const InverseMonoid>(
        semilattice_times_group(chain_semilattice(k), cyclic_group(order)));
    out.quasi_generators = {1};  // (top, 1)
  }
  if (it->has_action) out.action = cayley_action(out.monoid, out.quasi_generators);
  return out;
}

}  // namespace invgeo
