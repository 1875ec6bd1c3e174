#ifndef INVGEO_EXAMPLES_HPP
#define INVGEO_EXAMPLES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invgeo/action.hpp"
#include "invgeo/monoid.hpp"
#include "invgeo/partial_bijection.hpp"

namespace invgeo {

using OperationTable = std::vector<std::vector<std::uint32_t>>;

// All transpositions of {0..n-1} plus the identity on {0..n-2}.
std::vector<PartialBijection> symmetric_inverse_generators(std::size_t n);

// I_n for 1 <= n <= 6; throws CapacityError otherwise.
InverseMonoid symmetric_inverse_monoid(std::size_t n);

// Chain 0 > 1 > ... > k-1; meet is the larger index, 0 is the top.
OperationTable chain_semilattice(std::size_t k);
// Z/n under addition.
OperationTable cyclic_group(std::size_t n);

// E x G with (e,g)(f,h) = (ef, gh). Element (e, g) has index e*|G| + g.
// Throws PreconditionError if E is not a semilattice with a top element or
// G is not a group.
InverseMonoid semilattice_times_group(const OperationTable& semilattice,
                                      const OperationTable& group);

struct ExampleSpec {
  std::string name;
  std::string family;  // "symmetric" or "semilattice-times-group"
  std::vector<std::size_t> params;
  std::string description;
  bool has_action;
};

const std::vector<ExampleSpec>& example_catalog();

struct ExampleBundle {
  ExampleSpec spec;
  std::shared_ptr<const InverseMonoid> monoid;
  std::vector<ElementRef> quasi_generators;
  // Present for symmetric examples; what `gen` reads.
  std::optional<std::vector<PartialBijection>> generator_images;
  // Cayley self-action, when the catalog entry has one.
  std::optional<EtaleAction> action;
};

// Throws PreconditionError for an unknown name.
ExampleBundle build_example(const std::string& name);

}  // namespace invgeo

#endif  // INVGEO_EXAMPLES_HPP
