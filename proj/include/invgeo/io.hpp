#ifndef INVGEO_IO_HPP
#define INVGEO_IO_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "invgeo/action.hpp"
#include "invgeo/metric.hpp"
#include "invgeo/monoid.hpp"
#include "invgeo/partial_bijection.hpp"
#include "invgeo/presheaf.hpp"

// JSON file formats. Every format_* function emits a canonical layout, and
// parse_* followed by format_* reproduces canonical text byte for byte.
// Parse failures throw ParseError naming the line and/or field.
namespace invgeo::io {

struct GeneratorFile {
  std::size_t ground_size = 0;
  std::vector<PartialBijection> generators;  // undefined points are null
};

struct TableFile {
  std::vector<std::vector<ElementRef>> product;
  ElementRef identity = 0;
  std::vector<PartialBijection> elements;  // optional
  std::vector<std::string> labels;         // optional
  std::size_t order() const { return product.size(); }
};

struct ActionFile {
  std::string monoid;    // path, relative to the action file
  std::string presheaf;  // path, relative to the action file
  std::vector<std::vector<PointRef>> act;
};

GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(const GeneratorFile& file);

TableFile parse_table_file(std::string_view text);
std::string format_table_file(const TableFile& file);
TableFile table_file_of(const InverseMonoid& monoid);
InverseMonoid monoid_of(const TableFile& file, const TableOptions& options = {});

PresheafData parse_presheaf_file(std::string_view text);
std::string format_presheaf_file(const PresheafData& data);

ActionFile parse_action_file(std::string_view text);
std::string format_action_file(const ActionFile& file);
ActionFile action_file_of(const EtaleAction& action, std::string monoid_path,
                          std::string presheaf_path);

// Metric as {"size": n, "dist": [[...]]} with INFINITE as null.
ExtendedMetric parse_matrix_file(std::string_view text);
std::string format_matrix_file(const ExtendedMetric& metric);

// Fixed-width grid of each finite-distance component.
std::string format_metric_grid(const ExtendedMetric& metric,
                               const std::vector<std::string>& labels);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// Reads either a generator file or a table file.
InverseMonoid load_monoid(const std::filesystem::path& path,
                          const TableOptions& table = {},
                          const GenerateOptions& generate = {});
// Loads an action file together with the monoid and presheaf it names.
EtaleAction load_action(const std::filesystem::path& path,
                        const TableOptions& table = {});

}  // namespace invgeo::io

#endif  // INVGEO_IO_HPP
