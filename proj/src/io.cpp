#include "invgeo/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "invgeo/errors.hpp"

namespace invgeo::io {

namespace {

using nlohmann::json;

// Table files store N^2 entries; beyond this order they stop being useful.
constexpr std::size_t kTableFileLimit = 4096;

std::size_t line_at(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

// Line of the first occurrence of "key", or 0 when absent.
std::size_t line_of_key(std::string_view text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

class Doc {
 public:
  explicit Doc(std::string_view text) : text_(text) {
    try {
      root_ = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1), "");
    }
    if (!root_.is_object()) throw ParseError("top level must be an object", 1, "");
  }

  bool has(const std::string& key) const { return root_.contains(key); }

  const json& field(const std::string& key) const {
    auto it = root_.find(key);
    if (it == root_.end()) throw ParseError("missing field", 0, key);
    return *it;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ParseError(what, line_of_key(text_, key), key);
  }

  std::uint64_t uint(const json& v, const std::string& key) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      fail(key, "expected a non-negative integer");
    auto x = v.get<std::uint64_t>();
    if (x >= std::numeric_limits<std::uint32_t>::max()) fail(key, "integer too large");
    return x;
  }
  std::uint64_t uint(const std::string& key) const { return uint(field(key), key); }

  const json& array(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "expected an array");
    return v;
  }
  const json& array(const std::string& key) const { return array(field(key), key); }

  std::vector<std::uint32_t> uint_row(const json& v, const std::string& key,
                                      std::optional<std::size_t> length) const {
    array(v, key);
    if (length && v.size() != *length)
      fail(key, "row has " + std::to_string(v.size()) + " entries, expected " +
                    std::to_string(*length));
    std::vector<std::uint32_t> row;
    row.reserve(v.size());
    for (const auto& x : v) row.push_back(static_cast<std::uint32_t>(uint(x, key)));
    return row;
  }

  std::vector<std::string> strings(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& v : array(key)) {
      if (!v.is_string()) fail(key, "expected a string");
      out.push_back(v.get<std::string>());
    }
    return out;
  }

  std::string string(const std::string& key) const {
    const auto& v = field(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

 private:
  std::string_view text_;
  json root_;
};

std::string row_text(std::span<const std::uint32_t> row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(row[i]);
  }
  return s + "]";
}

std::string image_text(const PartialBijection& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.ground_size(); ++i) {
    if (i) s += ",";
    s += f.defined(i) ? std::to_string(f[i]) : "null";
  }
  return s + "]";
}

std::string quoted(const std::string& s) { return json(s).dump(); }

// Writes `"key": [` + rows one per line + `]`.
template <class Rows, class Fn>
void emit_rows(std::ostringstream& os, const std::string& key, const Rows& rows,
               Fn fn, bool last) {
  os << "  " << quoted(key) << ": [";
  if (rows.empty()) {
    os << "]";
  } else {
    os << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      os << "    " << fn(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "  ]";
  }
  os << (last ? "\n" : ",\n");
}

PartialBijection image_of(const Doc& doc, const json& v, std::size_t n,
                          const std::string& key) {
  doc.array(v, key);
  if (v.size() != n)
    doc.fail(key, "image array has " + std::to_string(v.size()) +
                      " entries, expected " + std::to_string(n));
  std::vector<std::uint32_t> image;
  for (const auto& x : v)
    image.push_back(x.is_null() ? PartialBijection::kUndefined
                                : static_cast<std::uint32_t>(doc.uint(x, key)));
  try {
    return PartialBijection(std::move(image));
  } catch (const ValidationError& e) {
    doc.fail(key, e.what());
  }
}

}  // namespace

GeneratorFile parse_generator_file(std::string_view text) {
  Doc doc(text);
  GeneratorFile out;
  out.ground_size = doc.uint("ground_size");
  for (const auto& g : doc.array("generators"))
    out.generators.push_back(image_of(doc, g, out.ground_size, "generators"));
  return out;
}

std::string format_generator_file(const GeneratorFile& file) {
  std::ostringstream os;
  os << "{\n  \"ground_size\": " << file.ground_size << ",\n";
  emit_rows(os, "generators", file.generators, image_text, true);
  os << "}\n";
  return os.str();
}

TableFile parse_table_file(std::string_view text) {
  Doc doc(text);
  TableFile out;
  const auto n = doc.uint("order");
  out.identity = static_cast<ElementRef>(doc.uint("identity"));
  const auto& rows = doc.array("product");
  if (rows.size() != n)
    doc.fail("product", "expected " + std::to_string(n) + " rows");
  for (const auto& r : rows) out.product.push_back(doc.uint_row(r, "product", n));
  if (doc.has("elements")) {
    const auto& elems = doc.array("elements");
    if (elems.size() != n) doc.fail("elements", "expected one image per element");
    std::size_t ground = elems.empty() ? 0 : doc.array(elems[0], "elements").size();
    for (const auto& e : elems) out.elements.push_back(image_of(doc, e, ground, "elements"));
  }
  if (doc.has("labels")) {
    out.labels = doc.strings("labels");
    if (out.labels.size() != n) doc.fail("labels", "expected one label per element");
  }
  return out;
}

std::string format_table_file(const TableFile& file) {
  std::ostringstream os;
  os << "{\n  \"order\": " << file.order() << ",\n  \"identity\": " << file.identity
     << ",\n";
  const bool has_elements = !file.elements.empty();
  const bool has_labels = !file.labels.empty();
  emit_rows(os, "product", file.product,
            [](const auto& r) { return row_text(r); }, !has_elements && !has_labels);
  if (has_elements) emit_rows(os, "elements", file.elements, image_text, !has_labels);
  if (has_labels) emit_rows(os, "labels", file.labels, quoted, true);
  os << "}\n";
  return os.str();
}

TableFile table_file_of(const InverseMonoid& monoid) {
  const auto n = monoid.order();
  if (n > kTableFileLimit)
    throw CapacityError("table files are limited to " +
                            std::to_string(kTableFileLimit) + " elements",
                        kTableFileLimit);
  TableFile out;
  out.identity = monoid.identity();
  out.product.assign(n, std::vector<ElementRef>(n));
  for (ElementRef a = 0; a < n; ++a)
    for (ElementRef b = 0; b < n; ++b) out.product[a][b] = monoid.product(a, b);
  if (monoid.has_elements())
    for (ElementRef s = 0; s < n; ++s) out.elements.push_back(monoid.element(s));
  if (monoid.has_labels())
    for (ElementRef s = 0; s < n; ++s) out.labels.push_back(monoid.describe(s));
  return out;
}

InverseMonoid monoid_of(const TableFile& file, const TableOptions& options) {
  return InverseMonoid::from_table(file.product, file.identity, options,
                                   file.elements, file.labels);
}

PresheafData parse_presheaf_file(std::string_view text) {
  Doc doc(text);
  PresheafData out;
  out.labels = doc.strings("carrier");
  const auto n = out.labels.size();
  out.base.elements = doc.uint_row(doc.field("base"), "base", std::nullopt);
  const auto k = out.base.elements.size();
  const auto& meet = doc.array("meet");
  if (meet.size() != k) doc.fail("meet", "expected one row per base element");
  for (const auto& r : meet) {
    auto row = doc.uint_row(r, "meet", k);
    out.base.meet.insert(out.base.meet.end(), row.begin(), row.end());
  }
  out.proj = doc.uint_row(doc.field("proj"), "proj", n);
  const auto& restrict = doc.array("restrict");
  if (restrict.size() != n) doc.fail("restrict", "expected one row per point");
  for (const auto& r : restrict) {
    auto row = doc.uint_row(r, "restrict", k);
    out.restrict.insert(out.restrict.end(), row.begin(), row.end());
  }
  const auto& fibers = doc.array("fibers");
  if (fibers.size() != k) doc.fail("fibers", "expected one edge list per base element");
  for (const auto& f : fibers) {
    auto& edges = out.fiber_edges.emplace_back();
    for (const auto& e : doc.array(f, "fibers")) {
      auto pair = doc.uint_row(e, "fibers", 2);
      edges.emplace_back(pair[0], pair[1]);
    }
  }
  return out;
}

std::string format_presheaf_file(const PresheafData& data) {
  const auto k = data.base.size();
  const auto n = data.proj.size();
  std::ostringstream os;
  os << "{\n";
  emit_rows(os, "carrier", data.labels, quoted, false);
  os << "  \"base\": " << row_text(data.base.elements) << ",\n";
  std::vector<std::span<const std::uint32_t>> meet, restrict;
  for (std::size_t a = 0; a < k; ++a) meet.emplace_back(&data.base.meet[a * k], k);
  for (std::size_t x = 0; x < n; ++x) restrict.emplace_back(&data.restrict[x * k], k);
  emit_rows(os, "meet", meet, row_text, false);
  os << "  \"proj\": " << row_text(data.proj) << ",\n";
  emit_rows(os, "restrict", restrict, row_text, false);
  emit_rows(os, "fibers", data.fiber_edges, [](const auto& edges) {
    std::string s = "[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) s += ",";
      s += "[" + std::to_string(edges[i].first) + "," +
           std::to_string(edges[i].second) + "]";
    }
    return s + "]";
  }, true);
  os << "}\n";
  return os.str();
}

ActionFile parse_action_file(std::string_view text) {
  Doc doc(text);
  ActionFile out;
  out.monoid = doc.string("monoid");
  out.presheaf = doc.string("presheaf");
  const auto& rows = doc.array("act");
  std::optional<std::size_t> width;
  for (const auto& r : rows) {
    out.act.push_back(doc.uint_row(r, "act", width));
    width = out.act.back().size();
  }
  return out;
}

std::string format_action_file(const ActionFile& file) {
  std::ostringstream os;
  os << "{\n  \"monoid\": " << quoted(file.monoid)
     << ",\n  \"presheaf\": " << quoted(file.presheaf) << ",\n";
  emit_rows(os, "act", file.act, [](const auto& r) { return row_text(r); }, true);
  os << "}\n";
  return os.str();
}

ActionFile action_file_of(const EtaleAction& action, std::string monoid_path,
                          std::string presheaf_path) {
  ActionFile out{std::move(monoid_path), std::move(presheaf_path), {}};
  const auto n = action.monoid().order();
  const auto& table = action.table();
  for (std::size_t x = 0; x < action.presheaf().size(); ++x)
    out.act.emplace_back(table.begin() + x * n, table.begin() + (x + 1) * n);
  return out;
}

ExtendedMetric parse_matrix_file(std::string_view text) {
  Doc doc(text);
  const auto n = doc.uint("size");
  const auto& rows = doc.array("dist");
  if (rows.size() != n) doc.fail("dist", "expected " + std::to_string(n) + " rows");
  ExtendedMetric metric(n);
  std::vector<Distance> seen(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc.array(rows[i], "dist");
    if (row.size() != n) doc.fail("dist", "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      seen[i * n + j] = row[j].is_null()
                            ? Distance::infinite()
                            : Distance(static_cast<std::uint32_t>(doc.uint(row[j], "dist")));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i * n + i] != Distance(0)) doc.fail("dist", "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seen[i * n + j] != seen[j * n + i]) doc.fail("dist", "matrix is not symmetric");
      metric.set(i, j, seen[i * n + j]);
    }
  }
  return metric;
}

std::string format_matrix_file(const ExtendedMetric& metric) {
  const auto n = metric.size();
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "[";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) s += ",";
      auto d = metric(i, j);
      s += d.is_finite() ? std::to_string(d.value()) : "null";
    }
    rows.push_back(s + "]");
  }
  std::ostringstream os;
  os << "{\n  \"size\": " << n << ",\n";
  emit_rows(os, "dist", rows, [](const std::string& r) { return r; }, true);
  os << "}\n";
  return os.str();
}

std::string format_metric_grid(const ExtendedMetric& metric,
                               const std::vector<std::string>& labels) {
  auto name = [&](std::uint32_t i) {
    return i < labels.size() ? labels[i] : std::to_string(i);
  };
  std::ostringstream os;
  const auto parts = metric.components();
  for (std::size_t c = 0; c < parts.block_count(); ++c) {
    const auto& block = parts.blocks()[c];
    std::size_t width = 1;
    for (auto i : block) {
      width = std::max(width, name(i).size());
      for (auto j : block) width = std::max(width, metric(i, j).to_string().size());
    }
    auto cell = [&](const std::string& s) {
      return std::string(width - s.size() + 1, ' ') + s;
    };
    os << "component " << c << " (" << block.size() << " points)\n";
    os << cell("");
    for (auto j : block) os << cell(name(j));
    os << "\n";
    for (auto i : block) {
      os << cell(name(i));
      for (auto j : block) os << cell(metric(i, j).to_string());
      os << "\n";
    }
    if (c + 1 < parts.block_count()) os << "\n";
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

InverseMonoid load_monoid(const std::filesystem::path& path,
                          const TableOptions& table,
                          const GenerateOptions& generate) {
  auto text = read_file(path);
  Doc doc(text);
  if (doc.has("product")) return monoid_of(parse_table_file(text), table);
  if (doc.has("generators")) {
    auto file = parse_generator_file(text);
    return InverseMonoid::generate(file.ground_size, file.generators, generate);
  }
  throw ParseError("neither a table file nor a generator file", 1, "product");
}

EtaleAction load_action(const std::filesystem::path& path,
                        const TableOptions& table) {
  auto file = parse_action_file(read_file(path));
  auto dir = path.parent_path();
  auto monoid = std::make_shared<const InverseMonoid>(
      load_monoid(dir / file.monoid, table));
  auto presheaf = std::make_shared<const MetricPresheaf>(
      parse_presheaf_file(read_file(dir / file.presheaf)));
  const auto n = monoid->order();
  std::vector<PointRef> act;
  act.reserve(file.act.size() * n);
  for (std::size_t x = 0; x < file.act.size(); ++x) {
    if (file.act[x].size() != n)
      throw ParseError("act row " + std::to_string(x) + " needs one entry per element",
                       0, "act");
    act.insert(act.end(), file.act[x].begin(), file.act[x].end());
  }
  if (file.act.size() != presheaf->size())
    throw ParseError("act needs one row per point", 0, "act");
  return EtaleAction(std::move(monoid), std::move(presheaf), std::move(act));
}

}  // namespace invgeo::io
