#include "invgeo/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "invgeo/action.hpp"
#include "invgeo/cayley.hpp"
#include "invgeo/errors.hpp"
#include "invgeo/examples.hpp"
#include "invgeo/geometry.hpp"
#include "invgeo/io.hpp"
#include "invgeo/presheaf.hpp"

namespace invgeo::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Policies {
  SweepPolicy associativity = kAssociativitySweep;
  SweepPolicy subinvariance = kSubinvarianceSweep;
  SweepPolicy action_law = kActionLawSweep;
};

Policies policies_of(const RunConfig& c) {
  Policies p;
  std::optional<std::size_t> cap = c.cap_exhaustive;
  if (!cap) {
    if (const char* env = std::getenv(kCapEnv); env && *env) {
      try {
        cap = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError(std::string(kCapEnv) + " must be a non-negative integer");
      }
    }
  }
  if (cap) {
    p.associativity.exhaustive_limit = *cap;
    p.subinvariance.exhaustive_limit = *cap;
  }
  p.associativity.seed = p.subinvariance.seed = p.action_law.seed = c.seed;
  return p;
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1)
    throw UsageError(c.subcommand + " needs exactly one --input");
  return c.inputs.front();
}

std::string format_or(const RunConfig& c, std::initializer_list<const char*> allowed) {
  if (c.format.empty()) return *allowed.begin();
  for (const char* f : allowed)
    if (c.format == f) return c.format;
  throw UsageError("--format " + c.format + " is not valid for " + c.subcommand);
}

bool is_action_file(const std::string& path) {
  auto text = io::read_file(path);
  try {
    return nlohmann::json::parse(text).contains("act");
  } catch (const nlohmann::json::exception&) {
    return false;  // the real loader reports the parse error
  }
}

std::vector<ElementRef> generators_or_all(const RunConfig& c, const InverseMonoid& m) {
  if (c.generators) {
    for (auto g : *c.generators)
      if (g >= m.order())
        throw UsageError("generator index " + std::to_string(g) + " out of range");
    return *c.generators;
  }
  std::vector<ElementRef> all(m.order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

PointRef basepoint_of(const RunConfig& c, const EtaleAction& a) {
  if (c.basepoint) {
    if (*c.basepoint >= a.presheaf().size())
      throw UsageError("basepoint out of range");
    return *c.basepoint;
  }
  auto fiber = a.identity_fiber();
  if (fiber.empty()) throw PreconditionError("identity fiber is empty");
  return fiber.front();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <class Range>
std::string describe_all(const InverseMonoid& m, const Range& elems) {
  std::vector<std::string> parts;
  for (auto s : elems) parts.push_back(m.describe(s));
  return "{" + join(parts, ", ") + "}";
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty())
    out << text;
  else
    io::write_file(c.out, text);
}

// ---- gen ----------------------------------------------------------------

int run_gen(const RunConfig& c, std::ostream& out, std::ostream& err) {
  GenerateOptions gen;
  gen.element_cap = c.element_cap;
  auto m = io::load_monoid(single_input(c), {policies_of(c).associativity}, gen);
  emit(c, out, io::format_table_file(io::table_file_of(m)));
  err << "order " << m.order() << ", " << m.idempotents().size()
      << " idempotents\n";
  return kExitPass;
}

// ---- analyze ------------------------------------------------------------

int run_analyze(const RunConfig& c, std::ostream& out) {
  GenerateOptions gen;
  gen.element_cap = c.element_cap;
  auto m = io::load_monoid(single_input(c), {policies_of(c).associativity}, gen);
  const auto n = m.order();
  std::ostringstream os;
  os << "order: " << n << "\n";
  os << "identity: " << m.describe(m.identity()) << "\n";
  os << "idempotents (" << m.idempotents().size()
     << "): " << describe_all(m, m.idempotents()) << "\n";
  auto print_classes = [&](const char* name, const Partition& p) {
    os << name << " (" << p.block_count() << "):\n";
    for (const auto& b : p.blocks()) os << "  " << describe_all(m, b) << "\n";
  };
  print_classes("L-classes", m.l_classes());
  print_classes("R-classes", m.r_classes());

  // Down-sets {e t : e in E(S)} as bitsets; s < t is a cover when nothing
  // lies strictly between, i.e. down(t) & up(s) == {s, t}.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> down(n * words, 0), up(n * words, 0);
  for (ElementRef t = 0; t < n; ++t)
    for (auto e : m.idempotents()) {
      auto s = m.product(e, t);
      down[t * words + s / 64] |= std::uint64_t(1) << (s % 64);
      up[s * words + t / 64] |= std::uint64_t(1) << (t % 64);
    }
  std::vector<std::pair<ElementRef, ElementRef>> covers;
  for (ElementRef t = 0; t < n; ++t)
    for (ElementRef s = 0; s < n; ++s) {
      if (s == t || !((down[t * words + s / 64] >> (s % 64)) & 1)) continue;
      std::size_t between = 0;
      for (std::size_t w = 0; w < words; ++w)
        between += std::popcount(down[t * words + w] & up[s * words + w]);
      if (between == 2) covers.emplace_back(s, t);
    }
  std::sort(covers.begin(), covers.end());
  os << "natural order covers (" << covers.size() << "):\n";
  for (auto [s, t] : covers)
    os << "  " << m.describe(s) << " < " << m.describe(t) << "\n";
  emit(c, out, os.str());
  return kExitPass;
}

// ---- graph / metric -----------------------------------------------------

struct MetricView {
  ExtendedMetric metric;
  std::vector<std::string> labels;
};

int run_graph(const RunConfig& c, std::ostream& out) {
  auto format = format_or(c, {"dot", "matrix"});
  const auto kind = c.kind.empty() ? std::string("cayley") : c.kind;
  std::ostringstream os;
  if (kind == "cayley" || kind == "schutzenberger") {
    auto m = io::load_monoid(single_input(c), {policies_of(c).associativity});
    auto gens = generators_or_all(c, m);
    DotOptions opt;
    opt.vertex_name = [&](std::uint32_t s) { return m.describe(s); };
    opt.edge_label = [&](std::uint32_t g) { return m.describe(g); };
    if (kind == "cayley") {
      if (format == "matrix") {
        os << io::format_matrix_file(cayley_metric(m, gens).metric);
      } else {
        opt.name = "cayley";
        write_dot(os, cayley_graph(m, gens), opt);
      }
    } else {
      auto comps = schutzenberger_components(m, gens);
      auto anchor = c.component.value_or(m.identity());
      if (anchor >= m.order()) throw UsageError("--component out of range");
      const auto& block = comps.blocks()[comps.block_of(anchor)];
      if (format == "matrix") {
        auto d = cayley_metric(m, gens).metric;
        ExtendedMetric sub(block.size());
        for (std::size_t i = 0; i < block.size(); ++i)
          for (std::size_t j = i + 1; j < block.size(); ++j)
            sub.set(i, j, d(block[i], block[j]));
        os << io::format_matrix_file(sub);
      } else {
        std::vector<ElementRef> labels = gens;
        labels.insert(labels.end(), m.idempotents().begin(), m.idempotents().end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        opt.name = "schutzenberger";
        opt.vertices = block;
        write_dot(os, cayley_graph(m, labels), opt);
      }
    }
  } else if (kind == "rips") {
    auto a = io::load_action(single_input(c), {policies_of(c).associativity});
    auto x1 = basepoint_of(c, a);
    auto rips = rips_graph(a, x1, c.radius.value_or(1));
    if (format == "matrix") {
      os << io::format_matrix_file(rips.metric);
    } else {
      DotOptions opt;
      opt.name = "rips";
      opt.directed = false;
      opt.vertex_name = [&](std::uint32_t s) { return a.monoid().describe(s); };
      opt.edge_label = [](std::uint32_t d) { return std::to_string(d); };
      write_dot(os, rips.graph, opt);
      if (!c.out.empty()) {
        fs::path matrix = c.out;
        matrix.replace_extension(".matrix.json");
        io::write_file(matrix, io::format_matrix_file(rips.metric));
      }
    }
  } else {
    throw UsageError("unknown --kind " + kind + " (cayley, schutzenberger, rips)");
  }
  emit(c, out, os.str());
  return kExitPass;
}

MetricView metric_of(const RunConfig& c) {
  const auto kind = c.kind.empty() ? std::string("cayley") : c.kind;
  if (kind == "cayley") {
    auto m = io::load_monoid(single_input(c), {policies_of(c).associativity});
    MetricView v{cayley_metric(m, generators_or_all(c, m)).metric, {}};
    for (ElementRef s = 0; s < m.order(); ++s) v.labels.push_back(m.describe(s));
    return v;
  }
  if (kind == "rips") {
    auto a = io::load_action(single_input(c), {policies_of(c).associativity});
    auto rips = rips_graph(a, basepoint_of(c, a), c.radius.value_or(1));
    MetricView v{std::move(rips.metric), {}};
    for (ElementRef s = 0; s < a.monoid().order(); ++s)
      v.labels.push_back(a.monoid().describe(s));
    return v;
  }
  throw UsageError("unknown --kind " + kind + " (cayley, rips)");
}

int run_metric(const RunConfig& c, std::ostream& out) {
  auto format = format_or(c, {"matrix", "report"});
  auto v = metric_of(c);
  auto grid = io::format_metric_grid(v.metric, v.labels);
  if (format == "report") {
    emit(c, out, grid);
  } else if (c.out.empty()) {
    out << io::format_matrix_file(v.metric);
  } else {
    out << grid;
    io::write_file(c.out, io::format_matrix_file(v.metric));
  }
  return kExitPass;
}

// ---- verify -------------------------------------------------------------

PredicateResult from_report(const std::string& name, const ValidationReport& r) {
  PredicateResult p{name, r.empty(), "", {}};
  if (!r.empty()) {
    const auto& v = r.violations().front();
    std::vector<std::string> w;
    for (auto x : v.witness) w.push_back(std::to_string(x));
    p.witness = v.rule + " (" + join(w, ",") + ")";
    p.constants["violations"] = std::to_string(r.total());
  }
  return p;
}

// Runs fn; a thrown library error turns into a failed predicate.
void guarded(std::vector<PredicateResult>& out, const std::string& name,
             const std::function<void(std::vector<PredicateResult>&)>& fn) {
  try {
    fn(out);
  } catch (const ValidationError& e) {
    out.push_back({name, false, e.what(), {}});
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::vector<PredicateResult> verify_action(const RunConfig& c, const Policies& pol,
                                           const EtaleAction& a) {
  std::vector<PredicateResult> out;
  const auto& m = a.monoid();
  auto x1 = basepoint_of(c, a);
  out.push_back(from_report("monoid-axioms", m.validate(pol.associativity)));
  out.push_back(from_report("action-axioms", validate_action(a, pol.action_law)));

  PredicateResult theta{"theta-isometry", true, "", {}};
  for (ElementRef s = 0; s < m.order() && theta.pass; ++s) {
    auto r = check_theta_isometry(a, s);
    if (!r.isometric) {
      theta.pass = false;
      theta.witness = "s=" + std::to_string(s);
    }
  }
  out.push_back(theta);

  auto t = coboundedness_constant(a, x1);
  PredicateResult cob{"coboundedness", t.has_value(), "", {}};
  cob.constants["x1"] = std::to_string(x1);
  if (t) cob.constants["T"] = std::to_string(*t);
  else cob.witness = "some point lies outside X_1 . S";
  out.push_back(cob);
  if (!t) return out;

  guarded(out, "milnor-schwarz", [&](auto& acc) {
    auto ms = milnor_schwarz(a, x1, *t, c.seed);
    PredicateResult p{"milnor-schwarz", true, "", {}};
    for (const auto& b : ms.bounds)
      if (!b.chain_ok || !b.reverse_ok || !b.vchain_ok) {
        p.pass = false;
        p.witness = "s=" + std::to_string(b.element);
        break;
      }
    p.pass = p.pass && ms.qi.components_correspond &&
             ms.qi.order_preserving.value_or(false);
    p.constants["|G|"] = std::to_string(ms.extraction.generators.size());
    p.constants["|C|"] = std::to_string(ms.cover.cover.size());
    p.constants["cover_exact"] = bool_text(ms.cover.exact);
    p.constants["L"] = ms.qi.multiplicative.to_string();
    p.constants["C"] = ms.qi.additive.to_string();
    p.constants["coarse_radius"] = ms.qi.coarse_radius.to_string();
    p.constants["order_preserving"] = bool_text(ms.qi.order_preserving.value_or(false));
    acc.push_back(p);
  });

  const auto radius = c.radius.value_or(std::max<std::uint32_t>(*t, 1));
  auto rips = rips_graph(a, x1, radius);
  auto f1 = properness_witness(a, x1, radius).cover;
  guarded(out, "rips/cms", [&](auto& acc) {
    auto cms = validate_cms_metric(m, rips.metric, f1, pol.subinvariance);
    for (auto p : cms.predicates()) {
      p.name = "rips/" + p.name;
      p.constants["R"] = std::to_string(radius);
      acc.push_back(p);
    }
  });
  if (radius >= 1) {
    auto b = check_rips_bounds(a, x1, rips);
    PredicateResult p{"rips/bounds", b.ok(), "", {}};
    p.constants["R"] = std::to_string(radius);
    p.constants["R>=T"] = bool_text(radius >= *t);
    p.constants["pairs"] = std::to_string(b.pairs);
    if (!b.ok())
      p.witness = "lower=" + std::to_string(b.lower_violations) +
                  " upper=" + std::to_string(b.upper_violations) +
                  " finiteness=" + std::to_string(b.finiteness_violations);
    out.push_back(p);
  }
  guarded(out, "rips/qi", [&](auto& acc) {
    auto dm = cayley_metric(m, f1).metric;
    std::vector<std::uint32_t> id(m.order());
    std::iota(id.begin(), id.end(), 0);
    auto fwd = qi_constants(id, rips.metric, dm);
    auto bwd = qi_constants(id, dm, rips.metric);
    PredicateResult p{"rips/qi", fwd.components_correspond && bwd.components_correspond,
                      "", {}};
    p.constants["L_forward"] = fwd.multiplicative.to_string();
    p.constants["C_forward"] = fwd.additive.to_string();
    p.constants["L_backward"] = bwd.multiplicative.to_string();
    p.constants["C_backward"] = bwd.additive.to_string();
    acc.push_back(p);
  });
  guarded(out, "rips/quasi-generation", [&](auto& acc) {
    auto q = quasi_generators_from_metric(m, rips.metric, f1);
    PredicateResult p{"rips/quasi-generation", true, "", {}};
    p.constants["|F1|"] = std::to_string(q.generators.size());
    acc.push_back(p);
  });
  return out;
}

std::vector<PredicateResult> verify_monoid(const RunConfig& c, const Policies& pol,
                                           const InverseMonoid& m) {
  std::vector<PredicateResult> out;
  auto gens = generators_or_all(c, m);
  out.push_back(from_report("monoid-axioms", m.validate(pol.associativity)));
  out.push_back(from_report("edge-pairing", check_edge_pairing(m)));
  if (!is_quasi_generating(m, gens)) {
    out.push_back({"quasi-generating", false, "generators do not quasi-generate", {}});
    return out;
  }
  guarded(out, "schutzenberger-components", [&](auto& acc) {
    auto p = schutzenberger_components(m, gens);
    acc.push_back({"schutzenberger-components", true, "",
                   {{"components", std::to_string(p.block_count())}}});
  });
  auto dm = cayley_metric(m, gens).metric;
  PredicateResult idem{"idempotent-edges-redundant",
                       dm == cayley_metric_with_idempotents(m, gens), "", {}};
  out.push_back(idem);
  guarded(out, "cayley/cms", [&](auto& acc) {
    auto cms = validate_cms_metric(m, dm, std::nullopt, pol.subinvariance);
    for (auto p : cms.predicates()) {
      p.name = "cayley/" + p.name;
      acc.push_back(p);
    }
  });
  guarded(out, "cayley/quasi-generation", [&](auto& acc) {
    auto q = quasi_generators_from_metric(m, dm);
    acc.push_back({"cayley/quasi-generation", true, "",
                   {{"|F1|", std::to_string(q.generators.size())}}});
  });
  return out;
}

std::string report_text(const std::string& subject,
                        const std::vector<PredicateResult>& preds) {
  std::ostringstream os;
  bool pass = true;
  os << "verify " << subject << "\n";
  for (const auto& p : preds) {
    pass = pass && p.pass;
    os << (p.pass ? "PASS " : "FAIL ") << p.name;
    for (const auto& [k, v] : p.constants) os << " " << k << "=" << v;
    if (!p.witness.empty()) os << " witness: " << p.witness;
    os << "\n";
  }
  os << (pass ? "all predicates pass" : "verification failed") << "\n";
  return os.str();
}

std::string report_json(const std::string& subject, std::uint64_t seed,
                        const std::vector<PredicateResult>& preds) {
  ordered_json j;
  j["subject"] = subject;
  j["seed"] = seed;
  bool pass = true;
  auto arr = ordered_json::array();
  for (const auto& p : preds) {
    pass = pass && p.pass;
    ordered_json r;
    r["name"] = p.name;
    r["pass"] = p.pass;
    r["witness"] = p.witness;
    r["constants"] = ordered_json::object();
    for (const auto& [k, v] : p.constants) r["constants"][k] = v;
    arr.push_back(r);
  }
  j["pass"] = pass;
  j["predicates"] = arr;
  return j.dump(2) + "\n";
}

int run_verify(const RunConfig& c, std::ostream& out) {
  format_or(c, {"report"});
  const auto& path = single_input(c);
  auto pol = policies_of(c);
  std::vector<PredicateResult> preds;
  if (is_action_file(path)) {
    auto a = io::load_action(path, {pol.associativity});
    preds = verify_action(c, pol, a);
  } else {
    GenerateOptions gen;
    gen.element_cap = c.element_cap;
    auto m = io::load_monoid(path, {pol.associativity}, gen);
    preds = verify_monoid(c, pol, m);
  }
  auto subject = fs::path(path).filename().string();
  auto text = report_text(subject, preds);
  out << text;
  if (!c.out.empty()) {
    io::write_file(c.out, report_json(subject, c.seed, preds));
    fs::path txt = c.out;
    txt.replace_extension(".txt");
    io::write_file(txt, text);
  }
  bool pass = std::all_of(preds.begin(), preds.end(), [](const auto& p) { return p.pass; });
  return pass ? kExitPass : kExitFail;
}

// ---- qi -----------------------------------------------------------------

std::vector<std::uint32_t> parse_map_file(const std::string& path) {
  auto text = io::read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0, "");
  }
  if (!j.contains("map") || !j["map"].is_array())
    throw ParseError("expected an array", 0, "map");
  std::vector<std::uint32_t> map;
  for (const auto& v : j["map"]) {
    if (!v.is_number_unsigned()) throw ParseError("expected a non-negative integer", 0, "map");
    map.push_back(v.get<std::uint32_t>());
  }
  return map;
}

void qi_lines(std::ostream& os, const char* name, const QiReport& r) {
  os << name << ": L=" << r.multiplicative.to_string()
     << " C=" << r.additive.to_string()
     << " coarse_radius=" << r.coarse_radius.to_string()
     << " components_correspond=" << bool_text(r.components_correspond) << "\n";
}

int run_qi(const RunConfig& c, std::ostream& out) {
  format_or(c, {"report"});
  if (c.inputs.size() != 2 && c.inputs.size() != 3)
    throw UsageError("qi needs --input SOURCE --input TARGET [--input MAP]");
  auto source = io::parse_matrix_file(io::read_file(c.inputs[0]));
  auto target = io::parse_matrix_file(io::read_file(c.inputs[1]));
  std::vector<std::uint32_t> map;
  if (c.inputs.size() == 3) {
    map = parse_map_file(c.inputs[2]);
  } else {
    if (source.size() != target.size())
      throw UsageError("identity map needs metrics of equal size");
    map.resize(source.size());
    std::iota(map.begin(), map.end(), 0);
  }
  auto fwd = qi_constants(map, source, target);
  std::optional<QiReport> bwd;
  std::vector<std::uint32_t> inverse(target.size(), 0);
  bool bijective = map.size() == target.size();
  std::vector<bool> hit(target.size(), false);
  for (std::size_t a = 0; a < map.size() && bijective; ++a) {
    if (map[a] >= target.size() || hit[map[a]]) bijective = false;
    else hit[map[a]] = true, inverse[map[a]] = static_cast<std::uint32_t>(a);
  }
  if (bijective) bwd = qi_constants(inverse, target, source);

  std::ostringstream os;
  qi_lines(os, "forward", fwd);
  if (bwd) qi_lines(os, "backward", *bwd);
  out << os.str();
  if (!c.out.empty()) {
    ordered_json j;
    auto rec = [](const QiReport& r) {
      ordered_json x;
      x["multiplicative"] = r.multiplicative.to_string();
      x["additive"] = r.additive.to_string();
      x["coarse_radius"] = r.coarse_radius.to_string();
      x["components_correspond"] = r.components_correspond;
      return x;
    };
    j["forward"] = rec(fwd);
    if (bwd) j["backward"] = rec(*bwd);
    io::write_file(c.out, j.dump(2) + "\n");
  }
  bool ok = fwd.components_correspond && (!bwd || bwd->components_correspond);
  return ok ? kExitPass : kExitFail;
}

// ---- examples -----------------------------------------------------------

int run_examples(const RunConfig& c, std::ostream& out) {
  if (c.example_action == "list" || c.example_action.empty()) {
    for (const auto& s : example_catalog())
      out << s.name << "\t" << s.family << "\t" << s.description
          << (s.has_action ? "\t[action]" : "") << "\n";
    return kExitPass;
  }
  if (c.example_action != "emit")
    throw UsageError("examples takes 'list' or 'emit <name>'");
  if (c.example_name.empty()) throw UsageError("examples emit needs a name");
  auto bundle = build_example(c.example_name);
  fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
  const auto& name = c.example_name;
  auto write = [&](const std::string& file, const std::string& text) {
    io::write_file(dir / file, text);
    out << (dir / file).string() << "\n";
  };
  write(name + ".monoid.json", io::format_table_file(io::table_file_of(*bundle.monoid)));
  if (bundle.generator_images)
    write(name + ".generators.json",
          io::format_generator_file({bundle.monoid->ground_size(), *bundle.generator_images}));
  if (bundle.action) {
    write(name + ".presheaf.json", io::format_presheaf_file(bundle.action->presheaf().data()));
    write(name + ".action.json",
          io::format_action_file(io::action_file_of(
              *bundle.action, name + ".monoid.json", name + ".presheaf.json")));
  }
  return kExitPass;
}

}  // namespace

std::vector<std::uint32_t> parse_index_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("not a non-negative integer: '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "gen") return run_gen(c, out, err);
    if (c.subcommand == "analyze") return run_analyze(c, out);
    if (c.subcommand == "graph") return run_graph(c, out);
    if (c.subcommand == "metric") return run_metric(c, out);
    if (c.subcommand == "verify") return run_verify(c, out);
    if (c.subcommand == "qi") return run_qi(c, out);
    if (c.subcommand == "examples") return run_examples(c, out);
    throw UsageError("unknown subcommand '" + c.subcommand + "'");
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace invgeo::cli
