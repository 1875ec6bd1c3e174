#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "invgeo/action.hpp"
#include "invgeo/cayley.hpp"
#include "invgeo/errors.hpp"
#include "invgeo/examples.hpp"
#include "invgeo/geometry.hpp"
#include "invgeo/io.hpp"
#include "invgeo/monoid.hpp"

namespace py = pybind11;
using namespace invgeo;

namespace {

// Infinite distances become None.
py::object to_py(Distance d) {
  if (d.is_infinite()) return py::none();
  return py::int_(d.value());
}

py::list to_py(const ExtendedMetric& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.size(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

ExtendedMetric metric_of(const std::vector<std::vector<py::object>>& rows) {
  ExtendedMetric m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw SizeMismatchError("distance matrix is not square");
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& v = rows[i][j];
      m.set(i, j, v.is_none() ? Distance::infinite()
                              : Distance(v.cast<std::uint32_t>()));
    }
  }
  return m;
}

py::dict to_py(const ValidationReport& r) {
  py::dict out;
  for (const auto& [rule, n] : r.totals()) out[py::str(rule)] = n;
  return out;
}

py::dict to_py(const PredicateResult& p) {
  py::dict out;
  out["name"] = p.name;
  out["pass"] = p.pass;
  out["witness"] = p.witness;
  out["constants"] = p.constants;
  return out;
}

py::tuple to_py(const Rational& r) { return py::make_tuple(r.num(), r.den()); }

py::dict to_py(const QiReport& q) {
  py::dict out;
  out["multiplicative"] = to_py(q.multiplicative);
  out["additive"] = to_py(q.additive);
  out["coarse_radius"] = to_py(q.coarse_radius);
  out["components_correspond"] = q.components_correspond;
  out["order_preserving"] = q.order_preserving;
  return out;
}

std::shared_ptr<const InverseMonoid> shared(const InverseMonoid& m) {
  return std::make_shared<const InverseMonoid>(m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite inverse monoids, metric presheaves and their geometry.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SizeMismatchError>(m, "SizeMismatchError", base);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  auto validation =
      py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", validation);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", validation);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<PartialBijection>(m, "PartialBijection")
      .def(py::init([](const std::vector<std::optional<std::uint32_t>>& img) {
             std::vector<std::uint32_t> raw;
             for (auto v : img) raw.push_back(v ? *v : PartialBijection::kUndefined);
             return PartialBijection(std::move(raw));
           }),
           py::arg("image"))
      .def_property_readonly("image",
                             [](const PartialBijection& f) {
                               py::list out;
                               for (std::size_t x = 0; x < f.ground_size(); ++x)
                                 out.append(f.defined(x) ? py::object(py::int_(f[x]))
                                                         : py::none());
                               return out;
                             })
      .def_property_readonly("rank", &PartialBijection::rank)
      .def("is_idempotent", &PartialBijection::is_idempotent)
      .def("__mul__", [](const PartialBijection& g, const PartialBijection& f) {
        return compose(g, f);
      })
      .def("inverse", [](const PartialBijection& f) { return invert(f); })
      .def("__eq__", [](const PartialBijection& a, const PartialBijection& b) {
        return a == b;
      })
      .def("__hash__", [](const PartialBijection& f) {
        return py::hash(py::str(f.to_string()));
      })
      .def("__repr__", &PartialBijection::to_string);

  py::class_<InverseMonoid, std::shared_ptr<InverseMonoid>>(m, "InverseMonoid")
      .def_static(
          "generate",
          [](std::size_t n, const std::vector<PartialBijection>& gens,
             std::size_t cap) {
            GenerateOptions opt;
            opt.element_cap = cap;
            return InverseMonoid::generate(n, gens, opt);
          },
          py::arg("ground_size"), py::arg("generators"),
          py::arg("element_cap") = 100'000)
      .def_static(
          "from_table",
          [](const std::vector<std::vector<ElementRef>>& product,
             ElementRef identity) {
            return InverseMonoid::from_table(product, identity);
          },
          py::arg("product"), py::arg("identity"))
      .def_static("symmetric", &symmetric_inverse_monoid, py::arg("n"))
      .def_static(
          "load",
          [](const std::string& path) { return io::load_monoid(path); },
          py::arg("path"))
      .def_property_readonly("order", &InverseMonoid::order)
      .def("__len__", &InverseMonoid::order)
      .def_property_readonly("identity", &InverseMonoid::identity)
      .def_property_readonly("idempotents", &InverseMonoid::idempotents)
      .def("product",
           [](const InverseMonoid& s, ElementRef a, ElementRef b) {
             s.check(a);
             s.check(b);
             return s.product(a, b);
           })
      .def("inverse",
           [](const InverseMonoid& s, ElementRef a) {
             s.check(a);
             return s.inverse(a);
           })
      .def("dom",
           [](const InverseMonoid& s, ElementRef a) {
             s.check(a);
             return s.dom(a);
           })
      .def("ran",
           [](const InverseMonoid& s, ElementRef a) {
             s.check(a);
             return s.ran(a);
           })
      .def("is_idempotent",
           [](const InverseMonoid& s, ElementRef a) {
             s.check(a);
             return s.is_idempotent(a);
           })
      .def("natural_leq",
           [](const InverseMonoid& s, ElementRef a, ElementRef b) {
             s.check(a);
             s.check(b);
             return s.natural_leq(a, b);
           })
      .def("l_classes",
           [](const InverseMonoid& s) { return s.l_classes().blocks(); })
      .def("r_classes",
           [](const InverseMonoid& s) { return s.r_classes().blocks(); })
      .def("element",
           [](const InverseMonoid& s, ElementRef a) -> std::optional<PartialBijection> {
             s.check(a);
             if (!s.has_elements()) return std::nullopt;
             return s.element(a);
           })
      .def("find", &InverseMonoid::find)
      .def("describe", &InverseMonoid::describe)
      .def("table_json",
           [](const InverseMonoid& s) {
             return io::format_table_file(io::table_file_of(s));
           })
      .def("__repr__", [](const InverseMonoid& s) {
        return "<InverseMonoid order=" + std::to_string(s.order()) + ">";
      });

  m.def("is_quasi_generating",
        [](const InverseMonoid& s, const std::vector<ElementRef>& gens) {
          return is_quasi_generating(s, gens);
        });
  m.def("schutzenberger_components",
        [](const InverseMonoid& s, const std::vector<ElementRef>& gens) {
          return schutzenberger_components(s, gens).blocks();
        });
  m.def("cayley_metric",
        [](const InverseMonoid& s, const std::vector<ElementRef>& gens) {
          return to_py(cayley_metric(s, gens).metric);
        },
        "Word metric d_M as a nested list; None marks infinite distance.");
  m.def("cayley_dot",
        [](const InverseMonoid& s, const std::vector<ElementRef>& gens) {
          std::ostringstream os;
          DotOptions opt;
          opt.name = "cay";
          write_dot(os, cayley_graph(s, gens), opt);
          return os.str();
        });
  m.def("check_edge_pairing",
        [](const InverseMonoid& s) { return to_py(check_edge_pairing(s)); });
  m.def("validate_cms_metric",
        [](const InverseMonoid& s,
           const std::vector<std::vector<py::object>>& rows) {
          py::list out;
          for (const auto& p : validate_cms_metric(s, metric_of(rows)).predicates())
            out.append(to_py(p));
          return out;
        });
  m.def("qi_constants",
        [](const std::vector<std::uint32_t>& map,
           const std::vector<std::vector<py::object>>& source,
           const std::vector<std::vector<py::object>>& target) {
          return to_py(qi_constants(map, metric_of(source), metric_of(target)));
        });

  py::class_<EtaleAction>(m, "EtaleAction")
      .def_static(
          "cayley",
          [](const InverseMonoid& s, const std::vector<ElementRef>& gens) {
            return cayley_action(shared(s), gens);
          },
          py::arg("monoid"), py::arg("quasi_generators"))
      .def_static(
          "load", [](const std::string& path) { return io::load_action(path); },
          py::arg("path"))
      .def_property_readonly(
          "monoid",
          [](const EtaleAction& a) {
            return std::const_pointer_cast<InverseMonoid>(a.monoid_ptr());
          })
      .def_property_readonly("size",
                             [](const EtaleAction& a) { return a.presheaf().size(); })
      .def_property_readonly("identity_fiber",
                             [](const EtaleAction& a) {
                               auto f = a.identity_fiber();
                               return std::vector<PointRef>(f.begin(), f.end());
                             })
      .def("act",
           [](const EtaleAction& a, PointRef x, ElementRef s) {
             if (x >= a.presheaf().size())
               throw PreconditionError("point out of range", {x});
             a.monoid().check(s);
             return a.act(x, s);
           })
      .def("distance",
           [](const EtaleAction& a, PointRef x, PointRef y) {
             if (x >= a.presheaf().size() || y >= a.presheaf().size())
               throw PreconditionError("point out of range", {x, y});
             return to_py(a.distance(x, y));
           })
      .def("validate",
           [](const EtaleAction& a) {
             return to_py(validate_action(a, kActionLawSweep));
           })
      .def("theta_isometry",
           [](const EtaleAction& a, ElementRef s) {
             return check_theta_isometry(a, s).isometric;
           })
      .def("coboundedness", &coboundedness_constant, py::arg("x1"))
      .def(
          "properness_witness",
          [](const EtaleAction& a, PointRef y1, std::uint32_t radius) {
            auto w = properness_witness(a, y1, radius);
            py::dict out;
            out["cover"] = w.cover;
            out["qualifying"] = w.qualifying;
            out["exact"] = w.exact;
            return out;
          },
          py::arg("y1"), py::arg("radius"))
      .def(
          "milnor_schwarz",
          [](const EtaleAction& a, PointRef x1, std::uint32_t t,
             std::uint64_t seed) {
            auto r = milnor_schwarz(a, x1, t, seed);
            bool bounds_ok = true;
            for (const auto& b : r.bounds)
              bounds_ok = bounds_ok && b.chain_ok && b.reverse_ok && b.vchain_ok;
            py::dict out;
            out["generators"] = r.extraction.generators;
            out["cover"] = r.cover.cover;
            out["generators_covered"] = r.generators_covered;
            out["cover_quasi_generates"] = r.cover_quasi_generates;
            out["qi"] = to_py(r.qi);
            out["bounds_ok"] = bounds_ok;
            return out;
          },
          py::arg("x1"), py::arg("cobounded_radius"),
          py::arg("seed") = kDefaultSeed)
      .def(
          "rips_metric",
          [](const EtaleAction& a, PointRef x1, std::uint32_t radius) {
            return to_py(rips_graph(a, x1, radius).metric);
          },
          py::arg("x1"), py::arg("radius"));

  m.def("example_names", [] {
    std::vector<std::string> out;
    for (const auto& e : example_catalog()) out.push_back(e.name);
    return out;
  });
  m.def(
      "example",
      [](const std::string& name) {
        auto b = build_example(name);
        py::dict out;
        out["monoid"] = std::const_pointer_cast<InverseMonoid>(b.monoid);
        out["quasi_generators"] = b.quasi_generators;
        out["action"] = b.action ? py::cast(*b.action) : py::none();
        return out;
      },
      py::arg("name"));

}
