#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bracekit/cli/app.hpp"
#include "bracekit/cli/expr.hpp"
#include "bracekit/structure.hpp"

namespace py = pybind11;
using namespace bracekit;
using cli::json;

namespace {

json to_json(const py::object& o) {
  if (py::isinstance<py::str>(o)) return json(o.cast<std::string>());
  auto dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(o).cast<std::string>());
}

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Elem element(const FiniteGroup& g, const py::object& x) {
  if (py::isinstance<py::int_>(x)) {
    auto i = x.cast<std::size_t>();
    if (i >= g.order()) throw InputError("element index out of range");
    return Elem(i);
  }
  std::string l = x.cast<std::string>();
  for (Elem a = 0; a < g.order(); ++a)
    if (g.label(a) == l) return a;
  throw InputError("no element labelled '" + l + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braces, skew braces and Yang-Baxter solutions on finite groups";

  auto base = py::register_exception<Error>(m, "BracekitError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<VerificationError>(m, "VerificationError", base);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", [](const FiniteGroup& g, py::object a, py::object b) {
        return g.mul(element(g, a), element(g, b));
      })
      .def("inv", [](const FiniteGroup& g, py::object a) { return g.inv(element(g, a)); })
      .def("label", &FiniteGroup::label)
      .def("index", &element)
      .def_property_readonly("labels", [](const FiniteGroup& g) {
        std::vector<std::string> out;
        for (Elem a = 0; a < g.order(); ++a) out.push_back(g.label(a));
        return out;
      })
      .def_property_readonly("table", [](const FiniteGroup& g) {
        return std::vector<Elem>(g.table().begin(), g.table().end());
      })
      .def("is_abelian", [](const FiniteGroup& g) { return is_abelian(g); })
      .def("is_solvable", [](const FiniteGroup& g) { return is_solvable(g); })
      .def("is_nilpotent", [](const FiniteGroup& g) { return is_nilpotent(g); })
      .def("nilpotency_class", [](const FiniteGroup& g) { return nilpotency_class(g); })
      .def("fitting_order", [](const FiniteGroup& g) { return fitting_subgroup(g).order(); })
      .def("automorphism_count", [](const FiniteGroup& g, std::size_t guard) {
        return automorphism_group(g, guard).size();
      }, py::arg("guard") = kAutomorphismGuard)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<bracekit.Group of order " + std::to_string(g.order()) + ">";
      });

  py::class_<Brace>(m, "Brace")
      .def_property_readonly("order", &Brace::order)
      .def_property_readonly("kind", [](const Brace& b) { return to_string(b.kind()); })
      .def_property_readonly("additive", &Brace::additive)
      .def_property_readonly("multiplicative", &Brace::multiplicative)
      .def("add", [](const Brace& b, py::object x, py::object y) {
        return b.add(element(b.multiplicative(), x), element(b.multiplicative(), y));
      })
      .def("mul", [](const Brace& b, py::object x, py::object y) {
        return b.mul(element(b.multiplicative(), x), element(b.multiplicative(), y));
      })
      .def("neg", [](const Brace& b, py::object x) {
        return b.neg(element(b.multiplicative(), x));
      })
      .def("label", &Brace::label)
      .def("eval", [](const Brace& b, const std::string& e) {
        return b.label(cli::evaluate(b, e));
      })
      .def("verify", [](const Brace& b) {
        BraceReport r = verify_brace(b);
        py::dict d;
        d["is_left_brace"] = r.is_left_brace();
        d["is_skew_brace"] = r.is_skew_brace();
        d["additive_commutative"] = r.additive_commutative;
        d["two_sided"] = r.two_sided;
        return d;
      })
      .def("to_dict", [](const Brace& b) { return to_py(cli::brace_to_json(b)); })
      .def("__repr__", [](const Brace& b) {
        return "<bracekit.Brace " + to_string(b.kind()) + " of order " +
               std::to_string(b.order()) + ">";
      });

  m.def("resolve", [](py::object spec, std::size_t max_order) {
    return cli::resolve(to_json(spec), max_order);
  }, py::arg("spec"), py::arg("max_order") = kMaxGroupOrder);

  m.def("build", [](const FiniteGroup& g, const std::string& construction,
                    std::uint64_t seed) {
    return cli::build_brace(g, construction, seed);
  }, py::arg("group"), py::arg("construction") = "main", py::arg("seed") = 0);

  m.def("brace_from_dict", [](py::object doc) {
    return certify(cli::brace_from_json(to_json(doc)));
  });

  m.def("decompose", [](const FiniteGroup& g, std::uint64_t seed) {
    Decomposition d = decompose(g, seed);
    DecompositionReport r = verify_decomposition(d);
    py::dict out;
    std::vector<std::size_t> n, mo;
    for (const Subgroup& s : d.N) n.push_back(s.order());
    for (const Subgroup& s : d.M) mo.push_back(s.order());
    out["k"] = d.k;
    out["N_orders"] = n;
    out["M_orders"] = mo;
    out["ok"] = r.ok();
    out["failures"] = r.failures;
    return out;
  }, py::arg("group"), py::arg("seed") = 0);

  m.def("solution", [](const Brace& b) {
    SetSolution s = b.kind() == BraceKind::left ? solution_from_left_brace(b)
                                                : solution_from_skew_brace(b);
    return to_py(cli::solution_to_json(s));
  });

  m.def("check_ybe", [](py::object doc) {
    SetSolution s = cli::solution_from_json(to_json(doc));
    YbeReport r = check_ybe(s);
    py::dict out;
    out["braid"] = r.braid;
    out["involutive"] = r.involutive;
    out["nondegenerate"] = r.nondegenerate;
    if (r.braid_witness)
      out["braid_witness"] = std::vector<Elem>(r.braid_witness->begin(), r.braid_witness->end());
    return out;
  });

  m.def("search", [](const FiniteGroup& g, std::size_t guard) {
    std::vector<std::vector<Elem>> out;
    for (const Brace& b : search_left_braces(g, guard))
      out.emplace_back(b.additive().table().begin(), b.additive().table().end());
    return out;
  }, py::arg("group"), py::arg("guard") = 8);

  m.def("run", [](const std::string& command, py::object input,
                  const std::string& construction, std::uint64_t seed,
                  std::vector<std::string> evals, std::size_t max_order) {
    cli::Options o;
    o.construction = construction;
    o.seed = seed;
    o.evals = std::move(evals);
    o.max_order = max_order;
    cli::Outcome r = cli::run(command, to_json(input), o);
    return py::make_tuple(to_py(r.report), r.exit_code);
  }, py::arg("command"), py::arg("input"), py::arg("construction") = "main",
     py::arg("seed") = 0, py::arg("evals") = std::vector<std::string>{},
     py::arg("max_order") = kMaxGroupOrder);
}
