#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindswap/infinite_machine.hpp"
#include "mindswap/machine_m.hpp"
#include "mindswap/optimal_three.hpp"
#include "mindswap/plan_document.hpp"
#include "mindswap/plan_oracle.hpp"

namespace py = pybind11;
using namespace mindswap;

namespace {

std::vector<std::string> labels(std::span<const Element> els) {
  std::vector<std::string> out;
  for (const auto& e : els) out.push_back(e.label());
  return out;
}

py::dict describe(const std::vector<TailMap>& swaps, const TailMap& target, std::uint64_t horizon) {
  const auto report = verify_infinite_plan(target, swaps);
  py::list steps;
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    py::dict s;
    s["kind"] = to_string(report.kinds[i]);
    s["cycle"] = swaps[i].render(horizon);
    s["table"] = swaps[i].step_table(horizon);
    s["domain"] = report.domains[i].render();
    s["participants"] = report.participants[i].render();
    steps.append(s);
  }
  py::dict out;
  out["steps"] = steps;
  out["composite"] = report.composite.render(horizon);
  out["expected"] = target.render(horizon);
  out["composition_ok"] = report.composition_ok;
  out["participants_distinct"] = report.participants_distinct;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mind-swap machine solvers and verifiers";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<UnsolvableError> unsolvable(m, "UnsolvableError", PyExc_ValueError);
  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<UnsupportedComposition> unsupported(m, "UnsupportedComposition", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const UnsolvableError& e) {
      unsolvable(e.what());
    } catch (const BudgetExceeded& e) {
      budget(e.what());
    } catch (const UnsupportedComposition& e) {
      unsupported(e.what());
    }
  });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text) { return parse_cycles(text); }), py::arg("text") = "")
      .def_static("identity", &Permutation::identity)
      .def("compose", [](const Permutation& p, const Permutation& q) { return compose(p, q); })
      .def("__mul__", [](const Permutation& p, const Permutation& q) { return compose(p, q); })
      .def("inverse", &Permutation::inverse)
      .def("apply", [](const Permutation& p, const std::string& label) { return p.apply(parse_element(label)).label(); })
      .def("__call__", [](const Permutation& p, const std::string& label) { return p.apply(parse_element(label)).label(); })
      .def_property_readonly("parity", [](const Permutation& p) { return p.parity() == Parity::Even ? "even" : "odd"; })
      .def_property_readonly("support", [](const Permutation& p) { return labels(p.support()); })
      .def_property_readonly("cycles",
                             [](const Permutation& p) {
                               std::vector<std::vector<std::string>> out;
                               for (const auto& c : p.cycles()) out.push_back(labels(c.elements()));
                               return out;
                             })
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
      .def("__str__", &Permutation::format)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.format() + "')"; });

  m.def(
      "solve_document",
      [](const std::string& target, int machine_size, const std::string& solver) {
        return to_json(solve_document(parse_cycles(target), machine_size, solver));
      },
      py::arg("target"), py::arg("m") = 2, py::arg("solver") = "auto",
      "Plan document (JSON text) for the target, with its verification block.");

  m.def(
      "verify_document",
      [](const std::string& document, const std::string& target) {
        auto doc = parse_document(document);
        if (!target.empty()) doc.target = parse_cycles(target);
        attach_verification(doc);
        return to_json(doc);
      },
      py::arg("document"), py::arg("target") = "",
      "Re-verifies a plan document and returns it with a fresh verification block.");

  m.def(
      "search_min_plan",
      [](const std::string& target, int machine_size, std::size_t d, std::size_t max_steps,
         std::uint64_t node_budget) -> std::optional<std::vector<std::string>> {
        py::gil_scoped_release release;
        const auto plan =
            search_min_plan(parse_cycles(target), RuleSet::with_outsiders(machine_size, d), max_steps, node_budget);
        if (!plan) return std::nullopt;
        std::vector<std::string> out;
        for (const auto& mv : *plan) out.push_back(mv.format());
        return out;
      },
      py::arg("target"), py::arg("m") = 3, py::arg("d") = 1, py::arg("max_steps") = 8,
      py::arg("node_budget") = kDefaultNodeBudget);

  m.def("lower_bound", [](const std::string& target) { return lower_bound(parse_cycles(target)); });
  m.def("membership_check",
        [](const std::string& target, int machine_size) { return membership_check(parse_cycles(target), machine_size); });
  m.def("outsider_pool_size", &outsider_pool_size);

  const auto z = CarrierPoint::named("z");
  m.def(
      "shift3",
      [z](std::uint32_t streams, std::uint64_t horizon) {
        std::vector<std::uint32_t> ids;
        for (std::uint32_t s = 0; s < streams; ++s) ids.push_back(s);
        return describe(invert_multi_shift(ids, z), forward_shift(ids).inverse().with_fixed(z), horizon);
      },
      py::arg("streams") = 1, py::arg("horizon") = 8);
  m.def(
      "finitary_two_step",
      [z](const std::string& sigma, std::uint64_t horizon) {
        const auto p = parse_cycles(sigma);
        return describe(invert_finitary_two_step(p, z), TailMap::stream_extension(p.inverse()).with_fixed(z), horizon);
      },
      py::arg("sigma"), py::arg("horizon") = 8);
}
