#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oddcut/approx.hpp"
#include "oddcut/cli.hpp"
#include "oddcut/error.hpp"
#include "oddcut/io.hpp"
#include "oddcut/lp_cert.hpp"
#include "oddcut/reductions.hpp"
#include "oddcut/solver.hpp"
#include "oddcut/torso.hpp"

namespace py = pybind11;
using namespace oddcut;

namespace {

// Rationals cross the boundary as "p/q" strings; the package wraps them in Fraction.
std::vector<std::string> fractions(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const Rational& v : values) out.push_back(to_fraction_string(v));
  return out;
}

py::object solution(const std::optional<CutSolution>& s) {
  if (!s) return py::none();
  py::dict d;
  d["elements"] = s->elements;
  d["size"] = s->size;
  d["instance_hash"] = s->instance_hash;
  return d;
}

CoverOptions options(const std::string& strategy, std::uint64_t seed, double factor) {
  CoverOptions o;
  if (strategy == "exhaustive") {
    o.strategy = Strategy::Exhaustive;
  } else if (strategy == "random") {
    o.strategy = Strategy::Randomized;
  } else {
    throw py::value_error("strategy must be 'exhaustive' or 'random'");
  }
  o.seed = seed;
  o.repetition_factor = factor;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Odd multiway cut solvers and certificate checks";

  static py::exception<OddcutError> error(m, "OddcutError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const OddcutError& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_static("parse", [](const std::string& text) { return parse_instance(text); },
                  py::arg("text"))
      .def("format", [](const Instance& i) { return format_instance(i); })
      .def_property_readonly("directed", &Instance::directed)
      .def_property_readonly("node_kind", [](const Instance& i) { return i.kind == CutKind::Node; })
      .def_property_readonly("node_count", &Instance::node_count)
      .def_property_readonly("edge_count", &Instance::edge_count)
      .def_property_readonly("terminals", [](const Instance& i) { return i.terminals; })
      .def_property_readonly("protected_nodes", [](const Instance& i) { return i.protected_nodes; })
      .def_property_readonly("budget", [](const Instance& i) { return i.budget; })
      .def("free_elements", &Instance::free_elements)
      .def("hash", [](const Instance& i) { return instance_hash(i); })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  m.def("verify_solution", &verify_solution, py::arg("instance"), py::arg("elements"));

  m.def(
      "solve_exact",
      [](const Instance& inst, int k, const std::string& strategy, std::uint64_t seed,
         double factor) { return solution(solve_exact(inst, k, options(strategy, seed, factor))); },
      py::arg("instance"), py::arg("k"), py::arg("strategy") = "exhaustive", py::arg("seed") = 0,
      py::arg("repetition_factor") = 4.0);

  m.def(
      "solve_minimum",
      [](const Instance& inst, bool brute, std::uint64_t seed) {
        return solution(solve_minimum(inst, brute ? Method::Brute : Method::Exact,
                                      default_cover_options(inst, seed)));
      },
      py::arg("instance"), py::arg("brute") = false, py::arg("seed") = 0);

  m.def("brute_force_solve", [](const Instance& inst) { return solution(brute_force_solve(inst)); },
        py::arg("instance"));

  m.def(
      "approx2",
      [](const Instance& inst, NodeId s, NodeId t) -> py::object {
        auto edges = approx2_odd_blocker(inst.dag(), s, t, inst.protected_edges);
        if (!edges) return py::none();
        return py::make_tuple(*edges, to_fraction_string(edge_set_cost(inst.dag(), *edges)));
      },
      py::arg("instance"), py::arg("s"), py::arg("t"));

  m.def(
      "has_odd_path",
      [](const Instance& inst, NodeId s, NodeId t) { return has_odd_path(inst.dag(), s, t); },
      py::arg("instance"), py::arg("s"), py::arg("t"));

  m.def(
      "shadows",
      [](const Instance& inst, const NodeSet& cut) {
        const Dag& d = inst.dag();
        const NodeSet sorted = normalized(cut);
        return py::make_tuple(forward_shadow(d, inst.terminals, sorted),
                              reverse_shadow(d, inst.terminals, sorted),
                              is_thin(d, inst.terminals, sorted));
      },
      py::arg("instance"), py::arg("cut"));

  m.def("vc_gadget", [](const Instance& graph) { return gen_vc_gadget(graph.undirected()); },
        py::arg("graph"));
  m.def(
      "mwc_gadget",
      [](const Instance& graph) { return gen_mwc_gadget(graph.undirected(), graph.terminals); },
      py::arg("graph"));

  m.def(
      "star_gap",
      [](int k) {
        StarGap g = gen_star_gap(k);
        return py::make_tuple(g.instance, fractions(g.witness.x));
      },
      py::arg("k"));

  m.def("escher_report", [] {
    const EscherWall w = gen_escher_wall();
    const Dag& d = w.instance.dag();
    const CertificateBundle& c = w.certificate;
    const OptimalityReport r = check_optimality(d, w.s, w.t, c.primal, c.dual);
    py::dict out;
    out["instance"] = w.instance;
    out["s"] = w.s;
    out["t"] = w.t;
    out["primal"] = fractions(c.primal.x);
    out["primal_value"] = to_fraction_string(r.primal_value);
    out["dual_value"] = to_fraction_string(r.dual_value);
    out["gap"] = to_fraction_string(r.gap);
    out["extreme_point"] = verify_extreme_point(d, w.s, w.t, c.primal, c.tight_paths);
    out["half_integral"] = is_half_integral(c.primal);
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "");
}
