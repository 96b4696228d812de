// Python bindings for the pmk core: string-oriented wrappers over the
// main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmk/bridge.hpp"
#include "pmk/gen.hpp"
#include "pmk/json_io.hpp"
#include "pmk/oracle.hpp"
#include "pmk/prover.hpp"

namespace py = pybind11;
using namespace pmk;

namespace {

SystemId system_arg(const std::string& name) {
    auto s = system_from_name(name);
    if (!s) throw py::value_error("unknown system: " + name);
    return *s;
}

FrameClass class_arg(const std::string& name) {
    if (name == "K") return FrameClass{};
    if (auto sys = system_from_name(name)) return frame_class_of(*sys);
    FrameClass c;
    for (char ch : name) {
        switch (ch) {
        case 'D': c.serial = true; break;
        case 'T': c.reflexive = true; break;
        case '4': c.transitive = true; break;
        case 'B': c.symmetric = true; break;
        case '5': c.euclidean = true; break;
        default: throw py::value_error("unknown frame class: " + name);
        }
    }
    return c;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deep-inference proof kernel for Peirce-style modal graphs";

    m.def("parse", [](const std::string& s) { return parse(s).print(); },
          "Canonical form of a graph");
    m.def("polarity", [](const std::string& s, const std::vector<std::size_t>& path,
                         bool into_area) {
        Address a{path, into_area};
        return polarity(parse(s), a) == Polarity::Positive ? "positive" : "negative";
    });
    m.def("pi", [](const std::string& s) { return pi(parse(s)).print(); },
          "Translate a graph to a modal formula");
    m.def("sigma", [](const std::string& s) { return sigma(parse_formula(s)).print(); },
          "Translate a modal formula to a graph");
    m.def("delta", [](const std::string& s) { return delta(parse_formula(s)).print(); });
    m.def("rho", [](const std::string& s) { return rho(parse(s)).print(); });

    m.def("apply_rule_json", [](const std::string& graph, const std::string& proof_step) {
        // One kernel step expressed as a single-step proof file fragment.
        Proof p = proof_from_json(proof_step);
        if (p.steps.size() != 2 || p.steps[1].kind != StepKind::Kernel)
            throw py::value_error("expected an axiom plus one kernel step");
        return apply_rule(parse(graph), p.steps[1].rule).print();
    });

    m.def("check_proof", [](const std::string& text) {
        Proof p = proof_from_json(text);
        CheckResult r = check(p);
        py::dict out;
        out["ok"] = r.ok;
        if (!r.ok) {
            out["step"] = r.step;
            out["reason"] = r.reason;
        } else {
            out["conclusion"] = p.conclusion().print();
        }
        return out;
    });

    m.def("prove", [](const std::string& goal, const std::string& system, int depth) {
        SearchConfig cfg;
        cfg.system = system_arg(system);
        cfg.depth = depth;
        auto pf = prove(parse(goal), cfg);
        py::dict out;
        out["proved"] = pf.has_value();
        if (pf) out["proof"] = proof_to_json(*pf);
        return out;
    }, py::arg("goal"), py::arg("system") = "K", py::arg("depth") = 6);

    m.def("countermodel",
          [](const std::string& graph, const std::string& cls, int max_worlds) {
              auto cm = countermodel(parse(graph), class_arg(cls), max_worlds);
              py::dict out;
              out["found"] = cm.has_value();
              if (cm) out["witness"] = countermodel_to_json(*cm);
              return out;
          },
          py::arg("graph"), py::arg("cls") = "K", py::arg("max_worlds") = 3);

    m.def("valid_on_frame",
          [](const std::string& graph, const std::vector<std::string>& adjacency) {
              KripkeFrame f;
              f.n = static_cast<int>(adjacency.size());
              for (const std::string& row : adjacency) {
                  WorldSet bits = 0;
                  for (std::size_t v = 0; v < row.size(); ++v)
                      if (row[v] == '1') bits |= WorldSet{1} << v;
                  f.rows.push_back(bits);
              }
              return valid(parse(graph), f);
          });

    m.attr("systems") = py::cast([] {
        std::vector<std::string> out;
        for (SystemId s : kAllSystems) out.push_back(system_name(s));
        return out;
    }());
}
