#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kayles/audit.hpp"
#include "kayles/disjunctive.hpp"
#include "kayles/error.hpp"
#include "kayles/foreclosed.hpp"
#include "kayles/oracle.hpp"
#include "kayles/solver.hpp"

namespace py = pybind11;
using namespace kayles;

namespace {

py::object value_obj(const GameValue& v) {
  if (v.is_star()) return py::str("*");
  return py::int_(v.value());
}

Position to_position(const std::vector<int>& parts) { return Position::from_lengths(parts); }

std::vector<std::pair<std::size_t, int>> move_pairs(const CompoundMove& m) {
  std::vector<std::pair<std::size_t, int>> out;
  for (const auto& c : m.choices) out.emplace_back(c.component, c.vertex);
  return out;
}

}  // namespace

PYBIND11_MODULE(_kayles, m) {
  m.doc() = "Node-Kayles on unions of paths under the twelve compound conventions";

  static py::exception<Error> kayles_error(m, "KaylesError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(kayles_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("variants", [] {
    std::vector<std::string> names;
    for (const auto& v : all_variants()) names.push_back(v.name());
    return names;
  });
  m.def("canonicalize", [](const std::vector<int>& parts) { return to_position(parts).parts(); });
  m.def("rho", [](int n) { return rho(n); });
  m.def("fplus", [](int n) { return value_obj(fplus(n)); });
  m.def("fminus_sequence", [](std::size_t limit) {
    py::list out;
    for (const auto& v : fminus_sequence(limit).values) out.append(value_obj(v));
    return out;
  });
  m.def("outcome", [](const std::string& variant, const std::vector<int>& parts) {
    const Analysis a = analyze(parse_variant(variant), to_position(parts));
    return py::make_tuple(std::string(1, to_char(a.outcome)), a.summary());
  });
  m.def("oracle_outcome", [](const std::string& variant, const std::vector<int>& parts) {
    return std::string(1, to_char(shared_oracle().outcome(to_position(parts), parse_variant(variant))));
  });
  m.def("engine_move", [](const std::string& variant, const std::vector<int>& parts) {
    return move_pairs(engine_move(parse_variant(variant), to_position(parts)));
  });
  m.def("apply_move", [](const std::string& variant, const std::vector<int>& parts,
                         const std::vector<std::pair<std::size_t, int>>& move) {
    CompoundMove cm;
    for (auto [c, v] : move) cm.choices.push_back({c, v});
    const Transition t = apply_move(to_position(parts), cm, parse_variant(variant).move_rule);
    return py::make_tuple(t.successor.parts(), t.emptied_components);
  });
  m.def("losing_paths", [](const std::string& variant, int limit) {
    return losing_paths(parse_variant(variant), limit);
  });
  m.def("fminus_stats", [](std::size_t n) {
    const StatsRow r = fminus_stats(n);
    py::dict d;
    d["n"] = r.n;
    d["NbZ"] = r.nb_zero;
    d["Max"] = r.max;
    d["Mean"] = r.mean;
    d["Deviation"] = r.deviation;
    d["FreqV"] = r.freq_value;
    d["PctFreqV"] = r.pct_freq;
    d["MaxZ"] = r.max_zero;
    d["PosMax"] = r.pos_max;
    return d;
  });
  m.def("enumerate_positions", [](int max_total) {
    std::vector<std::vector<int>> out;
    for_each_position(max_total, [&](const Position& p) { out.push_back(p.parts()); });
    return out;
  });
  m.def(
      "audit",
      [](const std::string& variant, int bound) {
        Oracle oracle(OracleConfig{bound, std::max(bound, 1), 10});
        const DiscrepancyReport r = audit_variant(parse_variant(variant), bound, oracle);
        return py::make_tuple(r.positions_checked, r.entries.size());
      },
      py::arg("variant"), py::arg("bound") = 10);
}
