// Python bindings. Clauses and assignments cross the boundary as DIMACS
// integer lists; formulas as a wrapped Formula.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "blockcheck/asymmetric.hpp"
#include "blockcheck/blocking.hpp"
#include "blockcheck/dimacs.hpp"
#include "blockcheck/engine.hpp"
#include "blockcheck/error.hpp"
#include "blockcheck/oracle.hpp"
#include "blockcheck/qbf.hpp"
#include "blockcheck/reductions.hpp"
#include "blockcheck/trace_io.hpp"
#include "blockcheck/varelim.hpp"

namespace py = pybind11;
using namespace blockcheck;

namespace {

using Ints = std::vector<int>;

Clause to_clause(const Ints& lits) { return Clause::from_dimacs(lits); }

std::vector<Var> to_vars(const Ints& ids) {
  std::vector<Var> out;
  for (int v : ids) {
    if (v <= 0) throw PreconditionError("variable ids are positive, got " + std::to_string(v));
    out.emplace_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

Ints from_vars(const std::vector<Var>& vars) {
  Ints out;
  for (Var v : vars) out.push_back(static_cast<int>(v.id()));
  return out;
}

Ints from_lits(const std::vector<Lit>& lits) {
  Ints out;
  for (Lit l : lits) out.push_back(l.to_dimacs());
  return out;
}

std::optional<Ints> to_ints(const std::optional<PartialAssignment>& a) {
  if (!a) return std::nullopt;
  return a->to_dimacs();
}

Property property_from(const std::string& tag) {
  const auto p = parse_property(tag);
  if (!p) throw PreconditionError("unknown property '" + tag + "'");
  return *p;
}

py::dict super_result(const SuperBlockingResult& r) {
  py::dict d;
  d["blocked"] = r.blocked();
  d["failing_tau"] = to_ints(r.failing_tau);
  py::list per_tau;
  if (r.witness)
    for (const auto& e : r.witness->per_tau)
      per_tau.append(py::make_tuple(e.tau.to_dimacs(), e.blocking_set.to_dimacs()));
  d["per_tau"] = per_tau;
  d["external_vars"] = r.witness ? from_vars(r.witness->external_vars) : Ints{};
  return d;
}

py::tuple reduction_result(const ReductionInstance& r) {
  py::dict names;
  for (const auto& m : r.variables) names[py::str(m.name)] = static_cast<int>(m.var.id());
  return py::make_tuple(r.formula, r.clause.to_dimacs(), names);
}

QbfInstance to_qbf(const Ints& universals, const Ints& existentials, const Formula& matrix) {
  return QbfInstance{.universals = to_vars(universals), .existentials = to_vars(existentials),
                     .matrix = matrix};
}

}  // namespace

PYBIND11_MODULE(_blockcheck, m) {
  m.doc() = "Blocked-clause checks, elimination and model reconstruction";

  auto base = py::register_exception<Error>(m, "BlockcheckError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  py::class_<Formula>(m, "Formula")
      .def(py::init<>())
      .def(py::init([](const std::vector<Ints>& clauses) { return Formula::from_dimacs(clauses); }),
           py::arg("clauses"))
      .def_static(
          "parse",
          [](const std::string& text, bool strict) { return parse_dimacs(text, {.strict = strict}).formula; },
          py::arg("text"), py::arg("strict") = false, "Parse DIMACS CNF text.")
      .def("to_dimacs", [](const Formula& f) { return write_dimacs(f); })
      .def("clauses",
           [](const Formula& f) {
             std::vector<Ints> out;
             for (const auto& c : f.clauses()) out.push_back(c.to_dimacs());
             return out;
           })
      .def("variables", [](const Formula& f) { return from_vars(f.variables()); })
      .def("add", [](Formula& f, const Ints& c) { f.add(to_clause(c)); })
      .def("erase", [](Formula& f, const Ints& c) { return f.erase(to_clause(c)); })
      .def("__contains__", [](const Formula& f, const Ints& c) { return f.contains(to_clause(c)); })
      .def("__len__", &Formula::size)
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__repr__", [](const Formula& f) { return "<Formula with " + std::to_string(f.size()) + " clauses>"; });

  // blocking
  m.def(
      "literal_blocks", [](const Formula& f, const Ints& c, int l) { return literal_blocks(f, to_clause(c), Lit::from_dimacs(l)); },
      py::arg("formula"), py::arg("clause"), py::arg("literal"));
  m.def(
      "is_literal_blocked",
      [](const Formula& f, const Ints& c) -> std::optional<int> {
        const auto w = is_literal_blocked(f, to_clause(c));
        if (!w) return std::nullopt;
        return w->literal->to_dimacs();
      },
      py::arg("formula"), py::arg("clause"), "First blocking literal, or None.");
  m.def(
      "set_blocks",
      [](const Formula& f, const Ints& c, const Ints& l) { return set_blocks(f, to_clause(c), to_clause(l)); },
      py::arg("formula"), py::arg("clause"), py::arg("blocking_set"));
  m.def(
      "is_set_blocked",
      [](const Formula& f, const Ints& c, std::optional<std::size_t> k) -> std::optional<Ints> {
        const auto w = is_set_blocked(f, to_clause(c), k);
        if (!w) return std::nullopt;
        return w->set->to_dimacs();
      },
      py::arg("formula"), py::arg("clause"), py::arg("k") = py::none(), "First blocking set, or None.");
  m.def(
      "is_super_blocked",
      [](const Formula& f, const Ints& c, std::optional<std::size_t> k, std::size_t ext_cap) {
        return super_result(is_super_blocked(f, to_clause(c), {.max_size = k, .ext_cap = ext_cap}));
      },
      py::arg("formula"), py::arg("clause"), py::arg("k") = py::none(), py::arg("ext_cap") = kDefaultExtCap,
      "Dict with blocked, per_tau [(tau, set)], failing_tau and external_vars.");
  m.def("count_candidate_sets", &count_candidate_sets, py::arg("n"), py::arg("k"));

  // oracles
  m.def("is_satisfiable", &is_satisfiable, py::arg("formula"), py::arg("cap") = kDefaultSatCap);
  m.def(
      "find_model", [](const Formula& f, std::size_t cap) { return to_ints(find_model(f, cap)); },
      py::arg("formula"), py::arg("cap") = kDefaultSatCap);
  m.def(
      "is_redundant", [](const Formula& f, const Ints& c, std::size_t cap) { return is_redundant(f, to_clause(c), cap); },
      py::arg("formula"), py::arg("clause"), py::arg("cap") = kDefaultSatCap);
  m.def(
      "is_semantically_blocked",
      [](const Formula& f, const Ints& c, std::size_t cap) { return is_semantically_blocked_oracle(f, to_clause(c), cap); },
      py::arg("formula"), py::arg("clause"), py::arg("cap") = kDefaultSatCap);
  m.def(
      "semantic_blocking_counterexample",
      [](const Formula& f, const Ints& c) { return to_ints(semantic_blocking_counterexample(f, to_clause(c))); },
      py::arg("formula"), py::arg("clause"));
  m.def(
      "eval_forall_exists",
      [](const Ints& u, const Ints& e, const Formula& matrix) { return eval_forall_exists(to_qbf(u, e, matrix)); },
      py::arg("universals"), py::arg("existentials"), py::arg("matrix"));
  m.def(
      "nonlocality_witness", [](const Formula& f, const Ints& c) { return nonlocality_witness(f, to_clause(c)); },
      py::arg("formula"), py::arg("clause"));

  // variable elimination
  m.def(
      "eliminate_variable",
      [](const Formula& f, int x) { return eliminate_variable(f, to_vars({x}).front()); },
      py::arg("formula"), py::arg("var"));
  m.def(
      "eliminate_local_variables",
      [](const Formula& f, const Ints& c, const Ints& order) {
        const auto vars = to_vars(order);
        return eliminate_local_variables(f, to_clause(c), vars);
      },
      py::arg("formula"), py::arg("clause"), py::arg("order") = Ints{});
  m.def(
      "sem_blocked_via_elimination",
      [](const Formula& f, const Ints& c, const Ints& order) {
        const auto vars = to_vars(order);
        return sem_blocked_via_elimination(f, to_clause(c), vars);
      },
      py::arg("formula"), py::arg("clause"), py::arg("order") = Ints{});
  m.def(
      "literal_blocked_via_elimination",
      [](const Formula& f, const Ints& c, int l) {
        return literal_blocked_via_elimination(f, to_clause(c), Lit::from_dimacs(l));
      },
      py::arg("formula"), py::arg("clause"), py::arg("literal"));
  m.def(
      "encode_qbf", [](const Formula& f, const Ints& c) { return write_qdimacs(encode_qbf(f, to_clause(c))); },
      py::arg("formula"), py::arg("clause"), "QDIMACS text of the ∀ext ∃var(C) encoding.");

  // asymmetric family
  m.def(
      "ala", [](const Formula& f, const Ints& c) { return ala_fixpoint(f, to_clause(c)).result().to_dimacs(); },
      py::arg("formula"), py::arg("clause"), "Clause saturated with asymmetric literals.");
  m.def(
      "holds",
      [](const Formula& f, const Ints& c, const std::string& tag) {
        return check_clause(f, to_clause(c), property_from(tag)).has_value();
      },
      py::arg("formula"), py::arg("clause"), py::arg("property"),
      "Membership in a property given by tag (t, s, at, as, abc, bc, setbc, supbc, rt, rs, rat, ras).");

  // engine
  m.def("properties", [] {
    std::vector<std::string> out;
    for (Property p : all_properties()) out.emplace_back(property_tag(p));
    return out;
  });
  m.def(
      "eliminate",
      [](const Formula& f, const std::string& tag, std::optional<std::size_t> k, std::size_t ext_cap,
         bool compact) {
        const auto r = eliminate_clauses(
            f, {.property = property_from(tag), .k = k, .ext_cap = ext_cap, .compact = compact});
        std::vector<Ints> skipped;
        for (const auto& c : r.skipped) skipped.push_back(c.to_dimacs());
        return py::make_tuple(r.formula, write_trace(r.trace), skipped);
      },
      py::arg("formula"), py::arg("property") = "bc", py::arg("k") = py::none(),
      py::arg("ext_cap") = kDefaultExtCap, py::arg("compact") = false,
      "Returns (simplified formula, trace text, skipped clauses).");
  m.def(
      "reconstruct",
      [](const std::string& trace, const Formula& original, const Ints& model) {
        return reconstruct_model(parse_trace(trace), original, PartialAssignment::from_dimacs(model)).to_dimacs();
      },
      py::arg("trace"), py::arg("original"), py::arg("model"));
  m.def(
      "classify",
      [](const Formula& f, const std::vector<std::string>& tags, std::size_t jobs) {
        std::vector<Property> props;
        for (const auto& t : tags) props.push_back(property_from(t));
        const auto r = classify(f, props, {}, jobs);
        py::list rows;
        for (std::size_t i = 0; i < r.clauses.size(); ++i) {
          py::dict row;
          for (std::size_t j = 0; j < props.size(); ++j) {
            const Cell cell = r.cells[i][j];
            row[py::str(tags[j])] = cell == Cell::cap ? py::object(py::none()) : py::bool_(cell == Cell::yes);
          }
          rows.append(py::make_tuple(r.clauses[i].to_dimacs(), row));
        }
        return rows;
      },
      py::arg("formula"), py::arg("properties"), py::arg("jobs") = 1,
      "[(clause, {tag: True/False/None})], None when a cap was hit.");

  // reductions
  m.def("sat_to_setblocking", [](const Formula& f) { return reduction_result(sat_to_setblocking(f)); },
        py::arg("formula"), "(formula, clause, {name: var}).");
  m.def(
      "forall_exists_to_superblocking",
      [](const Ints& u, const Ints& e, const Formula& matrix) {
        return reduction_result(forall_exists_to_superblocking(to_qbf(u, e, matrix)));
      },
      py::arg("universals"), py::arg("existentials"), py::arg("matrix"));
  m.def("unsat_to_1superblocking", [](const Formula& f) { return reduction_result(unsat_to_1superblocking(f)); },
        py::arg("formula"));
}
