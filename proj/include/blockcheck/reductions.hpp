#pragma once

#include <string>
#include <vector>

#include "blockcheck/clause.hpp"
#include "blockcheck/formula.hpp"
#include "blockcheck/qbf.hpp"

namespace blockcheck {

/// One named variable of a generated instance, e.g. {"u", 4} or {"x1'", 5}
/// (the prime marks the copy of source variable 1).
struct VariableMapping {
  std::string name;
  Var var;
  friend bool operator==(const VariableMapping&, const VariableMapping&) = default;
};

/// (F', C) produced by a hardness reduction. Source variables keep their ids;
/// fresh variables are numbered after the largest source id, u / u_i first.
struct ReductionInstance {
  Formula formula;
  Clause clause;
  std::vector<VariableMapping> variables;
};

/// SAT → set-blocking: f is satisfiable iff `clause` is set-blocked in
/// `formula`.
ReductionInstance sat_to_setblocking(const Formula& f);

/// ∀X∃Y-SAT → super-blocking: q is true iff `clause` is super-blocked in
/// `formula`. Only existential variables are encoded into the clause.
ReductionInstance forall_exists_to_superblocking(const QbfInstance& q);

/// UNSAT → 1-super-blocking: f is unsatisfiable iff `clause` is
/// 1-super-blocked (equivalently k-super-blocked for any k).
ReductionInstance unsat_to_1superblocking(const Formula& f);

/// Every clause of F' contains the complement of some literal of C.
bool is_valid_blocking_instance(const ReductionInstance& r);

}  // namespace blockcheck
