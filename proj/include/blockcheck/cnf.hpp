#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blockcheck/assignment.hpp"
#include "blockcheck/clause.hpp"
#include "blockcheck/formula.hpp"

namespace blockcheck {

bool is_tautology(const Clause& c);
/// First complementary pair {l̄, l} of a tautology, negative literal first.
std::optional<Clause> complementary_pair(const Clause& c);

/// (c \ {l}) ∪ (d \ {l̄}). Throws PreconditionError unless l ∈ c and l̄ ∈ d.
Clause resolvent(const Clause& c, const Clause& d, Lit l);

/// Ids of the clauses of `f` that contain the complement of some literal of
/// `c`, in canonical clause order. `c` itself is included only when it is a
/// tautology contained in `f`.
std::vector<ClauseId> resolution_environment_ids(const Formula& f, const Clause& c);
Formula resolution_environment(const Formula& f, const Clause& c);

/// var(env_F(c)) \ var(c), ascending.
std::vector<Var> external_variables(const Formula& f, const Clause& c);

/// F|τ: `f` without the clauses satisfied by `t`. Falsified literals stay.
Formula restrict(const Formula& f, const PartialAssignment& t);

/// Variables of all clauses of `clauses`, ascending.
std::vector<Var> variables_of(std::span<const Clause> clauses);

}  // namespace blockcheck
