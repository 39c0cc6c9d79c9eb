#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blockcheck/formula.hpp"
#include "blockcheck/qbf.hpp"

namespace blockcheck {

inline constexpr std::size_t kDefaultGrowthCap = 100000;

/// F_x ⊗_x F_¬x without tautological resolvents.
Formula all_resolvents(const Formula& f, Var x);

/// (F \ (F_x ∪ F_¬x)) ∪ all_resolvents(F, x). Throws ResourceError when the
/// result would exceed `growth_cap` clauses.
Formula eliminate_variable(const Formula& f, Var x, std::size_t growth_cap = kDefaultGrowthCap);

/// env_F(c) ∪ {c}, tautologies removed once, then every variable of `c`
/// eliminated in `order` (ascending id when empty). No tautology guard: this
/// is the raw procedure the two checkers below are built on.
Formula eliminate_local_variables(const Formula& f, const Clause& c,
                                  std::span<const Var> order = {},
                                  std::size_t growth_cap = kDefaultGrowthCap);

/// `c` is semantically blocked iff eliminating var(c) from its environment
/// yields the empty formula. Throws PreconditionError for tautological `c`.
bool sem_blocked_via_elimination(const Formula& f, const Clause& c,
                                 std::span<const Var> order = {},
                                 std::size_t growth_cap = kDefaultGrowthCap);

/// `l` blocks `c` iff eliminating var(l) from `c` and the clauses of F_l̄
/// yields the empty formula.
/// Throws PreconditionError for tautological `c` or l ∉ c.
bool literal_blocked_via_elimination(const Formula& f, const Clause& c, Lit l);

/// ∀ ext_F(c) ∃ var(c). (env_F(c) ∪ {c}). Throws PreconditionError for a
/// tautological `c`.
QbfInstance encode_qbf(const Formula& f, const Clause& c);

}  // namespace blockcheck
