#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blockcheck/assignment.hpp"
#include "blockcheck/formula.hpp"
#include "blockcheck/qbf.hpp"

namespace blockcheck {

// Brute-force ground truth. Every procedure enumerates total assignments in
// lexicographic order over ascending variable ids (false before true) and
// reports the first witness it meets.

inline constexpr std::size_t kDefaultSatCap = 24;
inline constexpr std::size_t kDefaultQbfCap = 20;

/// Every clause of `f` contains a literal that `t` makes true.
bool satisfies(const PartialAssignment& t, const Formula& f);

/// All satisfying total assignments over a fixed variable universe.
struct ModelSet {
  std::vector<Var> universe;
  std::vector<PartialAssignment> models;
};

/// Enumerates the models of `f` over `universe` (which must cover var(f)).
ModelSet enumerate_models(const Formula& f, std::vector<Var> universe,
                          std::size_t cap = kDefaultSatCap);

/// First model of `f` over var(f), or nullopt when unsatisfiable.
std::optional<PartialAssignment> find_model(const Formula& f, std::size_t cap = kDefaultSatCap);
bool is_satisfiable(const Formula& f, std::size_t cap = kDefaultSatCap);

/// F \ {c} and F ∪ {c} are satisfiability equivalent.
bool is_redundant(const Formula& f, const Clause& c, std::size_t cap = kDefaultSatCap);

/// First total assignment τ over var(env_F(c)) ∪ var(c) that satisfies the
/// environment but has no satisfying extension of env ∪ {c} differing from τ
/// only on var(c). nullopt means `c` is semantically blocked.
std::optional<PartialAssignment> semantic_blocking_counterexample(
    const Formula& f, const Clause& c, std::size_t cap = kDefaultSatCap);

bool is_semantically_blocked_oracle(const Formula& f, const Clause& c,
                                    std::size_t cap = kDefaultSatCap);

/// Truth of ∀G ∃L. matrix by enumeration. Throws PreconditionError when the
/// blocks overlap or the matrix mentions a variable outside both.
bool eval_forall_exists(const QbfInstance& q, std::size_t cap = kDefaultQbfCap);

/// Formula F' = env_F(c) ∪ {c} ∪ T, where T pins every external variable to
/// its value in the first semantic-blocking counterexample. `c` has the same
/// environment in F' and is not redundant there. Throws PreconditionError
/// when `c` is semantically blocked in `f`.
Formula nonlocality_witness(const Formula& f, const Clause& c, std::size_t cap = kDefaultSatCap);

}  // namespace blockcheck
