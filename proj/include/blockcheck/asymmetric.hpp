#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "blockcheck/blocking.hpp"
#include "blockcheck/clause.hpp"
#include "blockcheck/formula.hpp"

namespace blockcheck {

struct AlaStep {
  Lit literal;
  /// Clause D ∨ l̄ of F \ {c} with D contained in the clause before this step.
  Clause reason;
};

/// Asymmetric-literal addition from `base` to saturation.
struct AlaTrace {
  Clause base;
  std::vector<AlaStep> added;
  /// Number of steps after which the extended clause first became a
  /// tautology (0 when `base` already is one); nullopt if never.
  std::optional<std::size_t> tautology_after;

  Clause result() const;
  bool tautology() const { return tautology_after.has_value(); }
};

/// Literals l that are asymmetric w.r.t. `current` in `others`: some clause
/// D ∨ l̄ of `others` has D ⊆ current. Only literals not already in
/// `current` are returned, in canonical order.
std::vector<std::pair<Lit, Clause>> asymmetric_literals(const Formula& others,
                                                        const Clause& current);

/// Adds the canonically smallest asymmetric literal (w.r.t. F \ {c}) until
/// none is left. The saturated clause does not depend on addition order.
AlaTrace ala_fixpoint(const Formula& f, const Clause& c);

bool is_subsumed(const Formula& f, const Clause& c);

bool is_AT(const Formula& f, const Clause& c);
bool is_AS(const Formula& f, const Clause& c);
/// Blocking literal of the saturated clause in F \ {c}, if any.
std::optional<Lit> asymmetric_blocking_literal(const Formula& f, const Clause& c);
bool is_ABC(const Formula& f, const Clause& c);

enum class BaseProperty { tautology, subsumed, asymmetric_tautology, asymmetric_subsumed };

struct RLiftVerdict {
  bool holds = false;
  /// Pivot literal when the look-ahead disjunct was used.
  std::optional<Lit> pivot;
};

/// R-lift of a base property, evaluated on G = F \ {c}: the base holds for
/// (F, c), or some l ∈ c has base(G, c ∪ (D \ {l̄})) for every D ∈ G_l̄.
/// For the resolvents all of G is available, so a resolvent that is itself
/// a clause of G qualifies. Yields RT, RS, RAT and RAS.
RLiftVerdict r_lift(BaseProperty base, const Formula& f, const Clause& c);

bool holds(BaseProperty base, const Formula& f, const Clause& c);

}  // namespace blockcheck
