#include "blockcheck/asymmetric.hpp"

#include <algorithm>

#include "blockcheck/cnf.hpp"

namespace blockcheck {

Clause AlaTrace::result() const {
  std::vector<Lit> lits(base.begin(), base.end());
  for (const auto& step : added) lits.push_back(step.literal);
  return Clause(std::move(lits));
}

std::vector<std::pair<Lit, Clause>> asymmetric_literals(const Formula& others,
                                                        const Clause& current) {
  std::vector<std::pair<Lit, Clause>> out;
  for (ClauseId id : others.ids()) {
    const Clause& d = others.clause(id);
    for (Lit m : d) {
      const Lit candidate = ~m;
      if (current.contains(candidate)) continue;
      if (d.without(m).subset_of(current)) out.emplace_back(candidate, d);
    }
  }
  // Canonical literal order; ties keep the canonically first reason.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.first == b.first; }),
            out.end());
  return out;
}

namespace {

AlaTrace saturate(const Formula& others, const Clause& c) {
  AlaTrace trace{.base = c, .added = {}, .tautology_after = std::nullopt};
  if (is_tautology(c)) trace.tautology_after = 0;
  Clause current = c;
  while (true) {
    auto candidates = asymmetric_literals(others, current);
    if (candidates.empty()) break;
    auto& [lit, reason] = candidates.front();
    current = current.with(lit);
    trace.added.push_back({lit, reason});
    if (!trace.tautology_after && is_tautology(current)) trace.tautology_after = trace.added.size();
  }
  return trace;
}

bool subsumed_in(const Formula& g, const Clause& c) {
  for (ClauseId id : g.ids())
    if (g.clause(id).subset_of(c)) return true;
  return false;
}

// Base property of a resolvent against every clause of g, the resolvent
// itself included when present.
bool holds_against(BaseProperty base, const Formula& g, const Clause& e) {
  switch (base) {
    case BaseProperty::tautology:
      return is_tautology(e);
    case BaseProperty::subsumed:
      return subsumed_in(g, e);
    case BaseProperty::asymmetric_tautology:
      return saturate(g, e).tautology();
    case BaseProperty::asymmetric_subsumed:
      return subsumed_in(g, saturate(g, e).result());
  }
  return false;
}

}  // namespace

AlaTrace ala_fixpoint(const Formula& f, const Clause& c) { return saturate(f.without(c), c); }

bool is_subsumed(const Formula& f, const Clause& c) {
  for (ClauseId id : f.ids()) {
    const Clause& d = f.clause(id);
    if (d != c && d.subset_of(c)) return true;
  }
  return false;
}

bool is_AT(const Formula& f, const Clause& c) { return ala_fixpoint(f, c).tautology(); }

bool is_AS(const Formula& f, const Clause& c) {
  return is_subsumed(f.without(c), ala_fixpoint(f, c).result());
}

std::optional<Lit> asymmetric_blocking_literal(const Formula& f, const Clause& c) {
  auto w = is_literal_blocked(f.without(c), ala_fixpoint(f, c).result());
  if (!w) return std::nullopt;
  return w->literal;
}

bool is_ABC(const Formula& f, const Clause& c) {
  return asymmetric_blocking_literal(f, c).has_value();
}

bool holds(BaseProperty base, const Formula& f, const Clause& c) {
  switch (base) {
    case BaseProperty::tautology:
      return is_tautology(c);
    case BaseProperty::subsumed:
      return is_subsumed(f, c);
    case BaseProperty::asymmetric_tautology:
      return is_AT(f, c);
    case BaseProperty::asymmetric_subsumed:
      return is_AS(f, c);
  }
  return false;
}

RLiftVerdict r_lift(BaseProperty base, const Formula& f, const Clause& c) {
  if (holds(base, f, c)) return {.holds = true, .pivot = std::nullopt};
  const Formula rest = f.without(c);
  for (Lit l : c) {
    bool all = true;
    for (ClauseId id : rest.occurrences(~l)) {
      if (!holds_against(base, rest, c | rest.clause(id).without(~l))) {
        all = false;
        break;
      }
    }
    if (all) return {.holds = true, .pivot = l};
  }
  return {};
}

}  // namespace blockcheck
