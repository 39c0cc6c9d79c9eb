#include "blockcheck/cnf.hpp"

#include <algorithm>

#include "blockcheck/error.hpp"

namespace blockcheck {

bool is_tautology(const Clause& c) {
  // Canonical order puts ¬x directly before x.
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i].var() == c[i + 1].var()) return true;
  return false;
}

std::optional<Clause> complementary_pair(const Clause& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i].var() == c[i + 1].var()) return Clause{c[i], c[i + 1]};
  return std::nullopt;
}

Clause resolvent(const Clause& c, const Clause& d, Lit l) {
  if (!c.contains(l) || !d.contains(~l))
    throw PreconditionError("resolvent: pivot " + std::to_string(l.to_dimacs()) +
                            " not present with opposite signs");
  return c.without(l) | d.without(~l);
}

std::vector<ClauseId> resolution_environment_ids(const Formula& f, const Clause& c) {
  return f.occurring_any(c.complemented().lits());
}

Formula resolution_environment(const Formula& f, const Clause& c) {
  Formula env;
  for (ClauseId id : resolution_environment_ids(f, c)) env.add(f.clause(id));
  return env;
}

std::vector<Var> variables_of(std::span<const Clause> clauses) {
  std::vector<Var> vars;
  for (const Clause& c : clauses)
    for (Lit l : c) vars.push_back(l.var());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::vector<Var> external_variables(const Formula& f, const Clause& c) {
  std::vector<Var> out;
  for (ClauseId id : resolution_environment_ids(f, c))
    for (Lit l : f.clause(id))
      if (!c.contains_var(l.var())) out.push_back(l.var());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Formula restrict(const Formula& f, const PartialAssignment& t) {
  Formula out;
  for (ClauseId id : f.ids())
    if (!t.satisfies(f.clause(id))) out.add(f.clause(id));
  return out;
}

}  // namespace blockcheck
