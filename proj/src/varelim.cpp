#include "blockcheck/varelim.hpp"

#include "blockcheck/cnf.hpp"
#include "blockcheck/error.hpp"

namespace blockcheck {
namespace {

Formula tautology_free_environment(const Formula& f, const Clause& c) {
  Formula out;
  for (ClauseId id : resolution_environment_ids(f, c))
    if (!is_tautology(f.clause(id))) out.add(f.clause(id));
  if (!is_tautology(c)) out.add(c);
  return out;
}

void require_non_tautology(const Clause& c, const char* what) {
  if (is_tautology(c))
    throw PreconditionError(std::string(what) + ": clause " + c.to_string() +
                            " is a tautology; the elimination characterization does not apply");
}

}  // namespace

Formula all_resolvents(const Formula& f, Var x) {
  Formula out;
  const Lit px = Lit::pos(x);
  for (ClauseId pid : f.occurrences(px))
    for (ClauseId nid : f.occurrences(~px)) {
      Clause r = resolvent(f.clause(pid), f.clause(nid), px);
      if (!is_tautology(r)) out.add(r);
    }
  return out;
}

Formula eliminate_variable(const Formula& f, Var x, std::size_t growth_cap) {
  Formula out = f;
  const Formula resolvents = all_resolvents(f, x);
  for (Lit l : {Lit::pos(x), Lit::neg(x)}) {
    const auto occ = f.occurrences(l);
    for (ClauseId id : std::vector<ClauseId>(occ.begin(), occ.end()))
      if (out.alive(id)) out.remove(id);
  }
  for (const Clause& r : resolvents.clauses()) {
    out.add(r);
    if (out.size() > growth_cap)
      throw ResourceError("variable elimination exceeded " + std::to_string(growth_cap) +
                          " clauses");
  }
  return out;
}

Formula eliminate_local_variables(const Formula& f, const Clause& c, std::span<const Var> order,
                                  std::size_t growth_cap) {
  Formula e = tautology_free_environment(f, c);
  const auto vars = order.empty() ? c.variables() : std::vector<Var>(order.begin(), order.end());
  for (Var x : vars) e = eliminate_variable(e, x, growth_cap);
  return e;
}

bool sem_blocked_via_elimination(const Formula& f, const Clause& c, std::span<const Var> order,
                                 std::size_t growth_cap) {
  require_non_tautology(c, "sem_blocked_via_elimination");
  return eliminate_local_variables(f, c, order, growth_cap).empty();
}

bool literal_blocked_via_elimination(const Formula& f, const Clause& c, Lit l) {
  require_non_tautology(c, "literal_blocked_via_elimination");
  if (!c.contains(l))
    throw PreconditionError("literal " + std::to_string(l.to_dimacs()) + " not in clause");
  // Eliminating var(l) from c and its partners F_l̄: c and the partners
  // disappear, so the result is empty iff every resolvent is a tautology.
  for (ClauseId id : f.occurrences(~l))
    if (!is_tautology(resolvent(c, f.clause(id), l))) return false;
  return true;
}

QbfInstance encode_qbf(const Formula& f, const Clause& c) {
  require_non_tautology(c, "encode_qbf");
  QbfInstance q{.universals = external_variables(f, c),
                .existentials = c.variables(),
                .matrix = resolution_environment(f, c)};
  q.matrix.add(c);
  return q;
}

}  // namespace blockcheck
