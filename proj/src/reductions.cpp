#include "blockcheck/reductions.hpp"

#include <algorithm>
#include <map>

#include "blockcheck/cnf.hpp"

namespace blockcheck {
namespace {

// Shared construction of the set-blocking and super-blocking reductions:
// `encoded` variables get a primed copy and appear in C together with u.
ReductionInstance encode_with_primes(const Formula& f, const std::vector<Var>& encoded,
                                     std::uint32_t max_source) {
  ReductionInstance r;
  const Var u(max_source + 1);
  r.variables.push_back({"u", u});
  std::map<Var, Var> primed;
  std::uint32_t next = max_source + 2;
  for (Var x : encoded) {
    primed.emplace(x, Var(next));
    r.variables.push_back({"x" + std::to_string(x.id()), x});
    r.variables.push_back({"x" + std::to_string(x.id()) + "'", Var(next)});
    ++next;
  }

  std::vector<Lit> c{Lit::pos(u)};
  for (Var x : encoded) {
    c.push_back(Lit::pos(x));
    c.push_back(Lit::pos(primed.at(x)));
  }
  r.clause = Clause(std::move(c));

  for (const Clause& d : f.clauses()) {
    std::vector<Lit> lits{Lit::neg(u)};
    for (Lit l : d) {
      auto it = primed.find(l.var());
      lits.push_back(l.negative() && it != primed.end() ? Lit::pos(it->second) : l);
    }
    r.formula.add(Clause(std::move(lits)));
  }
  for (Var x : encoded) {
    const Var xp = primed.at(x);
    r.formula.add(Clause{Lit::neg(x), Lit::neg(xp)});
    r.formula.add(Clause{Lit::neg(x), Lit::pos(u)});
    r.formula.add(Clause{Lit::neg(xp), Lit::pos(u)});
  }
  return r;
}

}  // namespace

ReductionInstance sat_to_setblocking(const Formula& f) {
  return encode_with_primes(f, f.variables(), f.max_var());
}

ReductionInstance forall_exists_to_superblocking(const QbfInstance& q) {
  std::uint32_t max_source = q.matrix.max_var();
  for (Var v : q.universals) max_source = std::max(max_source, v.id());
  for (Var v : q.existentials) max_source = std::max(max_source, v.id());
  auto ys = q.existentials;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto r = encode_with_primes(q.matrix, ys, max_source);
  for (auto& m : r.variables)
    if (m.name != "u") m.name.front() = 'y';
  auto xs = q.universals;
  std::sort(xs.begin(), xs.end());
  for (Var x : xs) r.variables.push_back({"x" + std::to_string(x.id()), x});
  return r;
}

ReductionInstance unsat_to_1superblocking(const Formula& f) {
  ReductionInstance r;
  std::uint32_t next = f.max_var() + 1;
  std::vector<Lit> c;
  std::size_t i = 1;
  for (const Clause& source : f.clauses()) {
    const Var u(next++);
    r.variables.push_back({"u" + std::to_string(i++), u});
    c.push_back(Lit::pos(u));
    for (Lit l : source) r.formula.add(Clause{Lit::neg(u), ~l});
  }
  for (Var x : f.variables()) r.variables.push_back({"x" + std::to_string(x.id()), x});
  r.clause = Clause(std::move(c));
  return r;
}

bool is_valid_blocking_instance(const ReductionInstance& r) {
  return resolution_environment(r.formula, r.clause).size() == r.formula.size();
}

}  // namespace blockcheck
