#pragma once

// Definitional reference implementations used as test oracles. They work on
// plain std::set<int> clauses and share no code with the library, so an
// agreement between the two is evidence rather than a tautology.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "blockcheck/formula.hpp"

namespace ref {

using RClause = std::set<int>;
using RFormula = std::set<RClause>;
using Assign = std::map<int, bool>;

inline RClause to_ref(const blockcheck::Clause& c) {
  RClause out;
  for (auto l : c) out.insert(l.to_dimacs());
  return out;
}

inline RFormula to_ref(const blockcheck::Formula& f) {
  RFormula out;
  for (const auto& c : f.clauses()) out.insert(to_ref(c));
  return out;
}

inline bool taut(const RClause& c) {
  for (int l : c)
    if (c.count(-l)) return true;
  return false;
}

inline std::set<int> vars(const RClause& c) {
  std::set<int> v;
  for (int l : c) v.insert(std::abs(l));
  return v;
}

inline std::set<int> vars(const RFormula& f) {
  std::set<int> v;
  for (const auto& c : f)
    for (int l : c) v.insert(std::abs(l));
  return v;
}

inline RFormula env(const RFormula& f, const RClause& c) {
  RFormula out;
  for (const auto& d : f)
    for (int l : d)
      if (c.count(-l)) {
        out.insert(d);
        break;
      }
  return out;
}

inline bool sat_clause(const Assign& a, const RClause& c) {
  for (int l : c) {
    auto it = a.find(std::abs(l));
    if (it != a.end() && it->second == (l > 0)) return true;
  }
  return false;
}

inline bool sat_all(const Assign& a, const RFormula& f) {
  for (const auto& c : f)
    if (!sat_clause(a, c)) return false;
  return true;
}

// Calls `fn` on every total assignment over `vs` extending `base`; stops when
// `fn` returns true and reports whether it did.
inline bool any_assignment(const std::vector<int>& vs, Assign base,
                           const std::function<bool(const Assign&)>& fn, std::size_t i = 0) {
  if (i == vs.size()) return fn(base);
  for (bool b : {false, true}) {
    base[vs[i]] = b;
    if (any_assignment(vs, base, fn, i + 1)) return true;
  }
  return false;
}

inline std::vector<int> as_vec(const std::set<int>& s) { return {s.begin(), s.end()}; }

// Splitting search on the first unassigned clause literal.
inline bool satisfiable(RFormula f) {
  if (f.empty()) return true;
  for (const auto& c : f)
    if (c.empty()) return false;
  const int l = *f.begin()->begin();
  for (int choice : {l, -l}) {
    RFormula g;
    for (const auto& c : f) {
      if (c.count(choice)) continue;
      RClause d = c;
      d.erase(-choice);
      g.insert(d);
    }
    if (satisfiable(g)) return true;
  }
  return false;
}

inline bool redundant(const RFormula& f, const RClause& c) {
  RFormula without = f, with = f;
  without.erase(c);
  with.insert(c);
  return satisfiable(without) == satisfiable(with);
}

// Every total τ over var(env ∪ {c}) satisfying env has a variant differing
// only on var(c) that satisfies env ∪ {c}.
inline bool sem_blocked(const RFormula& f, const RClause& c) {
  const RFormula e = env(f, c);
  RFormula ec = e;
  ec.insert(c);
  std::set<int> all = vars(e);
  for (int v : vars(c)) all.insert(v);
  const auto local = as_vec(vars(c));
  return !any_assignment(as_vec(all), {}, [&](const Assign& tau) {
    if (!sat_all(tau, e)) return false;
    const bool extends = any_assignment(local, tau, [&](const Assign& t2) { return sat_all(t2, ec); });
    return !extends;
  });
}

inline RClause set_minus(RClause a, const RClause& b) {
  for (int l : b) a.erase(l);
  return a;
}

inline RClause unite(RClause a, const RClause& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline RClause negate(const RClause& c) {
  RClause out;
  for (int l : c) out.insert(-l);
  return out;
}

inline bool literal_blocks(const RFormula& f, const RClause& c, int l) {
  for (const auto& d : f)
    if (d.count(-l) && !taut(unite(c, set_minus(d, {-l})))) return false;
  return true;
}

inline bool literal_blocked(const RFormula& f, const RClause& c) {
  for (int l : c)
    if (literal_blocks(f, c, l)) return true;
  return false;
}

inline bool set_blocks(const RFormula& f, const RClause& c, const RClause& L) {
  const RClause neg = negate(L);
  const RClause base = unite(set_minus(c, L), neg);
  for (const auto& d : f) {
    bool meets = false;
    for (int l : d) meets = meets || neg.count(l);
    if (meets && !taut(unite(base, d))) return false;
  }
  return true;
}

inline bool set_blocked(const RFormula& f, const RClause& c, std::optional<std::size_t> k = {}) {
  const std::vector<int> lits(c.begin(), c.end());
  const std::size_t n = lits.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    RClause L;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) L.insert(lits[i]);
    if (k && L.size() > *k) continue;
    if (set_blocks(f, c, L)) return true;
  }
  return false;
}

inline RFormula restrict_to(const RFormula& f, const Assign& tau) {
  RFormula out;
  for (const auto& d : f)
    if (!sat_clause(tau, d)) out.insert(d);
  return out;
}

inline std::set<int> ext(const RFormula& f, const RClause& c) {
  auto v = vars(env(f, c));
  for (int x : vars(c)) v.erase(x);
  return v;
}

inline bool super_blocked(const RFormula& f, const RClause& c, std::optional<std::size_t> k = {}) {
  return !any_assignment(as_vec(ext(f, c)), {},
                         [&](const Assign& tau) { return !set_blocked(restrict_to(f, tau), c, k); });
}

inline RFormula eliminate(const RFormula& f, int x) {
  RFormula out, pos, neg;
  for (const auto& d : f) {
    if (d.count(x)) pos.insert(d);
    else if (d.count(-x)) neg.insert(d);
    else out.insert(d);
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      RClause r = unite(set_minus(p, {x}), set_minus(n, {-x}));
      if (!taut(r)) out.insert(r);
    }
  return out;
}

// ∀ univ ∃ exist. matrix, by recursion over the prefix.
inline bool forall_exists(const std::vector<int>& univ, const std::vector<int>& exist,
                          const RFormula& matrix) {
  return !any_assignment(univ, {}, [&](const Assign& a) {
    return !any_assignment(exist, a, [&](const Assign& b) { return sat_all(b, matrix); });
  });
}

// Unit propagation on F \ {c} under ¬c reaches a conflict.
inline bool up_refutes(const RFormula& f, const RClause& c) {
  if (taut(c)) return true;
  Assign a;
  for (int l : c) a[std::abs(l)] = l < 0;
  RFormula g = f;
  g.erase(c);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& d : g) {
      int unassigned = 0, last = 0;
      bool satisfied = false;
      for (int l : d) {
        auto it = a.find(std::abs(l));
        if (it == a.end()) {
          ++unassigned;
          last = l;
        } else if (it->second == (l > 0)) {
          satisfied = true;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return true;
      if (unassigned == 1) {
        a[std::abs(last)] = last > 0;
        changed = true;
      }
    }
  }
  return false;
}

inline blockcheck::Formula to_formula(const RFormula& f) {
  std::vector<std::vector<int>> cs;
  for (const auto& c : f) cs.emplace_back(c.begin(), c.end());
  return blockcheck::Formula::from_dimacs(cs);
}

}  // namespace ref
