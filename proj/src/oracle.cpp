#include "blockcheck/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "blockcheck/cnf.hpp"
#include "blockcheck/error.hpp"

namespace blockcheck {
namespace {

// Clauses compiled to bit masks over a variable universe; universe[i] owns
// bit (n - 1 - i) so that counting upwards walks assignments in
// lexicographic order.
class BitMatrix {
 public:
  BitMatrix(const std::vector<Var>& universe, std::span<const Clause> clauses)
      : n_(universe.size()) {
    for (const Clause& c : clauses) {
      std::uint64_t pos = 0, neg = 0;
      for (Lit l : c) {
        auto it = std::lower_bound(universe.begin(), universe.end(), l.var());
        if (it == universe.end() || *it != l.var())
          throw PreconditionError("variable " + std::to_string(l.var().id()) +
                                  " outside enumeration universe");
        const std::uint64_t bit = bit_of(static_cast<std::size_t>(it - universe.begin()));
        (l.positive() ? pos : neg) |= bit;
      }
      pos_.push_back(pos);
      neg_.push_back(neg);
    }
  }

  std::uint64_t bit_of(std::size_t index) const { return std::uint64_t{1} << (n_ - 1 - index); }

  bool satisfied_by(std::uint64_t a) const {
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (((a & pos_[i]) | (~a & neg_[i])) == 0) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> pos_, neg_;
};

void check_cap(const char* what, std::size_t count, std::size_t cap) {
  if (count > cap || count >= 63) throw CapExceeded(what, count, cap);
}

std::uint64_t mask_of(const std::vector<Var>& universe, const std::vector<Var>& subset) {
  std::uint64_t mask = 0;
  const std::size_t n = universe.size();
  for (Var v : subset) {
    auto i = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), v) -
                                      universe.begin());
    mask |= std::uint64_t{1} << (n - 1 - i);
  }
  return mask;
}

bool exists_submask(std::uint64_t fixed, std::uint64_t free_mask, const BitMatrix& m) {
  // Enumerates every assignment of the free bits, including all-zero.
  std::uint64_t sub = 0;
  while (true) {
    if (m.satisfied_by(fixed | sub)) return true;
    if (sub == free_mask) return false;
    sub = (sub - free_mask) & free_mask;
  }
}

std::vector<Var> merged(std::vector<Var> a, const std::vector<Var>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

bool satisfies(const PartialAssignment& t, const Formula& f) {
  for (ClauseId id : f.ids())
    if (!t.satisfies(f.clause(id))) return false;
  return true;
}

ModelSet enumerate_models(const Formula& f, std::vector<Var> universe, std::size_t cap) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  check_cap("model enumeration", universe.size(), cap);
  const auto clauses = f.clauses();
  BitMatrix m(universe, clauses);
  ModelSet out{universe, {}};
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t a = 0; a < count; ++a)
    if (m.satisfied_by(a)) out.models.push_back(PartialAssignment::from_bits(universe, a));
  return out;
}

std::optional<PartialAssignment> find_model(const Formula& f, std::size_t cap) {
  const auto universe = f.variables();
  check_cap("satisfiability check", universe.size(), cap);
  const auto clauses = f.clauses();
  BitMatrix m(universe, clauses);
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t a = 0; a < count; ++a)
    if (m.satisfied_by(a)) return PartialAssignment::from_bits(universe, a);
  return std::nullopt;
}

bool is_satisfiable(const Formula& f, std::size_t cap) { return find_model(f, cap).has_value(); }

bool is_redundant(const Formula& f, const Clause& c, std::size_t cap) {
  return is_satisfiable(f.without(c), cap) == is_satisfiable(f.with(c), cap);
}

std::optional<PartialAssignment> semantic_blocking_counterexample(const Formula& f,
                                                                  const Clause& c,
                                                                  std::size_t cap) {
  const auto env = resolution_environment(f, c).clauses();
  const auto local = c.variables();
  const auto universe = merged(variables_of(env), local);
  check_cap("semantic blocking check", universe.size(), cap);

  auto with_c = env;
  with_c.push_back(c);
  const BitMatrix env_m(universe, env);
  const BitMatrix full_m(universe, with_c);
  const std::uint64_t local_mask = mask_of(universe, local);

  std::unordered_map<std::uint64_t, bool> extendable;  // keyed by external part
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t a = 0; a < count; ++a) {
    if (!env_m.satisfied_by(a)) continue;
    const std::uint64_t ext = a & ~local_mask;
    auto [it, fresh] = extendable.try_emplace(ext, false);
    if (fresh) it->second = exists_submask(ext, local_mask, full_m);
    if (!it->second) return PartialAssignment::from_bits(universe, a);
  }
  return std::nullopt;
}

bool is_semantically_blocked_oracle(const Formula& f, const Clause& c, std::size_t cap) {
  return !semantic_blocking_counterexample(f, c, cap).has_value();
}

bool eval_forall_exists(const QbfInstance& q, std::size_t cap) {
  auto universals = q.universals;
  auto existentials = q.existentials;
  std::sort(universals.begin(), universals.end());
  std::sort(existentials.begin(), existentials.end());
  universals.erase(std::unique(universals.begin(), universals.end()), universals.end());
  existentials.erase(std::unique(existentials.begin(), existentials.end()), existentials.end());

  std::vector<Var> overlap;
  std::set_intersection(universals.begin(), universals.end(), existentials.begin(),
                        existentials.end(), std::back_inserter(overlap));
  if (!overlap.empty())
    throw PreconditionError("malformed prefix: variable " + std::to_string(overlap.front().id()) +
                            " quantified twice");
  const auto universe = merged(universals, existentials);
  for (Var v : q.matrix.variables())
    if (!std::binary_search(universe.begin(), universe.end(), v))
      throw PreconditionError("malformed prefix: free variable " + std::to_string(v.id()));
  check_cap("forall-exists evaluation", universe.size(), cap);

  const auto clauses = q.matrix.clauses();
  const BitMatrix m(universe, clauses);
  const std::uint64_t g_mask = mask_of(universe, universals);
  const std::uint64_t l_mask = mask_of(universe, existentials);
  std::uint64_t g = 0;
  while (true) {
    if (!exists_submask(g, l_mask, m)) return false;
    if (g == g_mask) return true;
    g = (g - g_mask) & g_mask;
  }
}

Formula nonlocality_witness(const Formula& f, const Clause& c, std::size_t cap) {
  auto tau = semantic_blocking_counterexample(f, c, cap);
  if (!tau) throw PreconditionError("nonlocality_witness: clause is semantically blocked");
  Formula out = resolution_environment(f, c);
  out.add(c);
  for (Lit l : tau->literals())
    if (!c.contains_var(l.var())) out.add(Clause{l});
  return out;
}

}  // namespace blockcheck
