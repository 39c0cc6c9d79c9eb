#include "blockcheck/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace blockcheck {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// `len` literals over distinct variables drawn from `pool`.
std::vector<Lit> pick_literals(Rng& rng, std::vector<std::uint32_t> pool, std::size_t len) {
  std::shuffle(pool.begin(), pool.end(), rng);
  len = std::min(len, pool.size());
  std::vector<Lit> out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(coin(rng) ? Lit::pos(Var{pool[i]}) : Lit::neg(Var{pool[i]}));
  return out;
}

std::vector<std::uint32_t> var_range(std::size_t from, std::size_t to) {
  std::vector<std::uint32_t> v(to - from + 1);
  std::iota(v.begin(), v.end(), static_cast<std::uint32_t>(from));
  return v;
}

}  // namespace

Clause random_clause(Rng& rng, std::size_t num_vars, std::size_t min_len, std::size_t max_len) {
  if (num_vars == 0) return Clause{};
  return Clause(pick_literals(rng, var_range(1, num_vars), uniform(rng, min_len, max_len)));
}

Formula random_cnf(Rng& rng, const RandomCnfOptions& o) {
  Formula f;
  if (o.num_vars == 0) return f;
  for (std::size_t i = 0; i < o.num_clauses; ++i) {
    const std::size_t len = uniform(rng, o.min_len, o.max_len);
    if (!o.allow_tautologies) {
      f.add(Clause(pick_literals(rng, var_range(1, o.num_vars), len)));
      continue;
    }
    std::vector<Lit> lits;
    for (std::size_t j = 0; j < len; ++j) {
      const auto v = static_cast<std::uint32_t>(uniform(rng, 1, o.num_vars));
      lits.push_back(coin(rng) ? Lit::pos(Var{v}) : Lit::neg(Var{v}));
    }
    f.add(Clause(std::move(lits)));
  }
  return f;
}

RandomInstance random_instance(Rng& rng, const RandomInstanceOptions& o) {
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, o.max_vars));
  const auto all = var_range(1, n);
  const std::size_t clen = uniform(rng, 1, std::min<std::size_t>({o.max_len, n, 3}));
  const Clause c(pick_literals(rng, all, clen));

  RandomInstance inst{.formula = {}, .clause = c};
  const bool include_c = coin(rng, 0.3);
  const std::size_t m = uniform(rng, 1, o.max_clauses - (include_c ? 1 : 0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t len = uniform(rng, 1, std::min(o.max_len, n));
    std::vector<Lit> lits;
    std::vector<std::uint32_t> pool = all;
    if (coin(rng, 0.7)) {
      // Meet the complement of c so the clause lands in the environment.
      const Lit l = c.lits()[uniform(rng, 0, c.size() - 1)];
      lits.push_back(~l);
      std::erase(pool, l.var().id());
    }
    if (lits.size() < len) {
      auto rest = pick_literals(rng, pool, len - lits.size());
      lits.insert(lits.end(), rest.begin(), rest.end());
    }
    inst.formula.add(Clause(std::move(lits)));
  }
  if (include_c) inst.formula.add(c);
  return inst;
}

QbfInstance random_forall_exists(Rng& rng, std::size_t max_vars, std::size_t max_clauses) {
  const std::size_t total = uniform(rng, std::min<std::size_t>(2, max_vars), max_vars);
  const std::size_t nx = total >= 2 ? uniform(rng, 1, total - 1) : 0;
  QbfInstance q;
  for (std::size_t i = 1; i <= total; ++i) (i <= nx ? q.universals : q.existentials).push_back(Var{static_cast<std::uint32_t>(i)});
  const std::size_t m = uniform(rng, 1, max_clauses);
  for (std::size_t i = 0; i < m; ++i)
    q.matrix.add(random_clause(rng, total, 1, std::min<std::size_t>(3, total)));
  return q;
}

}  // namespace blockcheck
