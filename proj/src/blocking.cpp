#include "blockcheck/blocking.hpp"

#include <algorithm>

#include "blockcheck/cnf.hpp"
#include "blockcheck/error.hpp"

namespace blockcheck {
namespace {

bool meets(const Clause& d, const Clause& lits) {
  for (Lit l : lits)
    if (d.contains(l)) return true;
  return false;
}

// (C \ L) ∪ L̄ ∪ D is a tautology for every candidate D meeting L̄.
bool blocks_within(std::span<const Clause> candidates, const Clause& c, const Clause& set) {
  const Clause negated = set.complemented();
  const Clause base = (c - set) | negated;
  for (const Clause& d : candidates)
    if (meets(d, negated) && !is_tautology(base | d)) return false;
  return true;
}

std::vector<Clause> clauses_of(const Formula& f, std::span<const ClauseId> ids) {
  std::vector<Clause> out;
  out.reserve(ids.size());
  for (ClauseId id : ids) out.push_back(f.clause(id));
  return out;
}

bool tautology_shortcut(const Clause& c, std::optional<std::size_t> max_size) {
  return (!max_size || *max_size >= 2) && is_tautology(c);
}

}  // namespace

std::optional<Clause> BlockingWitness::set_for(const PartialAssignment& tau) const {
  const auto key = tau.restricted_to(external_vars);
  for (const auto& entry : per_tau)
    if (entry.tau == key) return entry.blocking_set;
  return std::nullopt;
}

bool literal_blocks(const Formula& f, const Clause& c, Lit l) {
  if (!c.contains(l))
    throw PreconditionError("literal " + std::to_string(l.to_dimacs()) + " not in clause");
  for (ClauseId id : f.occurrences(~l))
    if (!is_tautology(c | f.clause(id).without(~l))) return false;
  return true;
}

std::optional<BlockingWitness> is_literal_blocked(const Formula& f, const Clause& c) {
  for (Lit l : c)
    if (literal_blocks(f, c, l))
      return BlockingWitness{.kind = BlockingWitness::Kind::literal, .literal = l};
  return std::nullopt;
}

bool set_blocks(const Formula& f, const Clause& c, const Clause& blocking_set) {
  if (blocking_set.empty()) throw PreconditionError("blocking set must be non-empty");
  if (!blocking_set.subset_of(c))
    throw PreconditionError("blocking set must be a subset of the clause");
  const auto ids = f.occurring_any(blocking_set.complemented().lits());
  const auto candidates = clauses_of(f, ids);
  return blocks_within(candidates, c, blocking_set);
}

std::optional<Clause> find_blocking_set(std::span<const Clause> candidates, const Clause& c,
                                        std::optional<std::size_t> max_size,
                                        SetSearchStats* stats) {
  if (tautology_shortcut(c, max_size)) return complementary_pair(c);
  const std::size_t n = c.size();
  const std::size_t limit = std::min(n, max_size.value_or(n));
  std::vector<std::size_t> pick;
  std::vector<Lit> lits;
  for (std::size_t size = 1; size <= limit; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      lits.clear();
      for (std::size_t i : pick) lits.push_back(c[i]);
      const Clause set(lits);
      if (stats) ++stats->candidates_tested;
      if (blocks_within(candidates, c, set)) return set;
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<BlockingWitness> is_set_blocked(const Formula& f, const Clause& c,
                                              std::optional<std::size_t> max_size,
                                              SetSearchStats* stats) {
  const auto env = clauses_of(f, resolution_environment_ids(f, c));
  auto set = find_blocking_set(env, c, max_size, stats);
  if (!set) return std::nullopt;
  return BlockingWitness{.kind = BlockingWitness::Kind::set, .set = std::move(set)};
}

SuperBlockingResult is_super_blocked(const Formula& f, const Clause& c,
                                     const SuperBlockingOptions& options) {
  const auto ext = external_variables(f, c);
  if (ext.size() > options.ext_cap || ext.size() >= 63)
    throw CapExceeded("super-blocking check (external variables)", ext.size(), options.ext_cap);
  const auto env = clauses_of(f, resolution_environment_ids(f, c));

  BlockingWitness witness{.kind = BlockingWitness::Kind::super, .external_vars = ext};
  std::vector<Clause> remaining;
  const std::uint64_t count = std::uint64_t{1} << ext.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    auto tau = PartialAssignment::from_bits(ext, bits);
    remaining.clear();
    for (const Clause& d : env)
      if (!tau.satisfies(d)) remaining.push_back(d);
    auto set = find_blocking_set(remaining, c, options.max_size);
    if (!set) return {.witness = std::nullopt, .failing_tau = std::move(tau)};
    if (options.keep_per_tau) witness.per_tau.push_back({std::move(tau), std::move(*set)});
  }
  return {.witness = std::move(witness), .failing_tau = std::nullopt};
}

std::uint64_t count_candidate_sets(std::size_t n, std::size_t k) {
  if (k < 1 || k > n)
    throw PreconditionError("count_candidate_sets requires 1 <= k <= n (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (std::size_t i = 1; i <= k; ++i) {
    binom = binom * (n - i + 1) / i;
    total += binom;
  }
  return total;
}

}  // namespace blockcheck
