#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "blockcheck/clause.hpp"
#include "blockcheck/formula.hpp"
#include "blockcheck/qbf.hpp"

namespace blockcheck {

using Rng = std::mt19937_64;

struct RandomCnfOptions {
  std::size_t num_vars = 6;
  std::size_t num_clauses = 10;
  std::size_t min_len = 1;
  std::size_t max_len = 3;
  /// Variables are 1..num_vars (0 is never used, matching DIMACS numbering).
  bool allow_tautologies = false;
};

/// Clauses over distinct variables unless tautologies are allowed; duplicates
/// collapse, so the result may hold fewer than num_clauses clauses.
Formula random_cnf(Rng& rng, const RandomCnfOptions& options);

Clause random_clause(Rng& rng, std::size_t num_vars, std::size_t min_len, std::size_t max_len);

struct RandomInstanceOptions {
  std::size_t max_vars = 8;
  std::size_t max_clauses = 12;
  std::size_t max_len = 4;
};

/// A formula and a non-tautological clause. The clause is sometimes a member
/// of the formula, and clauses are biased towards meeting its complement so
/// that resolution environments are rarely empty.
struct RandomInstance {
  Formula formula;
  Clause clause;
};
RandomInstance random_instance(Rng& rng, const RandomInstanceOptions& options = {});

/// ∀X ∃Y matrix with |X| + |Y| ≤ max_vars and both blocks non-empty when
/// max_vars ≥ 2. Every matrix variable is quantified.
QbfInstance random_forall_exists(Rng& rng, std::size_t max_vars = 6, std::size_t max_clauses = 8);

}  // namespace blockcheck
