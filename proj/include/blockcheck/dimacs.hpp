#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockcheck/formula.hpp"

namespace blockcheck {

struct DimacsOptions {
  /// Reject count mismatches and out-of-range variables instead of warning.
  bool strict = false;
};

struct DimacsResult {
  Formula formula;
  std::size_t declared_vars = 0;
  std::size_t declared_clauses = 0;
  /// Clauses read, before duplicate clauses collapse.
  std::size_t clauses_read = 0;
  /// Clauses in input order after literal deduplication (duplicates kept).
  std::vector<Clause> clauses_in_order;
  std::vector<std::string> warnings;
};

DimacsResult parse_dimacs(std::istream& in, const DimacsOptions& options = {});
DimacsResult parse_dimacs(std::string_view text, const DimacsOptions& options = {});

/// Canonical DIMACS: header then clauses in canonical order. The header
/// variable count is the larger of `num_vars` and the largest variable used.
std::string write_dimacs(const Formula& f, std::size_t num_vars = 0);

/// Parses one clause given as "lits 0" (the trailing zero is optional).
Clause parse_clause(std::string_view text);

}  // namespace blockcheck
