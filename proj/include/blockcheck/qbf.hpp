#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "blockcheck/formula.hpp"

namespace blockcheck {

/// Prenex CNF with a ∀G ∃L prefix.
struct QbfInstance {
  std::vector<Var> universals;
  std::vector<Var> existentials;
  Formula matrix;
};

/// QDIMACS text: header, "a …0" and "e …0" lines (empty blocks omitted),
/// then the matrix in canonical clause order.
std::string write_qdimacs(const QbfInstance& q);

/// Reads a QDIMACS file with at most one universal block followed by at most
/// one existential block. Free matrix variables are accepted only when the
/// universal block is empty (they then join the existential block); otherwise
/// they would need a third block and ParseError is thrown.
QbfInstance parse_qdimacs(std::istream& in);
QbfInstance parse_qdimacs(std::string_view text);

}  // namespace blockcheck
