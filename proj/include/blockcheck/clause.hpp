#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "blockcheck/literal.hpp"

namespace blockcheck {

/// A clause as a set of literals, kept sorted in canonical literal order.
///
/// Duplicate literals collapse; complementary pairs are allowed (the clause
/// is then a tautology).
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);
  Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

  /// Builds a clause from DIMACS integers (no terminating zero).
  static Clause from_dimacs(std::span<const int> lits);
  static Clause from_dimacs(std::initializer_list<int> lits) {
    return from_dimacs(std::span<const int>(lits.begin(), lits.size()));
  }

  std::span<const Lit> lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  Lit operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }
  bool contains_var(Var v) const { return contains(Lit::pos(v)) || contains(Lit::neg(v)); }

  /// True if every literal of this clause is in `other`.
  bool subset_of(const Clause& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
  }

  /// Variables of the clause, ascending.
  std::vector<Var> variables() const;

  std::vector<int> to_dimacs() const;
  /// "1 -2 3" (no terminating zero); "" for the empty clause.
  std::string to_string() const;

  Clause with(Lit l) const;
  Clause without(Lit l) const;
  /// Complement of every literal (L̄ for a literal set L).
  Clause complemented() const;

  friend Clause operator|(const Clause& a, const Clause& b);  // union
  friend Clause operator-(const Clause& a, const Clause& b);  // difference

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) { return a.lits_ <=> b.lits_; }

 private:
  std::vector<Lit> lits_;
};

}  // namespace blockcheck
