#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockcheck/clause.hpp"
#include "blockcheck/literal.hpp"

namespace blockcheck {

/// Partial map from variables to truth values.
class PartialAssignment {
 public:
  PartialAssignment() = default;

  /// Assignment making every literal in `lits` true.
  static PartialAssignment from_literals(std::span<const Lit> lits);
  static PartialAssignment from_dimacs(std::span<const int> lits);

  /// Total assignment over `vars` read from the bits of `bits`; the first
  /// variable takes the most significant of the `vars.size()` bits.
  static PartialAssignment from_bits(std::span<const Var> vars, std::uint64_t bits);

  bool assigned(Var v) const {
    return v.id() < values_.size() && values_[v.id()] >= 0;
  }
  std::optional<bool> value(Var v) const {
    if (!assigned(v)) return std::nullopt;
    return values_[v.id()] == 1;
  }
  /// Truth value of a literal, or nullopt when its variable is unassigned.
  std::optional<bool> value(Lit l) const {
    auto v = value(l.var());
    if (!v) return std::nullopt;
    return *v == l.positive();
  }
  bool satisfies(Lit l) const { return value(l) == std::optional<bool>(true); }
  bool falsifies(Lit l) const { return value(l) == std::optional<bool>(false); }
  bool satisfies(const Clause& c) const;
  /// Every literal of `c` is assigned false.
  bool falsifies(const Clause& c) const;

  void assign(Var v, bool value);
  /// Makes `l` true.
  void assign(Lit l) { assign(l.var(), l.positive()); }
  void unassign(Var v);
  /// Interchanges the value of var(l); the variable must be assigned.
  void flip(Lit l);

  /// Bindings restricted to `vars`.
  PartialAssignment restricted_to(std::span<const Var> vars) const;

  /// Ascending list of assigned variables.
  std::vector<Var> domain() const;
  std::size_t size() const;
  /// Assigned variables as literals that are true, ascending by variable.
  std::vector<Lit> literals() const;
  std::vector<int> to_dimacs() const;

  /// True when `other` agrees with every binding of this assignment.
  bool subset_of(const PartialAssignment& other) const;

  friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) {
    return a.literals() == b.literals();
  }

 private:
  std::vector<std::int8_t> values_;  // -1 unassigned, 0 false, 1 true
};

}  // namespace blockcheck
