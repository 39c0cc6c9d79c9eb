#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "blockcheck/clause.hpp"
#include "blockcheck/literal.hpp"

namespace blockcheck {

using ClauseId = std::uint32_t;

/// A CNF formula as a set of clauses with a literal occurrence index.
///
/// Clauses get a stable id on insertion; removing a clause leaves its slot
/// dead so ids of the remaining clauses never change. Equality is set
/// equality of the live clauses.
class Formula {
 public:
  Formula() = default;
  Formula(std::initializer_list<Clause> clauses);
  explicit Formula(std::span<const Clause> clauses);

  /// Convenience for tests and bindings: one DIMACS-literal list per clause.
  static Formula from_dimacs(std::initializer_list<std::initializer_list<int>> clauses);
  static Formula from_dimacs(const std::vector<std::vector<int>>& clauses);

  /// Inserts `c` unless an equal clause is live; returns the id either way.
  ClauseId add(const Clause& c);
  /// Removes a live clause and updates the occurrence index.
  void remove(ClauseId id);
  /// Removes `c` if present; returns whether it was.
  bool erase(const Clause& c);

  bool contains(const Clause& c) const { return index_.contains(c); }
  std::optional<ClauseId> find(const Clause& c) const;
  bool alive(ClauseId id) const { return id < alive_.size() && alive_[id]; }
  const Clause& clause(ClauseId id) const { return slots_[id]; }

  std::size_t size() const { return index_.size(); }
  bool empty() const { return index_.empty(); }

  /// Live clause ids in canonical clause order.
  std::vector<ClauseId> ids() const;
  /// Live clause ids in insertion order.
  std::vector<ClauseId> ids_by_insertion() const;
  /// Live clauses in canonical order.
  std::vector<Clause> clauses() const;

  /// Ids of live clauses containing `l` (the set F_l), ascending by id.
  std::span<const ClauseId> occurrences(Lit l) const;
  /// F_L: ids of clauses containing some literal of `lits`, canonical order.
  std::vector<ClauseId> occurring_any(std::span<const Lit> lits) const;

  /// Variables occurring in some live clause, ascending.
  std::vector<Var> variables() const;
  /// Largest variable id occurring in a live clause (0 if none).
  std::uint32_t max_var() const;

  Formula with(const Clause& c) const;
  Formula without(const Clause& c) const;

  /// Rebuilds the occurrence index from the clause slots.
  void rebuild_occurrences();
  /// True when the occurrence index matches a fresh rebuild.
  bool occurrences_consistent() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.clauses() == b.clauses();
  }

 private:
  void grow_occurrences(Lit l);

  std::vector<Clause> slots_;
  std::vector<bool> alive_;
  std::map<Clause, ClauseId> index_;
  std::vector<std::vector<ClauseId>> occ_;
};

}  // namespace blockcheck
