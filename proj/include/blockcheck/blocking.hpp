#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockcheck/assignment.hpp"
#include "blockcheck/clause.hpp"
#include "blockcheck/formula.hpp"

namespace blockcheck {

inline constexpr std::size_t kDefaultExtCap = 16;

/// One entry of a super-blocking witness: an assignment over exactly the
/// external variables and a set that blocks the clause in F|τ.
struct TauBlockingSet {
  PartialAssignment tau;
  Clause blocking_set;

  friend bool operator==(const TauBlockingSet&, const TauBlockingSet&) = default;
};

/// Evidence for a positive blocking verdict.
struct BlockingWitness {
  enum class Kind { literal, set, super };

  Kind kind = Kind::literal;
  std::optional<Lit> literal;        // Kind::literal
  std::optional<Clause> set;         // Kind::set
  std::vector<Var> external_vars;    // Kind::super
  std::vector<TauBlockingSet> per_tau;  // Kind::super, lexicographic τ order; empty in compact mode

  /// Blocking set recorded for `tau` (matched on the external variables).
  std::optional<Clause> set_for(const PartialAssignment& tau) const;

  friend bool operator==(const BlockingWitness&, const BlockingWitness&) = default;
};

/// `l` blocks `c`: C ∪ (D \ {l̄}) is a tautology for every D ∈ F_l̄.
/// Throws PreconditionError unless l ∈ c.
bool literal_blocks(const Formula& f, const Clause& c, Lit l);

/// First blocking literal in canonical order.
std::optional<BlockingWitness> is_literal_blocked(const Formula& f, const Clause& c);

/// `blocking_set` blocks `c`: (C \ L) ∪ L̄ ∪ D is a tautology for every
/// D ∈ F_L̄. Throws PreconditionError when L is empty or not a subset of c.
bool set_blocks(const Formula& f, const Clause& c, const Clause& blocking_set);

struct SetSearchStats {
  /// Candidate sets passed to the blocking test.
  std::uint64_t candidates_tested = 0;
};

/// Searches non-empty L ⊆ c by increasing size, lexicographically within a
/// size, up to `max_size` (|c| when unset). A tautology short-circuits to
/// its first complementary pair when sets of size two are allowed.
std::optional<BlockingWitness> is_set_blocked(const Formula& f, const Clause& c,
                                              std::optional<std::size_t> max_size = std::nullopt,
                                              SetSearchStats* stats = nullptr);

/// Same search restricted to a candidate clause list, which must contain
/// every clause of F that meets c̄ and may not matter otherwise. Used by the
/// super-blocking loop and by model reconstruction.
std::optional<Clause> find_blocking_set(std::span<const Clause> candidates, const Clause& c,
                                        std::optional<std::size_t> max_size = std::nullopt,
                                        SetSearchStats* stats = nullptr);

struct SuperBlockingOptions {
  std::optional<std::size_t> max_size;  // k
  std::size_t ext_cap = kDefaultExtCap;
  /// Keep the blocking set of every τ; compact mode keeps only the verdict.
  bool keep_per_tau = true;
};

struct SuperBlockingResult {
  std::optional<BlockingWitness> witness;
  /// First assignment over the external variables with no blocking set.
  std::optional<PartialAssignment> failing_tau;

  bool blocked() const { return witness.has_value(); }
};

/// Runs the set-blocking search in F|τ for every total τ over exactly
/// ext_F(c). Throws CapExceeded when |ext_F(c)| > ext_cap.
SuperBlockingResult is_super_blocked(const Formula& f, const Clause& c,
                                     const SuperBlockingOptions& options = {});

/// Σ_{i=1..k} C(n, i). Throws PreconditionError unless 1 ≤ k ≤ n.
std::uint64_t count_candidate_sets(std::size_t n, std::size_t k);

}  // namespace blockcheck
