#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "blockcheck/assignment.hpp"
#include "blockcheck/blocking.hpp"
#include "blockcheck/formula.hpp"

namespace blockcheck {

enum class Property { t, s, bc, setbc, supbc, at, as, abc, rt, rs, rat, ras };

std::string_view property_tag(Property p);
std::optional<Property> parse_property(std::string_view tag);
std::span<const Property> all_properties();
/// Membership depends only on the resolution environment.
bool is_local(Property p);

enum class ClauseOrder { ascending_id, descending_length };

struct EliminationConfig {
  Property property = Property::bc;
  std::optional<std::size_t> k;
  std::size_t ext_cap = kDefaultExtCap;
  ClauseOrder order = ClauseOrder::ascending_id;
  std::size_t max_rounds = 1000;
  /// supbc only: drop per-τ blocking sets; reconstruction recomputes them.
  bool compact = false;
};

/// One removed clause with the evidence that justified removing it.
struct TraceEntry {
  Clause clause;
  Property property = Property::bc;
  /// Blocking literal (bc, rt, abc, R-lifted pivots) or blocking set (setbc).
  std::vector<Lit> witness;
  /// supbc only.
  std::optional<BlockingWitness> super;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct EliminationTrace {
  std::vector<TraceEntry> entries;
  friend bool operator==(const EliminationTrace&, const EliminationTrace&) = default;
};

struct EliminationResult {
  Formula formula;
  EliminationTrace trace;
  /// Clauses whose check exceeded a cap at least once.
  std::vector<Clause> skipped;
  std::size_t rounds = 0;
};

/// Decides `p` for `c` in `f` and returns the trace entry a removal would
/// record, or nullopt. Throws CapExceeded when the check is out of bounds.
std::optional<TraceEntry> check_clause(const Formula& f, const Clause& c, Property p,
                                       const EliminationConfig& config = {});

/// Removes clauses the configured checker marks redundant until a fixpoint
/// or the round limit. Removing D re-queues exactly the clauses whose
/// environment contained D; for non-local properties any removal schedules a
/// full rescan.
EliminationResult eliminate_clauses(const Formula& f, const EliminationConfig& config);

/// Repairs `model` (a model of the simplified formula, unassigned variables
/// read as false) into a model of `original` by replaying the trace
/// backwards. Throws ValidationError when a removed clause cannot be
/// repaired.
PartialAssignment reconstruct_model(const EliminationTrace& trace, const Formula& original,
                                    const PartialAssignment& model);

enum class Cell { no, yes, cap };

struct ClassificationReport {
  std::vector<Clause> clauses;
  std::vector<Property> properties;
  std::vector<std::vector<Cell>> cells;  // [clause][property]
};

/// Membership matrix of every clause of `f` in each property. `jobs` > 1
/// checks clauses on worker threads; the report is the same either way.
ClassificationReport classify(const Formula& f, std::span<const Property> properties,
                              const EliminationConfig& config = {}, std::size_t jobs = 1);

}  // namespace blockcheck
