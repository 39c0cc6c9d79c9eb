#include "blockcheck/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <thread>

#include "blockcheck/asymmetric.hpp"
#include "blockcheck/cnf.hpp"
#include "blockcheck/error.hpp"

namespace blockcheck {
namespace {

constexpr std::array kProperties{Property::t,   Property::s,     Property::bc,  Property::setbc,
                                 Property::supbc, Property::at,  Property::as,  Property::abc,
                                 Property::rt,  Property::rs,    Property::rat, Property::ras};

constexpr std::array<std::string_view, 12> kTags{"t",  "s",   "bc", "setbc", "supbc", "at",
                                                 "as", "abc", "rt", "rs",    "rat",   "ras"};

std::optional<TraceEntry> entry(const Clause& c, Property p, std::vector<Lit> witness = {}) {
  return TraceEntry{.clause = c, .property = p, .witness = std::move(witness), .super = {}};
}

std::optional<TraceEntry> lifted(const Clause& c, Property p, BaseProperty base,
                                 const Formula& f) {
  auto v = r_lift(base, f, c);
  if (!v.holds) return std::nullopt;
  std::vector<Lit> w;
  if (v.pivot) w.push_back(*v.pivot);
  return entry(c, p, std::move(w));
}

std::vector<ClauseId> ordered(const Formula& f, std::vector<ClauseId> ids, ClauseOrder order) {
  std::sort(ids.begin(), ids.end());
  if (order == ClauseOrder::descending_length)
    std::stable_sort(ids.begin(), ids.end(), [&](ClauseId a, ClauseId b) {
      return f.clause(a).size() > f.clause(b).size();
    });
  return ids;
}

void make_true(PartialAssignment& model, std::span<const Lit> lits) {
  for (Lit l : lits) model.assign(l);
}

}  // namespace

std::string_view property_tag(Property p) { return kTags[static_cast<std::size_t>(p)]; }

std::optional<Property> parse_property(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i)
    if (kTags[i] == tag) return kProperties[i];
  return std::nullopt;
}

std::span<const Property> all_properties() { return kProperties; }

bool is_local(Property p) {
  switch (p) {
    case Property::t:
    case Property::bc:
    case Property::setbc:
    case Property::supbc:
    case Property::rt:
      return true;
    default:
      return false;
  }
}

std::optional<TraceEntry> check_clause(const Formula& f, const Clause& c, Property p,
                                       const EliminationConfig& config) {
  switch (p) {
    case Property::t:
      return is_tautology(c) ? entry(c, p) : std::nullopt;
    case Property::s:
      return is_subsumed(f, c) ? entry(c, p) : std::nullopt;
    case Property::bc:
      if (auto w = is_literal_blocked(f, c)) return entry(c, p, {*w->literal});
      return std::nullopt;
    case Property::setbc:
      if (auto w = is_set_blocked(f, c, config.k)) {
        auto lits = w->set->lits();
        return entry(c, p, std::vector<Lit>(lits.begin(), lits.end()));
      }
      return std::nullopt;
    case Property::supbc: {
      auto r = is_super_blocked(
          f, c, {.max_size = config.k, .ext_cap = config.ext_cap, .keep_per_tau = !config.compact});
      if (!r.blocked()) return std::nullopt;
      auto e = entry(c, p);
      e->super = std::move(r.witness);
      return e;
    }
    case Property::at:
      return is_AT(f, c) ? entry(c, p) : std::nullopt;
    case Property::as:
      return is_AS(f, c) ? entry(c, p) : std::nullopt;
    case Property::abc:
      if (auto l = asymmetric_blocking_literal(f, c)) return entry(c, p, {*l});
      return std::nullopt;
    case Property::rt:
      return lifted(c, p, BaseProperty::tautology, f);
    case Property::rs:
      return lifted(c, p, BaseProperty::subsumed, f);
    case Property::rat:
      return lifted(c, p, BaseProperty::asymmetric_tautology, f);
    case Property::ras:
      return lifted(c, p, BaseProperty::asymmetric_subsumed, f);
  }
  return std::nullopt;
}

EliminationResult eliminate_clauses(const Formula& f, const EliminationConfig& config) {
  EliminationResult result{.formula = f, .trace = {}, .skipped = {}, .rounds = 0};
  Formula& current = result.formula;
  std::set<Clause> skipped;
  const bool local = is_local(config.property);

  auto queue = ordered(current, current.ids_by_insertion(), config.order);
  while (!queue.empty() && result.rounds < config.max_rounds) {
    ++result.rounds;
    std::set<ClauseId> next;
    bool removed_any = false;
    for (ClauseId id : queue) {
      if (!current.alive(id)) continue;
      const Clause c = current.clause(id);
      std::optional<TraceEntry> e;
      try {
        e = check_clause(current, c, config.property, config);
      } catch (const CapExceeded&) {
        skipped.insert(c);
        continue;
      }
      if (!e) continue;
      current.remove(id);
      removed_any = true;
      result.trace.entries.push_back(std::move(*e));
      if (local)
        for (Lit l : c)
          for (ClauseId other : current.occurrences(~l)) next.insert(other);
    }
    if (!local && removed_any) {
      auto all = current.ids_by_insertion();
      next.insert(all.begin(), all.end());
    }
    queue = ordered(current, std::vector<ClauseId>(next.begin(), next.end()), config.order);
  }
  result.skipped.assign(skipped.begin(), skipped.end());
  return result;
}

PartialAssignment reconstruct_model(const EliminationTrace& trace, const Formula& original,
                                    const PartialAssignment& model) {
  PartialAssignment out = model;
  for (Var v : original.variables())
    if (!out.assigned(v)) out.assign(v, false);
  for (const auto& e : trace.entries)
    for (Lit l : e.clause)
      if (!out.assigned(l.var())) out.assign(l.var(), false);

  // Formula state right after the removal currently being undone.
  Formula state = original;
  for (const auto& e : trace.entries) state.erase(e.clause);

  for (auto it = trace.entries.rbegin(); it != trace.entries.rend(); ++it) {
    const TraceEntry& e = *it;
    state.add(e.clause);
    if (out.satisfies(e.clause)) continue;
    switch (e.property) {
      case Property::supbc: {
        std::optional<Clause> set;
        if (e.super && !e.super->per_tau.empty()) set = e.super->set_for(out);
        if (!set) {
          const auto ext = external_variables(state, e.clause);
          const auto tau = out.restricted_to(ext);
          std::vector<Clause> candidates;
          for (ClauseId id : resolution_environment_ids(state, e.clause))
            if (!tau.satisfies(state.clause(id))) candidates.push_back(state.clause(id));
          set = find_blocking_set(candidates, e.clause);
        }
        if (!set)
          throw ValidationError("no blocking set for removed clause " + e.clause.to_string());
        make_true(out, set->lits());
        break;
      }
      default:
        // Blocking literal, blocking set, or R-lift pivot; empty for
        // properties whose clauses are implied by the remaining formula.
        make_true(out, e.witness);
        break;
    }
    if (!out.satisfies(e.clause))
      throw ValidationError("repair failed for removed clause " + e.clause.to_string() + " (" +
                            std::string(property_tag(e.property)) + ")");
  }
  return out;
}

ClassificationReport classify(const Formula& f, std::span<const Property> properties,
                              const EliminationConfig& config, std::size_t jobs) {
  ClassificationReport report;
  report.clauses = f.clauses();
  report.properties.assign(properties.begin(), properties.end());
  report.cells.assign(report.clauses.size(), std::vector<Cell>(properties.size(), Cell::no));

  auto work = [&](std::size_t row) {
    for (std::size_t col = 0; col < properties.size(); ++col) {
      try {
        report.cells[row][col] =
            check_clause(f, report.clauses[row], properties[col], config) ? Cell::yes : Cell::no;
      } catch (const CapExceeded&) {
        report.cells[row][col] = Cell::cap;
      }
    }
  };

  jobs = std::max<std::size_t>(1, std::min(jobs, report.clauses.size()));
  if (jobs == 1) {
    for (std::size_t row = 0; row < report.clauses.size(); ++row) work(row);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t row = next++; row < report.clauses.size(); row = next++) work(row);
    });
  workers.clear();
  return report;
}

}  // namespace blockcheck
