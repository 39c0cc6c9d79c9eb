#include <gtest/gtest.h>

#include "blockcheck/cnf.hpp"
#include "blockcheck/dimacs.hpp"
#include "blockcheck/engine.hpp"
#include "blockcheck/error.hpp"
#include "blockcheck/oracle.hpp"
#include "blockcheck/random.hpp"
#include "blockcheck/trace_io.hpp"
#include "reference.hpp"

using namespace blockcheck;

namespace {

Clause cl(std::initializer_list<int> lits) { return Clause::from_dimacs(lits); }
std::vector<Lit> lits(std::initializer_list<int> v) {
  std::vector<Lit> out;
  for (int x : v) out.push_back(Lit::from_dimacs(x));
  return out;
}
PartialAssignment tau(std::vector<int> v) { return PartialAssignment::from_dimacs(v); }

// a=1 b=2 c=3
const Formula kLitBlocked = Formula::from_dimacs({{-1, 3}, {-2, -1}, {1, 2}});
// a=1 b=2 x=3
const Formula kFull = Formula::from_dimacs({{3, 2, -1}, {-2, -3}, {-2, 1}, {1, 2}});

// Replays the removals on `original`, re-checking every witness against the
// formula state at removal time.
void expect_replayable(const Formula& original, const EliminationResult& r, const EliminationConfig& cfg) {
  Formula state = original;
  for (const auto& e : r.trace.entries) {
    ASSERT_TRUE(state.contains(e.clause));
    const auto again = check_clause(state, e.clause, e.property, cfg);
    ASSERT_TRUE(again);
    EXPECT_EQ(*again, e);
    state.erase(e.clause);
  }
  EXPECT_EQ(state, r.formula);
}

}  // namespace

TEST(Properties, TagsRoundTrip) {
  for (Property p : all_properties()) EXPECT_EQ(parse_property(property_tag(p)), p);
  EXPECT_FALSE(parse_property("nope"));
  EXPECT_TRUE(is_local(Property::supbc));
  EXPECT_FALSE(is_local(Property::at));
}

TEST(Eliminate, LiteralBlockedInstance) {
  const EliminationConfig cfg{.property = Property::bc};
  const auto r = eliminate_clauses(kLitBlocked, cfg);
  // (¬a∨c) comes first in id order and c is pure
  ASSERT_FALSE(r.trace.entries.empty());
  EXPECT_EQ(r.trace.entries.front().clause, cl({-1, 3}));
  EXPECT_EQ(r.trace.entries.front().witness, lits({3}));
  expect_replayable(kLitBlocked, r, cfg);
  EXPECT_EQ(ref::satisfiable(ref::to_ref(kLitBlocked)), ref::satisfiable(ref::to_ref(r.formula)));
}

TEST(Eliminate, SetBlockedInstance) {
  const Formula f = Formula::from_dimacs({{1, 2}, {-1, 2}, {1, -2}});
  const EliminationConfig cfg{.property = Property::setbc};
  const auto r = eliminate_clauses(f, cfg);
  ASSERT_FALSE(r.trace.entries.empty());
  EXPECT_EQ(r.trace.entries.front().clause, cl({1, 2}));
  EXPECT_EQ(r.trace.entries.front().witness, lits({1, 2}));
  expect_replayable(f, r, cfg);
}

TEST(Eliminate, Deterministic) {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const Formula f = random_cnf(rng, {.num_vars = 8, .num_clauses = 14, .min_len = 1, .max_len = 3});
    for (Property p : all_properties()) {
      const EliminationConfig cfg{.property = p};
      const auto a = eliminate_clauses(f, cfg);
      const auto b = eliminate_clauses(f, cfg);
      EXPECT_EQ(a.trace, b.trace);
      EXPECT_EQ(a.formula, b.formula);
    }
  }
}

TEST(Eliminate, ReplayableAndSatisfiabilityPreserving) {
  Rng rng(62);
  for (int i = 0; i < 100; ++i) {
    const Formula f = random_cnf(rng, {.num_vars = 3 + rng() % 8, .num_clauses = 4 + rng() % 14,
                                       .min_len = 1, .max_len = 3});
    for (Property p : all_properties()) {
      for (ClauseOrder order : {ClauseOrder::ascending_id, ClauseOrder::descending_length}) {
        const EliminationConfig cfg{.property = p, .order = order};
        const auto r = eliminate_clauses(f, cfg);
        expect_replayable(f, r, cfg);
        EXPECT_EQ(ref::satisfiable(ref::to_ref(f)), ref::satisfiable(ref::to_ref(r.formula)))
            << property_tag(p) << '\n'
            << write_dimacs(f);
      }
    }
  }
}

TEST(Eliminate, SkipsClausesOverCap) {
  // every clause has one external variable
  const Formula f = Formula::from_dimacs({{1, 2}, {-1, 3}});
  const auto r = eliminate_clauses(f, {.property = Property::supbc, .ext_cap = 0});
  EXPECT_EQ(r.skipped.size(), 2u);
  EXPECT_EQ(r.formula, f);
  EXPECT_EQ(eliminate_clauses(f, {.property = Property::supbc, .ext_cap = 1}).formula.size(), 0u);
}

TEST(Reconstruct, LiteralBlockedInstance) {
  // trace removes (a∨b) by b; a=b=c=0 repairs by flipping b
  EliminationTrace trace{{TraceEntry{.clause = cl({1, 2}), .property = Property::bc, .witness = lits({2}), .super = {}}}};
  const auto m = reconstruct_model(trace, kLitBlocked, tau({-1, -2, -3}));
  EXPECT_EQ(m.to_dimacs(), (std::vector<int>{-1, 2, -3}));
  EXPECT_TRUE(satisfies(m, kLitBlocked));
}

TEST(Reconstruct, FullBlockingFlipsBoth) {
  // remove only (a∨b); x=0 selects L={a,b}
  const auto sup = check_clause(kFull, cl({1, 2}), Property::supbc);
  ASSERT_TRUE(sup);
  EliminationTrace trace{{*sup}};
  const auto m = reconstruct_model(trace, kFull, tau({-1, -2, -3}));
  EXPECT_EQ(m.to_dimacs(), (std::vector<int>{1, 2, -3}));
  EXPECT_TRUE(satisfies(m, kFull));

  auto compact = *sup;
  compact.super->per_tau.clear();
  EXPECT_EQ(reconstruct_model(EliminationTrace{{compact}}, kFull, tau({-1, -2, -3})), m);
}

TEST(Reconstruct, UnchangedWhenSatisfied) {
  EliminationTrace trace{{TraceEntry{.clause = cl({1, 2}), .property = Property::bc, .witness = lits({2}), .super = {}}}};
  const auto m = reconstruct_model(trace, kLitBlocked, tau({1, -2, 3}));
  EXPECT_EQ(m.to_dimacs(), (std::vector<int>{1, -2, 3}));
}

TEST(Reconstruct, CorruptTraceRejected) {
  // claims (a) is blocked although (¬a) stays in the formula
  const Formula f = Formula::from_dimacs({{1}, {-1, 2}, {-2}});
  EliminationTrace trace{{TraceEntry{.clause = cl({1}), .property = Property::supbc, .witness = {}, .super = {}}}};
  EXPECT_THROW(reconstruct_model(trace, f, tau({-1, -2})), ValidationError);
}

TEST(Reconstruct, EndToEnd) {
  Rng rng(63);
  for (Property p : all_properties()) {
    for (bool compact : {false, true}) {
      int tested = 0;
      while (tested < 60) {
        const Formula f = random_cnf(rng, {.num_vars = 3 + rng() % 8, .num_clauses = 3 + rng() % 14,
                                           .min_len = 1, .max_len = 3});
        const auto r = eliminate_clauses(f, {.property = p, .compact = compact});
        const auto m = find_model(r.formula);
        if (!m) {
          EXPECT_FALSE(ref::satisfiable(ref::to_ref(f)));
          continue;
        }
        ++tested;
        const auto repaired = reconstruct_model(r.trace, f, *m);
        EXPECT_TRUE(satisfies(repaired, f)) << property_tag(p) << '\n' << write_dimacs(f);
        // only variables of removed clauses change
        for (Var v : f.variables()) {
          bool touched = false;
          for (const auto& e : r.trace.entries) touched = touched || e.clause.contains_var(v);
          if (!touched) EXPECT_EQ(repaired.value(v), m->value(v).value_or(false));
        }
      }
    }
  }
}

TEST(Classify, MatrixRespectsHierarchy) {
  EXPECT_TRUE(classify(Formula{}, all_properties()).clauses.empty());
  Rng rng(64);
  const std::vector<Property> props(all_properties().begin(), all_properties().end());
  auto col = [&](Property p) { return std::find(props.begin(), props.end(), p) - props.begin(); };
  for (int i = 0; i < 100; ++i) {
    const Formula f = random_cnf(rng, {.num_vars = 6, .num_clauses = 10, .min_len = 1, .max_len = 3});
    const auto one = classify(f, props, {}, 1);
    const auto many = classify(f, props, {}, 4);
    EXPECT_EQ(one.cells, many.cells);
    EXPECT_EQ(one.clauses, many.clauses);
    for (const auto& row : one.cells) {
      auto yes = [&](Property p) { return row[col(p)] == Cell::yes; };
      EXPECT_TRUE(!yes(Property::bc) || yes(Property::setbc));
      EXPECT_TRUE(!yes(Property::setbc) || yes(Property::supbc));
      EXPECT_EQ(yes(Property::rt), yes(Property::bc));
      EXPECT_TRUE(!yes(Property::abc) || yes(Property::rat));
    }
  }
}

TEST(Classify, IncomparabilityRows) {
  const std::vector<Property> props{Property::setbc, Property::supbc, Property::at, Property::rat};
  // a=1 b=2 x=3 c=4: AT ⊄ SET_BC, RAT ⊄ SUP_BC
  const Formula p72 = Formula::from_dimacs({{-1, 3}, {-2, 3}, {-4, 3}, {1, 2}, {1, 2, 4}});
  const auto r = classify(p72, props);
  const auto it = std::find(r.clauses.begin(), r.clauses.end(), cl({1, 2, 4}));
  ASSERT_NE(it, r.clauses.end());
  const auto& row = r.cells[it - r.clauses.begin()];
  EXPECT_EQ(row, (std::vector<Cell>{Cell::no, Cell::no, Cell::yes, Cell::yes}));
}

TEST(TraceIo, RoundTrip) {
  Rng rng(65);
  for (int i = 0; i < 100; ++i) {
    const Formula f = random_cnf(rng, {.num_vars = 6, .num_clauses = 10, .min_len = 1, .max_len = 3});
    for (Property p : {Property::bc, Property::setbc, Property::supbc, Property::rat, Property::at}) {
      for (bool compact : {false, true}) {
        const auto r = eliminate_clauses(f, {.property = p, .compact = compact});
        const auto text = write_trace(r.trace);
        const auto back = parse_trace(text);
        EXPECT_EQ(write_trace(back), text);
        ASSERT_EQ(back.entries.size(), r.trace.entries.size());
        for (std::size_t j = 0; j < back.entries.size(); ++j) {
          EXPECT_EQ(back.entries[j].clause, r.trace.entries[j].clause);
          EXPECT_EQ(back.entries[j].witness, r.trace.entries[j].witness);
          if (p == Property::supbc && !compact)
            EXPECT_EQ(back.entries[j].super->per_tau, r.trace.entries[j].super->per_tau);
        }
      }
    }
  }
}

TEST(TraceIo, Format) {
  const auto sup = check_clause(kFull, cl({1, 2}), Property::supbc);
  ASSERT_TRUE(sup);
  EliminationTrace t{{TraceEntry{.clause = cl({1, 2}), .property = Property::bc, .witness = lits({2}), .super = {}},
                      *sup}};
  EXPECT_EQ(write_trace(t), "t blockcheck 1\nd bc 1 2 0 w 2 0\nd supbc 1 2 0 w 0\ns -3 0 1 2 0\ns 3 0 1 0\n");
  EXPECT_THROW(parse_trace("d bc 1 0 w 1 0\n"), ParseError);
  EXPECT_THROW(parse_trace("t blockcheck 1\nd xx 1 0 w 1 0\n"), ParseError);
  EXPECT_THROW(parse_trace("t blockcheck 1\ns 1 0 1 0\n"), ParseError);
}

TEST(ModelIo, Parse) {
  EXPECT_EQ(parse_model("c x\ns SATISFIABLE\nv 1 -2\nv 3 0\n").to_dimacs(), (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(write_model(tau({-1, 2})), "v -1 2 0\n");
  EXPECT_THROW(parse_model("s UNSATISFIABLE\n"), ParseError);
}
