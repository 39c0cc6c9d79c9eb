#include <gtest/gtest.h>

#include "blockcheck/cnf.hpp"
#include "blockcheck/error.hpp"
#include "blockcheck/oracle.hpp"
#include "blockcheck/random.hpp"
#include "describe.hpp"
#include "reference.hpp"

using namespace blockcheck;

namespace {

Clause cl(std::initializer_list<int> lits) { return Clause::from_dimacs(lits); }

// a=1 b=2 x=3
const Formula kFullEnv = Formula::from_dimacs({{3, 2, -1}, {-2, -3}, {-2, 1}});
// a=1 b=2 x=3 c=4
const Formula kAtNotSet = Formula::from_dimacs({{-1, 3}, {-2, 3}, {-4, 3}, {1, 2}});
const Clause kAtNotSetClause = Clause::from_dimacs({1, 2, 4});

}  // namespace

TEST(Oracle, Satisfies) {
  // a=1 b=2 c=3, all false
  const auto tau = PartialAssignment::from_dimacs(std::vector<int>{-1, -2, -3});
  EXPECT_TRUE(satisfies(tau, Formula::from_dimacs({{-1, 3}, {-2, -1}})));
  EXPECT_FALSE(tau.satisfies(cl({1, 2})));
  EXPECT_TRUE(satisfies(tau, Formula{}));
  EXPECT_FALSE(satisfies(PartialAssignment::from_dimacs(std::vector<int>{1}), Formula::from_dimacs({{-1}})));
}

TEST(Oracle, Satisfiability) {
  EXPECT_TRUE(is_satisfiable(Formula::from_dimacs({{1, 2}, {-1, -2}})));
  EXPECT_FALSE(is_satisfiable(Formula::from_dimacs({{1}, {-1}})));
  EXPECT_FALSE(is_satisfiable(Formula{Clause{}}));
}

TEST(Oracle, CapExceeded) {
  Formula f;
  for (int v = 1; v <= 25; ++v) f.add(cl({v}));
  try {
    is_satisfiable(f);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.count(), 25u);
    EXPECT_EQ(e.cap(), kDefaultSatCap);
  }
}

TEST(Oracle, FirstModelIsLexicographic) {
  const auto m = find_model(Formula::from_dimacs({{1, 2}, {-1, -2}}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->to_dimacs(), (std::vector<int>{-1, 2}));
}

TEST(Oracle, Redundancy) {
  EXPECT_TRUE(is_redundant(Formula::from_dimacs({{1, 2}, {-1, -2}}), cl({-1, -2})));
  EXPECT_FALSE(is_redundant(Formula::from_dimacs({{1}}), cl({-1})));
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Formula f = random_cnf(rng, {.num_vars = 5, .num_clauses = 8});
    EXPECT_TRUE(is_redundant(f, cl({1, -1, 2})));
  }
}

TEST(Oracle, SemanticBlocking) {
  EXPECT_TRUE(is_semantically_blocked_oracle(kFullEnv, cl({1, 2})));
  EXPECT_FALSE(is_semantically_blocked_oracle(kAtNotSet, kAtNotSetClause));
  // empty environment
  EXPECT_TRUE(is_semantically_blocked_oracle(Formula::from_dimacs({{2, 3}, {-2}}), cl({1})));
  // (a) with both (¬a∨b) and (¬a∨¬b): the only τ over {b} cannot be repaired by flipping a
  EXPECT_FALSE(is_semantically_blocked_oracle(Formula::from_dimacs({{-1, 2}, {-1, -2}}), cl({1})));
}

TEST(Oracle, SemanticBlockingMatchesDefinition) {
  Rng rng(8);
  for (int i = 0; i < 400; ++i) {
    const auto inst = random_instance(rng);
    EXPECT_EQ(is_semantically_blocked_oracle(inst.formula, inst.clause),
              ref::sem_blocked(ref::to_ref(inst.formula), ref::to_ref(inst.clause)))
        << describe(inst);
  }
}

TEST(Oracle, SemanticBlockingImpliesRedundancy) {
  Rng rng(9);
  for (int i = 0; i < 400; ++i) {
    const auto inst = random_instance(rng);
    if (is_semantically_blocked_oracle(inst.formula, inst.clause))
      EXPECT_TRUE(is_redundant(inst.formula, inst.clause));
  }
}

TEST(Oracle, Locality) {
  Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    auto inst = random_instance(rng);
    Formula other = resolution_environment(inst.formula, inst.clause);
    // add clauses without complementary literals to c
    for (int j = 0; j < 3; ++j) {
      Clause d = random_clause(rng, 8, 1, 3);
      bool meets = false;
      for (Lit l : d) meets = meets || inst.clause.contains(~l);
      if (!meets) other.add(d);
    }
    ASSERT_EQ(resolution_environment(other, inst.clause), resolution_environment(inst.formula, inst.clause));
    EXPECT_EQ(is_semantically_blocked_oracle(inst.formula, inst.clause),
              is_semantically_blocked_oracle(other, inst.clause));
  }
}

TEST(Oracle, ForallExists) {
  // ∀{x}∃{a,b}. env ∪ {C}
  QbfInstance q{.universals = {Var{3}}, .existentials = {Var{1}, Var{2}}, .matrix = kFullEnv.with(cl({1, 2}))};
  EXPECT_TRUE(eval_forall_exists(q));
  EXPECT_TRUE(eval_forall_exists(QbfInstance{}));
  EXPECT_FALSE(eval_forall_exists(QbfInstance{.universals = {}, .existentials = {}, .matrix = Formula{Clause{}}}));
  EXPECT_THROW(eval_forall_exists(QbfInstance{.universals = {Var{1}}, .existentials = {Var{1}}, .matrix = {}}),
               PreconditionError);
  EXPECT_THROW(eval_forall_exists(QbfInstance{.universals = {}, .existentials = {Var{1}},
                                              .matrix = Formula::from_dimacs({{2}})}),
               PreconditionError);
}

TEST(Oracle, ForallExistsMatchesReference) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto q = random_forall_exists(rng, 6, 8);
    std::vector<int> u, e;
    for (Var v : q.universals) u.push_back(static_cast<int>(v.id()));
    for (Var v : q.existentials) e.push_back(static_cast<int>(v.id()));
    EXPECT_EQ(eval_forall_exists(q), ref::forall_exists(u, e, ref::to_ref(q.matrix)));
    // empty universal block reduces to satisfiability
    QbfInstance flat{.universals = {}, .existentials = q.universals, .matrix = q.matrix};
    flat.existentials.insert(flat.existentials.end(), q.existentials.begin(), q.existentials.end());
    EXPECT_EQ(eval_forall_exists(flat), is_satisfiable(q.matrix));
  }
}

TEST(Oracle, NonlocalityWitness) {
  const Formula w = nonlocality_witness(kAtNotSet, kAtNotSetClause);
  EXPECT_EQ(resolution_environment(w, kAtNotSetClause), resolution_environment(kAtNotSet, kAtNotSetClause));
  EXPECT_FALSE(is_redundant(w, kAtNotSetClause));
  EXPECT_TRUE(w.contains(cl({3})) || w.contains(cl({-3})));
  EXPECT_THROW(nonlocality_witness(Formula{}, cl({1})), PreconditionError);
}

TEST(Oracle, NonlocalityWitnessRandom) {
  Rng rng(13);
  int tested = 0;
  while (tested < 200) {
    const auto inst = random_instance(rng);
    if (is_semantically_blocked_oracle(inst.formula, inst.clause)) continue;
    ++tested;
    const Formula w = nonlocality_witness(inst.formula, inst.clause);
    EXPECT_EQ(resolution_environment(w, inst.clause), resolution_environment(inst.formula, inst.clause));
    EXPECT_FALSE(ref::redundant(ref::to_ref(w), ref::to_ref(inst.clause)));
  }
}
