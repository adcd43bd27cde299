#include <gtest/gtest.h>

#include <random>

#include "systemt/dialogue.hpp"
#include "systemt/fuel.hpp"
#include "systemt/harness.hpp"
#include "systemt/set_model.hpp"

using namespace systemt;

namespace {

const auto identity = [](Nat i) { return i; };

BaireTree echo(Nat q) {
  return BaireTree::branch([](Nat y) { return BaireTree::leaf(y); }, q);
}

BaireTree tree_of(std::string_view src) { return dialogue_tree(check_source(src).term); }

// Independent oracle for trees: a tiny list-backed tree, rebuilt by hand.
struct Fixture {
  std::vector<BaireTree> trees;
  std::vector<Oracle> oracles;
  std::vector<std::function<BaireTree(Nat)>> conts;
};

Fixture fixture() {
  Fixture f;
  std::mt19937_64 rng(77);
  for (std::uint64_t s = 0; s < 40; ++s) f.trees.push_back(harness::gen_tree(s, 5));
  for (int k = 0; k < 20; ++k) f.oracles.push_back(harness::gen_oracle(rng));
  f.conts.push_back([](Nat n) { return BaireTree::leaf(n + 1); });
  f.conts.push_back([](Nat n) { return echo(n); });
  f.conts.push_back([](Nat n) { return harness::gen_tree(1000 + n, 3); });
  return f;
}

}  // namespace

TEST(Dieval, Examples) {
  EXPECT_EQ(dieval(BaireTree::leaf(7), Oracle{{}, 3}), 7u);
  EXPECT_EQ(dieval(echo(3), identity), 3u);
  BaireTree nested =
      BaireTree::branch([](Nat y) { return BaireTree::branch([](Nat z) { return BaireTree::leaf(z); }, y); }, 2);
  EXPECT_EQ(dieval(nested, identity), 2u);
  EXPECT_EQ(dieval(nested, Oracle{{0, 0, 5}, 9}), 9u);  // 2 -> 5, 5 -> 9
}

TEST(Kleisli, LeafClause) {
  auto f = [](Nat n) { return echo(n * 2); };
  BaireTree k = kleisli(f, BaireTree::leaf(4));
  ASSERT_FALSE(k.is_leaf());
  EXPECT_EQ(k.query(), 8u);
}

TEST(Kleisli, DecompositionAndUnitLaws) {
  Fixture fx = fixture();
  for (const auto& d : fx.trees)
    for (const auto& a : fx.oracles) {
      EXPECT_EQ(dieval(kleisli([](Nat n) { return BaireTree::leaf(n); }, d), a), dieval(d, a));
      for (const auto& f : fx.conts) EXPECT_EQ(dieval(kleisli(f, d), a), dieval(f(dieval(d, a)), a));
    }
}

TEST(Kleisli, Associativity) {
  Fixture fx = fixture();
  const auto& f = fx.conts[1];
  const auto& g = fx.conts[2];
  for (const auto& d : fx.trees)
    for (const auto& a : fx.oracles) {
      BaireTree lhs = kleisli(g, kleisli(f, d));
      BaireTree rhs = kleisli([&](Nat n) { return kleisli(g, f(n)); }, d);
      EXPECT_EQ(dieval(lhs, a), dieval(rhs, a));
    }
}

TEST(FunctorMap, Laws) {
  BaireTree one = functor_map([](Nat n) { return n + 1; }, BaireTree::leaf(0));
  ASSERT_TRUE(one.is_leaf());
  EXPECT_EQ(one.value(), 1u);
  Fixture fx = fixture();
  auto g = [](Nat n) { return 3 * n + 1; };
  for (const auto& d : fx.trees)
    for (const auto& a : fx.oracles) {
      EXPECT_EQ(dieval(functor_map([](Nat n) { return n; }, d), a), dieval(d, a));
      EXPECT_EQ(dieval(functor_map(g, d), a), g(dieval(d, a)));
    }
}

TEST(Generic, Square) {
  BaireTree g = generic(BaireTree::leaf(2));
  ASSERT_FALSE(g.is_leaf());
  EXPECT_EQ(g.query(), 2u);
  EXPECT_EQ(g.child(6).value(), 6u);
  EXPECT_EQ(dieval(g, identity), 2u);
  std::mt19937_64 rng(3);
  for (std::uint64_t s = 0; s < 100; ++s) {
    BaireTree d = harness::gen_tree(s);
    Oracle a = harness::gen_oracle(rng);
    EXPECT_EQ(dieval(generic(d), a), a(dieval(d, a)));
  }
}

TEST(GKleisli, BaseAndArrowClauses) {
  const Ty N = Ty::nat();
  DialValue unit = gkleisli(N, [](Nat n) { return DialValue::tree(BaireTree::leaf(n)); }, BaireTree::leaf(5));
  ASSERT_TRUE(unit.as_tree().is_leaf());
  EXPECT_EQ(unit.as_tree().value(), 5u);

  // f n = fun s -> s + n, as a dialogue function
  auto f = [](Nat n) {
    return DialValue::fun([n](const DialValue& s) {
      return DialValue::tree(functor_map([n](Nat x) { return x + n; }, s.as_tree()));
    });
  };
  DialValue arrow = gkleisli(Ty::arrow(N, N), f, BaireTree::leaf(5));
  BaireTree arg = echo(1);
  for (Nat k : {0, 4, 9}) {
    Oracle a{{}, k};
    EXPECT_EQ(dieval(arrow(DialValue::tree(arg)).as_tree(), a), dieval(f(5)(DialValue::tree(arg)).as_tree(), a));
  }

  Fixture fx = fixture();
  for (const auto& d : fx.trees)
    for (const auto& c : fx.conts) {
      DialValue gk = gkleisli(N, [&](Nat n) { return DialValue::tree(c(n)); }, d);
      BaireTree k = kleisli(c, d);
      for (const auto& a : fx.oracles) EXPECT_EQ(dieval(gk.as_tree(), a), dieval(k, a));
    }
}

TEST(EvalDial, Examples) {
  BaireTree z = eval_dial(Term::zero()).as_tree();
  ASSERT_TRUE(z.is_leaf());
  EXPECT_EQ(z.value(), 0u);
  BaireTree three = eval_dial(numeral(3)).as_tree();
  ASSERT_TRUE(three.is_leaf());
  EXPECT_EQ(three.value(), 3u);
  BaireTree two = eval_dial(check_source("rec[nat] (fun n -> fun m -> succ m) zero 2").term).as_tree();
  ASSERT_TRUE(two.is_leaf());
  EXPECT_EQ(two.value(), 2u);
}

TEST(DialogueTree, Examples) {
  BaireTree c = tree_of("fun (a : nat -> nat) -> 7");
  ASSERT_TRUE(c.is_leaf());
  EXPECT_EQ(c.value(), 7u);

  BaireTree a2 = tree_of("fun (a : nat -> nat) -> a 2");
  ASSERT_FALSE(a2.is_leaf());
  EXPECT_EQ(a2.query(), 2u);
  for (Nat y : {0, 3, 11}) EXPECT_EQ(a2.child(y).value(), y);

  BaireTree aa2 = tree_of("fun (a : nat -> nat) -> a (a 2)");
  ASSERT_FALSE(aa2.is_leaf());
  EXPECT_EQ(aa2.query(), 2u);
  for (Nat y : {0, 3, 11}) {
    BaireTree sub = aa2.child(y);
    ASSERT_FALSE(sub.is_leaf());
    EXPECT_EQ(sub.query(), y);
    EXPECT_EQ(sub.child(y + 1).value(), y + 1);
  }
  EXPECT_EQ(dieval(aa2, identity), 2u);
}

TEST(DialogueTree, RejectsOtherTypes) {
  EXPECT_THROW(dialogue_tree(numeral(3)), TypeMismatch);
  EXPECT_THROW(dialogue_tree(check_source("fun (x : nat) -> x").term), TypeMismatch);
  EXPECT_THROW(dialogue_tree(Term::lam(Ty::arrow(Ty::nat(), Ty::nat()), Term::var(1))), TypeMismatch);
}

TEST(DialogueTree, AgreesWithSetModelOnCorpus) {
  std::mt19937_64 rng(11);
  for (const Term& t : harness::corpus_terms()) {
    BaireTree d = dialogue_tree(t);
    for (int k = 0; k < 20; ++k) {
      Oracle a = harness::gen_oracle(rng);
      EXPECT_EQ(dieval(d, a), run_on(t, a)) << pretty(t) << " at " << a.str();
    }
  }
}

TEST(Render, BoundedMaterialization) {
  EXPECT_EQ(render(tree_of("fun a -> a 4")), "(branch 4 (0 (leaf 0)) (1 (leaf 1)))");
  EXPECT_EQ(render(BaireTree::leaf(3)), "(leaf 3)");
  EXPECT_EQ(render(echo(1), RenderOptions{3, 64}), "(branch 1 (0 (leaf 0)) (1 (leaf 1)) (2 (leaf 2)))");
  EXPECT_EQ(render(tree_of("fun (a : nat -> nat) -> a (a 2)"), RenderOptions{2, 1}),
            "(branch 2 (0 (...)) (1 (...)))");
}

TEST(Fuel, ChildAccessBurnsFuel) {
  // An infinite path: each child asks again.
  std::function<BaireTree(Nat)> loop = [&](Nat) { return BaireTree::branch(loop, 0); };
  BaireTree d = BaireTree::branch(loop, 0);
  FuelGuard g(1000);
  EXPECT_THROW(dieval(d, identity), FuelExhausted);
}
