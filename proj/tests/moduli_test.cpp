#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "systemt/harness.hpp"
#include "systemt/moduli.hpp"

using namespace systemt;

namespace {

const Ty N = Ty::nat();
const Ty NN = Ty::arrow(N, N);
const auto identity = [](Nat i) { return i; };

BaireTree echo(Nat q) {
  return BaireTree::branch([](Nat y) { return BaireTree::leaf(y); }, q);
}

BaireTree tree_of(std::string_view src) { return dialogue_tree(check_source(src).term); }

// Reference: walk the tree by hand, collecting every query on the path.
std::vector<Nat> path_queries(BaireTree d, const Oracle& a) {
  std::vector<Nat> qs;
  while (!d.is_leaf()) {
    qs.push_back(d.query());
    d = d.child(a(d.query()));
  }
  return qs;
}

// Reference: depth-first over all boolean answers.
Nat max_query_below(const BaireTree& d) {
  if (d.is_leaf()) return 0;
  return std::max({d.query(), max_query_below(d.child(0)), max_query_below(d.child(1))});
}

}  // namespace

TEST(MaxQuestion, Examples) {
  EXPECT_EQ(max_question(BaireTree::leaf(5), Oracle{{}, 4}), 0u);
  EXPECT_EQ(max_question(echo(3), identity), 3u);
  EXPECT_EQ(max_question(tree_of("fun (a : nat -> nat) -> a (a 2)"), identity), 2u);
  EXPECT_EQ(modulus(BaireTree::leaf(7), Oracle{}), 1u);
  EXPECT_EQ(modulus(tree_of("fun (a : nat -> nat) -> a (a 2)"), identity), 3u);
  EXPECT_EQ(modulus(tree_of("fun (a : nat -> nat) -> a (a 2)"), Oracle{{}, 0}), 3u);
}

TEST(MaxQuestion, MatchesPathWalk) {
  std::mt19937_64 rng(8);
  for (std::uint64_t s = 0; s < 100; ++s) {
    BaireTree d = harness::gen_tree(s);
    Oracle a = harness::gen_oracle(rng);
    auto qs = path_queries(d, a);
    Nat want = qs.empty() ? 0 : *std::max_element(qs.begin(), qs.end());
    EXPECT_EQ(max_question(d, a), want);
    EXPECT_EQ(modulus(d, a), want + 1);
  }
}

TEST(MaxQuestionInt, Examples) {
  SetValue mq = eval_set(max_question_int());
  SetValue any = lift_oracle(Oracle{{}, 3});
  EXPECT_EQ(mq(church::encode(BaireTree::leaf(5), N))(any).as_nat(), 0u);
  EXPECT_EQ(mq(church::encode(echo(3), N))(lift_oracle(identity)).as_nat(), 3u);
  Term a2 = check_source("fun (a : nat -> nat) -> a 2").term;
  EXPECT_EQ(mq(eval_set(church::dialogue_tree_int(a2, N)))(lift_oracle(identity)).as_nat(), 2u);
  SetValue m = eval_set(modulus_int());
  EXPECT_EQ(m(church::encode(BaireTree::leaf(7), N))(any).as_nat(), 1u);
}

TEST(ModuliTerms, Typing) {
  const Ty D = church::church_type(N, N);
  EXPECT_EQ(type_of(max_term()), Ty::arrows({N, N}, N));
  EXPECT_EQ(type_of(max_question_int()), Ty::arrows({D, NN}, N));
  EXPECT_EQ(type_of(modulus_int()), Ty::arrows({D, NN}, N));
  EXPECT_EQ(type_of(max_bool_question_int()), Ty::arrow(D, N));
  EXPECT_EQ(type_of(modulus_uni_int()), Ty::arrow(D, N));
}

TEST(MaxTerm, Grid) {
  SetValue mx = eval_set(max_term());
  EXPECT_EQ(mx(SetValue::nat(0))(SetValue::nat(0)).as_nat(), 0u);
  EXPECT_EQ(mx(SetValue::nat(3))(SetValue::nat(5)).as_nat(), 5u);
  EXPECT_EQ(mx(SetValue::nat(7))(SetValue::nat(2)).as_nat(), 7u);
  for (Nat x = 0; x <= 40; ++x)
    for (Nat y = 0; y <= 40; ++y) EXPECT_EQ(mx(SetValue::nat(x))(SetValue::nat(y)).as_nat(), std::max(x, y));
}

TEST(Prune, AgreesWithEmbedding) {
  EXPECT_EQ(embed_bit(false), 0u);
  EXPECT_EQ(embed_bit(true), 1u);
  std::mt19937_64 rng(2);
  for (std::uint64_t s = 0; s < 100; ++s) {
    BaireTree d = harness::gen_tree(s);
    CantorTree p = prune(d);
    BoolOracle b = harness::gen_bool_oracle(rng);
    Oracle e = embed(b);
    EXPECT_EQ(dieval(p, b), dieval(d, e));
    EXPECT_EQ(max_bool_question(p), max_query_below(d));
  }
}

TEST(MaxBoolQuestion, Examples) {
  EXPECT_EQ(max_bool_question(prune(BaireTree::leaf(3))), 0u);
  EXPECT_EQ(max_bool_question(prune(echo(4))), 4u);
  EXPECT_EQ(modulus_uni(prune(tree_of("fun a -> a 4"))), 5u);
  for (Nat n : {0, 1, 9}) EXPECT_EQ(modulus_uni(prune(BaireTree::leaf(n))), 1u);
  SetValue mb = eval_set(max_bool_question_int());
  EXPECT_EQ(mb(church::encode(echo(4), N)).as_nat(), 4u);
  EXPECT_EQ(eval_set(modulus_uni_int())(church::encode(BaireTree::leaf(2), N)).as_nat(), 1u);
}

TEST(MaxBoolQuestion, BoundsEveryBooleanPath) {
  std::mt19937_64 rng(4);
  for (std::uint64_t s = 0; s < 100; ++s) {
    BaireTree d = harness::gen_tree(s);
    Nat global = max_bool_question(prune(d));
    for (int k = 0; k < 10; ++k) EXPECT_LE(max_question(d, embed(harness::gen_bool_oracle(rng))), global);
  }
}

TEST(InternalModuli, AgreeWithExternalOnCorpus) {
  std::mt19937_64 rng(6);
  for (const Term& t : harness::corpus_terms()) {
    BaireTree d = dialogue_tree(t);
    for (int k = 0; k < 10; ++k) {
      Oracle a = harness::gen_oracle(rng);
      EXPECT_EQ(internal_modulus(t, a), modulus(d, a)) << pretty(t) << " " << a.str();
    }
    EXPECT_EQ(internal_uniform_modulus(t), modulus_uni(prune(d))) << pretty(t);
  }
}

TEST(InternalModuli, Anchors) {
  Term aa2 = check_source("fun (a : nat -> nat) -> a (a 2)").term;
  Term a4 = check_source("fun a -> a 4").term;
  Term c7 = check_source("fun (a : nat -> nat) -> 7").term;
  EXPECT_EQ(internal_modulus(aa2, Oracle{{}, 0}), 3u);
  EXPECT_EQ(internal_uniform_modulus(a4), 5u);
  EXPECT_EQ(internal_modulus(c7, Oracle{{}, 4}), 1u);
  EXPECT_EQ(internal_uniform_modulus(c7), 1u);
}
