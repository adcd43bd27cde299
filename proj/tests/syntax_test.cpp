#include <gtest/gtest.h>

#include "systemt/harness.hpp"
#include "systemt/set_model.hpp"
#include "systemt/syntax.hpp"

using namespace systemt;

namespace {

const Ty N = Ty::nat();
const Ty NN = Ty::arrow(N, N);
const Ty Baire = Ty::arrow(NN, N);

std::size_t count_succ(const Term& t) {
  std::size_t n = 0;
  for (Term cur = t; cur.kind() == TermKind::Succ; cur = cur.child(0)) ++n;
  return n;
}

}  // namespace

TEST(Parse, Zero) {
  RawTerm r = parse("zero");
  EXPECT_EQ(r.kind, RawTerm::Kind::Zero);
}

TEST(Parse, LambdaOverApplicationChain) {
  RawTerm r = parse("fun (a : nat -> nat) -> a (a 2)");
  ASSERT_EQ(r.kind, RawTerm::Kind::Lam);
  EXPECT_EQ(r.name, "a");
  ASSERT_TRUE(r.annot.has_value());
  EXPECT_EQ(*r.annot, NN);
  const RawTerm& body = r.kids[0];
  ASSERT_EQ(body.kind, RawTerm::Kind::App);
  EXPECT_EQ(body.kids[0].kind, RawTerm::Kind::Var);
  EXPECT_EQ(body.kids[1].kind, RawTerm::Kind::App);
}

TEST(Parse, TruncatedInputReportsPosition) {
  try {
    parse("fun (a : nat) ->");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos.line, 1u);
    EXPECT_EQ(e.pos.col, 17u);
    EXPECT_EQ(e.expected, "a term");
  }
}

TEST(Parse, ApplicationIsLeftAssociative) {
  RawTerm r = parse("f x y");
  ASSERT_EQ(r.kind, RawTerm::Kind::App);
  EXPECT_EQ(r.kids[0].kind, RawTerm::Kind::App);
  EXPECT_EQ(r.kids[1].name, "y");
}

TEST(Parse, ArrowsAreRightAssociativeInBothSpellings) {
  EXPECT_EQ(parse_type("nat -> nat -> nat"), Ty::arrow(N, NN));
  EXPECT_EQ(parse_type("nat => nat => nat"), Ty::arrow(N, NN));
  EXPECT_EQ(parse_type("(nat -> nat) -> nat"), Baire);
}

TEST(Parse, WhitespaceAndCommentsAreIgnored) {
  Term a = check_source("fun (a:nat->nat)->a(a 2)").term;
  Term b = check_source("  fun ( a : nat -> nat )\n  -> a  # comment\n (a 2)\n").term;
  EXPECT_EQ(a, b);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("rec nat"), ParseError);
  EXPECT_THROW(parse("(zero"), ParseError);
  EXPECT_THROW(parse("zero )"), ParseError);
  EXPECT_THROW(parse("fun (x nat) -> x"), ParseError);
  EXPECT_THROW(parse("@"), ParseError);
  EXPECT_THROW(parse("99999999"), ParseError);
}

TEST(Typecheck, BaireFunction) {
  Typed t = check_source("fun (a : nat -> nat) -> a (a 2)");
  EXPECT_EQ(t.type, Baire);
  EXPECT_EQ(type_of(t.term), Baire);
}

TEST(Typecheck, SuccOfFunctionIsATypeError) {
  try {
    check_source("succ (fun (x : nat) -> x)");
    FAIL() << "expected TypeError";
  } catch (const TypeError& e) {
    EXPECT_EQ(e.expected, N);
    EXPECT_EQ(e.found, NN);
    EXPECT_EQ(e.pos.col, 7u);  // the lambda inside the parentheses
  }
}

TEST(Typecheck, RecAtNat) {
  Typed t = check_source("rec[nat] (fun (n:nat) -> fun (m:nat) -> succ m) zero 3");
  EXPECT_EQ(t.type, N);
  EXPECT_EQ(t.term.kind(), TermKind::Rec);
}

TEST(Typecheck, RecRejectsBadStep) {
  EXPECT_THROW(check_source("rec[nat] (fun (n:nat) -> n) zero 3"), TypeError);
  EXPECT_THROW(check_source("rec[nat -> nat] (fun (n:nat) -> fun (g : nat -> nat) -> g) zero 3"),
               TypeError);
}

TEST(Typecheck, UnboundVariable) {
  try {
    check_source("fun (x : nat) -> y");
    FAIL();
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.name, "y");
  }
}

TEST(Typecheck, UnannotatedBindersAreInferred) {
  EXPECT_EQ(check_source("fun a -> a 4").type, Baire);
  EXPECT_EQ(check_source("fun x -> x").type, NN);  // unconstrained defaults to nat
  Typed t = check_source("rec[nat] (fun n -> fun m -> succ m) zero 5");
  EXPECT_EQ(eval_set(t.term).as_nat(), 5u);
  EXPECT_THROW(check_source("fun f -> f f"), TypeError);  // occurs check
}

TEST(Typecheck, ApplyingANatural) {
  EXPECT_THROW(check_source("(fun (x : nat) -> x 1)"), TypeError);
  EXPECT_THROW(check_source("3 4"), TypeError);
}

TEST(Typecheck, ShadowingResolvesInnermost) {
  Term t = check_source("fun (x : nat -> nat) -> fun (x : nat) -> x").term;
  EXPECT_EQ(t, Term::lam(NN, Term::lam(N, Term::var(0))));
}

TEST(Typecheck, OpenTermsAgainstAContext) {
  Ctx ctx = Ctx().extend(NN).extend(N);  // x0 : nat -> nat, x1 : nat
  Typed t = typecheck(parse("x0 x1"), ctx);
  EXPECT_EQ(t.type, N);
  EXPECT_EQ(t.term, Term::app(Term::var(1), Term::var(0)));
  Typed named = typecheck(parse("f n"), ctx, {"n", "f"});
  EXPECT_EQ(named.term, t.term);
}

TEST(Typecheck, DeterministicOnRepeat) {
  auto a = check_source("fun a -> rec[nat] (fun n -> fun m -> a m) 0 (a 0)");
  auto b = check_source("fun a -> rec[nat] (fun n -> fun m -> a m) 0 (a 0)");
  EXPECT_EQ(a.term, b.term);
  EXPECT_EQ(a.type, b.type);
}

TEST(Numeral, Unfolding) {
  EXPECT_EQ(numeral(0), Term::zero());
  EXPECT_EQ(numeral(3), Term::succ(Term::succ(Term::succ(Term::zero()))));
  for (Nat n : {0u, 1u, 7u, 100u, 1000u}) EXPECT_EQ(count_succ(numeral(n)), n);
}

TEST(Numeral, SetInterpretationIsIdentity) {
  for (Nat n = 0; n <= 1000; ++n) ASSERT_EQ(eval_set(numeral(n)).as_nat(), n) << n;
}

TEST(Substitute, VariableHit) {
  EXPECT_EQ(substitute(Term::var(0), {{0, numeral(5)}}), numeral(5));
}

TEST(Substitute, ClosedTermsAreFixed) {
  EXPECT_EQ(substitute(Term::zero(), {}), Term::zero());
  Term closed = check_source("fun (x : nat) -> succ x").term;
  EXPECT_EQ(substitute(closed, {}), closed);
}

TEST(Substitute, MissingAssignment) {
  EXPECT_THROW(substitute(Term::app(Term::var(0), Term::var(1)), {{0, Term::zero()}}), ArityError);
}

TEST(Substitute, UnderBinderAgreesWithEvaluation) {
  // fun (x : nat) -> <free 0>, with free 0 := 2.
  Term t = Term::lam(N, Term::var(1));
  Term s = substitute(t, {{0, numeral(2)}});
  EXPECT_EQ(s, Term::lam(N, numeral(2)));
  SetValue direct = eval_set(t, SetEnv().extend(SetValue::nat(2)));
  SetValue substituted = eval_set(s);
  for (Nat x : {0u, 1u, 9u, 40u})
    EXPECT_EQ(direct(SetValue::nat(x)).as_nat(), substituted(SetValue::nat(x)).as_nat());
}

TEST(Substitute, ReplacementIsShiftedUnderBinders) {
  // fun (y : nat) -> f0 y with f0 := x1 (an open replacement) must not capture y.
  Term t = Term::lam(N, Term::app(Term::var(1), Term::var(0)));
  Term s = substitute(t, {{0, Term::var(3)}});
  EXPECT_EQ(s, Term::lam(N, Term::app(Term::var(4), Term::var(0))));
}

TEST(Substitute, SimultaneousNotSequential) {
  Term t = Term::app(Term::var(0), Term::var(1));
  Term s = substitute(t, {{0, Term::var(1)}, {1, Term::var(0)}});
  EXPECT_EQ(s, Term::app(Term::var(1), Term::var(0)));
}

TEST(Pretty, ZeroAndNumerals) {
  EXPECT_EQ(pretty(Term::zero()), "zero");
  EXPECT_EQ(pretty(numeral(2)), "2");
  EXPECT_EQ(pretty(Term::succ(Term::var(0)), 1), "succ x0");
}

TEST(Pretty, Shapes) {
  EXPECT_EQ(pretty(check_source("fun (a : nat -> nat) -> a (a 2)").term),
            "fun (x0 : nat -> nat) -> x0 (x0 2)");
  EXPECT_EQ(pretty(Baire), "(nat -> nat) -> nat");
  EXPECT_EQ(pretty(check_source("(fun (x : nat) -> x) (succ ((fun (y:nat) -> y) 3))").term),
            "(fun (x0 : nat) -> x0) (succ ((fun (x0 : nat) -> x0) 3))");
}

TEST(Pretty, RoundTripOnCorpus) {
  for (const auto& e : harness::corpus()) {
    Term t = check_source(e.source).term;
    EXPECT_EQ(check_source(pretty(t)).term, t) << e.name;
  }
}

TEST(Pretty, RoundTripProperty) {
  harness::GenConfig cfg;
  std::vector<Ty> targets = {N, NN, Baire, Ty::arrow(NN, NN), Ty::arrow(N, Ty::arrow(NN, N))};
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    cfg.seed = seed;
    cfg.size_budget = 5 + seed % 30;
    const Ty& target = targets[seed % targets.size()];
    Term t = harness::gen_term(cfg, target);
    Typed back = check_source(pretty(t));
    ASSERT_EQ(back.term, t) << pretty(t);
    ASSERT_EQ(back.type, target);
  }
}

TEST(Pretty, OpenTermsRoundTripAgainstTheirContext) {
  Ctx ctx = Ctx().extend(N).extend(NN);
  harness::GenConfig cfg;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.seed = seed;
    Term t = harness::gen_term(cfg, N, ctx);
    ASSERT_EQ(typecheck(parse(pretty(t, ctx.size())), ctx).term, t);
  }
}
