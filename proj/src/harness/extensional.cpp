#include <stdexcept>

#include "systemt/harness.hpp"

namespace systemt::harness {

namespace {

bool hee_shape(const Ty& t) { return t.is_nat() || (t.domain().is_nat() && hee_shape(t.codomain())); }

bool hee_rec(const Ty& shape, const SetValue& a, const SetValue& b, std::size_t samples,
             std::uint64_t seed) {
  if (shape.is_nat()) return a.as_nat() == b.as_nat();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Nat> point(0, 50);
  for (std::size_t i = 0; i < samples; ++i) {
    SetValue x = SetValue::nat(point(rng));
    if (!hee_rec(shape.codomain(), a(x), b(x), samples, mix(seed, i))) return false;
  }
  return true;
}

const Ty N = Ty::nat();
const Ty NN = Ty::arrow(Ty::nat(), Ty::nat());

}  // namespace

bool hee_check(const Ty& shape, const SetValue& a, const SetValue& b, std::size_t samples,
               std::uint64_t seed) {
  if (!hee_shape(shape))
    throw std::invalid_argument("hee_check: unsupported shape " + pretty(shape));
  return hee_rec(shape, a, b, samples, seed);
}

std::vector<Nat> observe(const Ty& type, const SetValue& v) {
  if (type.is_nat()) return {v.as_nat()};
  std::vector<Nat> out;
  auto take = [&](const SetValue& r) {
    auto part = observe(type.codomain(), r);
    out.insert(out.end(), part.begin(), part.end());
  };
  if (type.domain() == N) {
    for (Nat x : {0, 1, 2, 5}) take(v(SetValue::nat(x)));
  } else if (type.domain() == NN) {
    for (const auto& o : {Oracle{{}, 0}, Oracle{{1, 2, 3}, 4}, Oracle{{7, 0, 7}, 1}})
      take(v(lift_oracle(o)));
  } else {
    throw std::invalid_argument("observe: unsupported type " + pretty(type));
  }
  return out;
}

std::vector<std::pair<Term, Term>> handler_battery(const Ty& motive, std::uint64_t seed,
                                                   std::size_t generated) {
  std::vector<std::pair<Term, Term>> out;
  auto fixed = [&](std::string_view leaf, std::string_view branch) {
    out.emplace_back(check_source(leaf).term, check_source(branch).term);
  };
  if (motive == N) {
    fixed("fun (z : nat) -> z", "fun (g : nat -> nat) -> fun (x : nat) -> g x");
    fixed("fun (z : nat) -> succ z", "fun (g : nat -> nat) -> fun (x : nat) -> g (succ (g 0))");
  } else if (motive == NN) {
    fixed("fun (z : nat) -> fun (k : nat) -> z",
          "fun (g : nat -> nat -> nat) -> fun (x : nat) -> fun (k : nat) -> g k x");
  } else if (motive == church::baire_motive()) {
    fixed("fun (z : nat) -> fun (a : nat -> nat) -> z",
          "fun (g : nat -> (nat -> nat) -> nat) -> fun (x : nat) -> fun (a : nat -> nat) -> g (a x) a");
  }
  Ty leaf_ty = Ty::arrow(N, motive);
  Ty branch_ty = Ty::arrow(Ty::arrow(N, motive), Ty::arrow(N, motive));
  for (std::size_t i = 0; i < generated; ++i) {
    GenConfig c;
    c.size_budget = 12;
    c.rec_weight = 0.5;
    c.seed = mix(seed, i, 1);
    Term leaf = gen_term(c, leaf_ty);
    c.seed = mix(seed, i, 2);
    Term branch = gen_term(c, branch_ty);
    out.emplace_back(std::move(leaf), std::move(branch));
  }
  return out;
}

std::vector<Nat> observe_church(const Ty& motive, const SetValue& d,
                                const std::vector<std::pair<Term, Term>>& handlers) {
  std::vector<Nat> out;
  for (const auto& [leaf, branch] : handlers) {
    auto part = observe(motive, d(eval_set(leaf))(eval_set(branch)));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace systemt::harness
