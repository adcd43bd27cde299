#include <stdexcept>

#include "systemt/fuel.hpp"
#include "systemt/harness.hpp"
#include "systemt/moduli.hpp"

namespace systemt::harness {

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto fin = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return fin(fin(fin(a) ^ b) ^ c);
}

Term canonical(const Ty& t) {
  if (t.is_nat()) return Term::zero();
  return Term::lam(t.domain(), canonical(t.codomain()));
}

namespace {

const Ty kNat = Ty::nat();
const Ty kNatToNat = Ty::arrow(Ty::nat(), Ty::nat());

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  // Every child gets at least the size of its canonical inhabitant, so only
  // a top-level call with a too-small budget can overshoot.
  Term gen(const Ty& target, const Ctx& ctx, std::size_t budget) {
    if (budget == 0) return canonical(target);

    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx.lookup(i) == target) vars.push_back(i);

    // Variables that reach the target in one application, e.g. the oracle.
    std::vector<std::size_t> heads;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Ty& h = ctx.lookup(i);
      if (h.is_arrow() && h.codomain() == target && (h.domain() == kNat || h.domain() == kNatToNat) &&
          2 + min_size(h.domain()) <= budget)
        heads.push_back(i);
    }

    std::vector<Ty> arg_tys;
    for (const Ty& a : {kNat, kNatToNat})
      if (1 + min_size(Ty::arrow(a, target)) + min_size(a) <= budget) arg_tys.push_back(a);
    const Ty step_ty = Ty::arrow(kNat, Ty::arrow(target, target));

    enum Choice { Var, Head, Num, Succ, Lam, App, Rec };
    std::vector<std::pair<Choice, double>> options;
    if (!vars.empty()) options.push_back({Var, cfg_.var_weight});
    if (!heads.empty()) options.push_back({Head, cfg_.var_weight});
    if (target.is_nat()) {
      options.push_back({Num, cfg_.numeral_weight});
      if (budget >= 2) options.push_back({Succ, cfg_.succ_weight});
    } else if (1 + min_size(target.codomain()) <= budget) {
      options.push_back({Lam, cfg_.lam_weight});
    }
    if (!arg_tys.empty()) options.push_back({App, cfg_.app_weight});
    if (2 + min_size(step_ty) + min_size(target) <= budget) options.push_back({Rec, cfg_.rec_weight});

    double total = 0;
    for (auto& o : options) total += o.second;
    if (total <= 0) return canonical(target);
    double r = std::uniform_real_distribution<double>(0, total)(rng_);
    Choice pick = options.back().first;
    for (auto& o : options) {
      if (r < o.second) {
        pick = o.first;
        break;
      }
      r -= o.second;
    }

    switch (pick) {
      case Var:
        return Term::var(vars[below(vars.size())]);
      case Head: {
        std::size_t h = heads[below(heads.size())];
        return Term::app(Term::var(h), gen(ctx.lookup(h).domain(), ctx, budget - 2));
      }
      case Num: {
        Nat cap = std::min<Nat>(cfg_.numeral_cap, budget - 1);  // numeral n has n + 1 nodes
        return numeral(below(cap + 1));
      }
      case Succ:
        return Term::succ(gen(kNat, ctx, budget - 1));
      case Lam:
        return Term::lam(target.domain(), gen(target.codomain(), ctx.extend(target.domain()), budget - 1));
      case App: {
        const Ty arg_ty = arg_tys[below(arg_tys.size())];
        const Ty fn_ty = Ty::arrow(arg_ty, target);
        auto [fn_budget, arg_budget] = split(budget - 1, min_size(fn_ty), min_size(arg_ty));
        Term fn = gen(fn_ty, ctx, fn_budget);
        Term arg = gen(arg_ty, ctx, arg_budget);
        return Term::app(std::move(fn), std::move(arg));
      }
      case Rec: {
        auto [step_budget, rest] = split(budget - 1, min_size(step_ty), min_size(target) + 1);
        auto [base_budget, arg_budget] = split(rest, min_size(target), 1);
        Term step = gen(step_ty, ctx, step_budget);
        Term base = gen(target, ctx, base_budget);
        Term arg = gen(kNat, ctx, arg_budget);
        return Term::rec(target, std::move(step), std::move(base), std::move(arg));
      }
    }
    return canonical(target);
  }

 private:
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }

  static std::size_t min_size(const Ty& t) { return t.is_nat() ? 1 : 1 + min_size(t.codomain()); }

  // Splits total into (a, total - a) with a >= lo_a and total - a >= lo_b.
  std::pair<std::size_t, std::size_t> split(std::size_t total, std::size_t lo_a, std::size_t lo_b) {
    std::size_t a = lo_a + below(total - lo_a - lo_b + 1);
    return {a, total - a};
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
};

}  // namespace

Term gen_term(const GenConfig& cfg, const Ty& target, const Ctx& ctx) {
  return Generator(cfg).gen(target, ctx, cfg.size_budget);
}

Oracle gen_oracle(std::mt19937_64& rng) {
  std::uniform_int_distribution<Nat> len(0, 16), val(0, 10);
  Oracle o;
  o.prefix.resize(len(rng));
  for (auto& e : o.prefix) e = val(rng);
  o.default_value = val(rng);
  return o;
}

Oracle gen_oracle(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  return gen_oracle(rng);
}

BoolOracle gen_bool_oracle(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 16), bit(0, 1);
  BoolOracle o;
  o.prefix.resize(len(rng));
  for (std::size_t i = 0; i < o.prefix.size(); ++i) o.prefix[i] = bit(rng) == 1;
  o.default_value = bit(rng) == 1;
  return o;
}

BaireTree gen_tree(std::uint64_t seed, std::size_t max_depth) {
  std::mt19937_64 rng(seed);
  if (max_depth == 0 || rng() % 3 == 0) return BaireTree::leaf(rng() % 50);
  Nat query = rng() % 20;
  return BaireTree::branch(
      [seed, max_depth](Nat y) { return gen_tree(mix(seed, y + 1), max_depth - 1); }, query);
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"const7", "fun (a : nat -> nat) -> 7"},
      {"a2", "fun (a : nat -> nat) -> a 2"},
      {"aa2", "fun (a : nat -> nat) -> a (a 2)"},
      {"a4", "fun a -> a 4"},
      {"add01", "fun (a : nat -> nat) -> rec[nat] (fun (n : nat) -> fun (m : nat) -> succ m) (a 0) (a 1)"},
      {"iterate", "fun (a : nat -> nat) -> rec[nat] (fun (n : nat) -> fun (m : nat) -> a m) 0 (a 0)"},
      {"power3",
       "fun (a : nat -> nat) -> rec[nat -> nat] (fun (n : nat) -> fun (g : nat -> nat) -> "
       "fun (x : nat) -> g (a x)) (fun (x : nat) -> x) 3 1"},
      {"sumprefix",
       "fun (a : nat -> nat) -> rec[nat] (fun (n : nat) -> fun (acc : nat) -> "
       "rec[nat] (fun (k : nat) -> fun (s : nat) -> succ s) acc (a n)) 0 (a 0)"},
      {"pred3", "fun (a : nat -> nat) -> rec[nat] (fun (n : nat) -> fun (m : nat) -> n) 0 (a 3)"},
      {"compose",
       "fun (a : nat -> nat) -> (fun (f : nat -> nat) -> f (f 1)) (fun (x : nat) -> a (succ x))"},
  };
  return entries;
}

std::vector<Term> corpus_terms() {
  std::vector<Term> out;
  for (const auto& e : corpus()) out.push_back(check_source(e.source).term);
  return out;
}

namespace {

// Runs every evaluation path the suites use, on a few oracles, under a
// step budget.
bool affordable(const Term& t, std::uint64_t fuel) {
  static const std::vector<Oracle> probes = {
      Oracle{{}, 0}, Oracle{{}, 10}, Oracle{{3, 1, 4, 1, 5, 9, 2, 6}, 7}};
  try {
    FuelGuard guard(fuel);
    SetValue direct = eval_set(t);
    BaireTree tree = dialogue_tree(t);
    Term internal = Term::app(church::dialogue_f_int(), church::dialogue_tree_int(t, church::baire_motive()));
    SetValue internal_v = eval_set(internal);
    for (const auto& a : probes) {
      run_on(direct, a);
      dieval(tree, a);
      run_on(internal_v, a);
      internal_modulus(t, a);
    }
    internal_uniform_modulus(t);
    max_bool_question(prune(tree));
    return true;
  } catch (const FuelExhausted&) {
    return false;
  }
}

}  // namespace

std::vector<Term> gen_corpus(const GenConfig& cfg, std::size_t n, std::uint64_t probe_fuel) {
  const Ty target = church::baire_motive();
  std::vector<Term> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      GenConfig c = cfg;
      c.seed = mix(cfg.seed, i, attempt);
      Term t = gen_term(c, target);
      if (affordable(t, probe_fuel)) {
        out.push_back(std::move(t));
        break;
      }
      if (attempt > 1000) throw std::runtime_error("gen_corpus: no affordable term found");
    }
  }
  return out;
}

InstrumentedRun run_instrumented(const Term& t, const Oracle& alpha) {
  InstrumentedRun run;
  SetValue spy = lift_oracle(std::function<Nat(Nat)>([&run, &alpha](Nat i) {
    run.max_index = run.max_index ? std::max(*run.max_index, i) : i;
    return alpha(i);
  }));
  run.result = eval_set(t)(spy).as_nat();
  return run;
}

}  // namespace systemt::harness
