#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "systemt/fuel.hpp"
#include "systemt/harness.hpp"
#include "systemt/moduli.hpp"

namespace systemt::harness {

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids = {SuiteId::Tree,   SuiteId::EncodedEval, SuiteId::InternalTree,
                                           SuiteId::MaxQuestion, SuiteId::ModulusAgree, SuiteId::Continuity,
                                           SuiteId::MaxBoolQuestion, SuiteId::UniformAgree, SuiteId::UniformContinuity};
  return ids;
}

std::string suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::Tree: return "tree";
    case SuiteId::EncodedEval: return "encoded-eval";
    case SuiteId::InternalTree: return "internal-tree";
    case SuiteId::MaxQuestion: return "max-question";
    case SuiteId::ModulusAgree: return "modulus-agree";
    case SuiteId::Continuity: return "continuity";
    case SuiteId::MaxBoolQuestion: return "max-bool-question";
    case SuiteId::UniformAgree: return "uniform-agree";
    case SuiteId::UniformContinuity: return "uniform-continuity";
  }
  return "?";
}

std::optional<SuiteId> parse_suite(std::string_view name) {
  for (SuiteId id : all_suites())
    if (suite_name(id) == name) return id;
  return std::nullopt;
}

namespace {

const Ty kNat = Ty::nat();

struct Mismatch {
  std::size_t oracle;  // index into the oracle list, or npos
  std::string detail;
};

std::string neq(const char* what, Nat lhs, Nat rhs) {
  return std::string(what) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
}

// Oracle agreeing with alpha below m, arbitrary in [0, 10] from m on.
Oracle agreeing(const Oracle& alpha, Nat m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Nat> val(0, 10);
  Oracle beta;
  beta.prefix.resize(m + 16);
  for (Nat i = 0; i < beta.prefix.size(); ++i) beta.prefix[i] = i < m ? alpha(i) : val(rng);
  beta.default_value = val(rng);
  return beta;
}

BoolOracle agreeing_bits(const std::vector<bool>& prefix, std::mt19937_64& rng) {
  BoolOracle o = gen_bool_oracle(rng);
  std::vector<bool> bits = prefix;
  bits.insert(bits.end(), o.prefix.begin(), o.prefix.end());
  o.prefix = std::move(bits);
  return o;
}

// A property over one term and a list of oracles. Returns the first mismatch.
using TermProperty = std::function<std::optional<Mismatch>(const Term&, const std::vector<Oracle>&,
                                                           std::uint64_t seed)>;

TermProperty property_for(SuiteId id, const SuiteOptions& opt) {
  const Hooks& h = opt.hooks;
  switch (id) {
    case SuiteId::Tree:
      return [h](const Term& t, const std::vector<Oracle>& as, std::uint64_t) -> std::optional<Mismatch> {
        SetValue f = eval_set(t);
        BaireTree d = h.tree(t);
        for (std::size_t i = 0; i < as.size(); ++i) {
          Nat lhs = run_on(f, as[i]), rhs = dieval(d, as[i]);
          if (lhs != rhs) return Mismatch{i, neq("eval_set vs dieval(dialogue_tree)", lhs, rhs)};
        }
        return std::nullopt;
      };
    case SuiteId::InternalTree:
      return [h](const Term& t, const std::vector<Oracle>& as, std::uint64_t) -> std::optional<Mismatch> {
        SetValue f = eval_set(t);
        SetValue g = eval_set(Term::app(church::dialogue_f_int(), h.tree_int(t, church::baire_motive())));
        for (std::size_t i = 0; i < as.size(); ++i) {
          Nat lhs = run_on(f, as[i]), rhs = run_on(g, as[i]);
          if (lhs != rhs) return Mismatch{i, neq("eval_set vs internal dialogue", lhs, rhs)};
        }
        return std::nullopt;
      };
    case SuiteId::MaxQuestion:
      return [h](const Term& t, const std::vector<Oracle>& as, std::uint64_t) -> std::optional<Mismatch> {
        BaireTree d = h.tree(t);
        SetValue internal = eval_set(max_question_int())(h.encode(d, kNat));
        for (std::size_t i = 0; i < as.size(); ++i) {
          Nat lhs = max_question(d, as[i]), rhs = run_on(internal, as[i]);
          if (lhs != rhs) return Mismatch{i, neq("max_question vs internal on encode", lhs, rhs)};
        }
        return std::nullopt;
      };
    case SuiteId::ModulusAgree:
      return [h](const Term& t, const std::vector<Oracle>& as, std::uint64_t) -> std::optional<Mismatch> {
        BaireTree d = h.tree(t);
        Term dt = h.tree_int(t, kNat);
        SetValue mq = eval_set(Term::app(max_question_int(), dt));
        SetValue mod = eval_set(Term::app(modulus_int(), dt));
        for (std::size_t i = 0; i < as.size(); ++i) {
          Nat ext = max_question(d, as[i]), in = run_on(mq, as[i]);
          if (ext != in) return Mismatch{i, neq("max_question external vs internal", ext, in)};
          Nat mext = modulus(d, as[i]), min = run_on(mod, as[i]);
          if (mext != min) return Mismatch{i, neq("modulus external vs internal", mext, min)};
        }
        return std::nullopt;
      };
    case SuiteId::Continuity:
      return [h, betas = opt.betas](const Term& t, const std::vector<Oracle>& as,
                                    std::uint64_t seed) -> std::optional<Mismatch> {
        SetValue f = eval_set(t);
        SetValue mod = eval_set(Term::app(modulus_int(), h.tree_int(t, kNat)));
        for (std::size_t i = 0; i < as.size(); ++i) {
          std::mt19937_64 rng(mix(seed, i));
          Nat m = run_on(mod, as[i]);
          Nat at_alpha = run_on(f, as[i]);
          for (std::size_t k = 0; k < betas; ++k) {
            Oracle beta = agreeing(as[i], m, rng);
            Nat at_beta = run_on(f, beta);
            if (at_alpha != at_beta)
              return Mismatch{i, "modulus " + std::to_string(m) + " violated by beta " + beta.str() +
                                     ": " + std::to_string(at_alpha) + " != " + std::to_string(at_beta)};
          }
        }
        return std::nullopt;
      };
    case SuiteId::MaxBoolQuestion:
      return [h](const Term& t, const std::vector<Oracle>&, std::uint64_t) -> std::optional<Mismatch> {
        BaireTree d = h.tree(t);
        Nat ext = max_bool_question(prune(d));
        Nat in = eval_set(max_bool_question_int())(h.encode(d, kNat)).as_nat();
        if (ext != in) return Mismatch{std::string::npos, neq("max_bool_question(prune) vs internal on encode", ext, in)};
        return std::nullopt;
      };
    case SuiteId::UniformAgree:
      return [h](const Term& t, const std::vector<Oracle>&, std::uint64_t) -> std::optional<Mismatch> {
        CantorTree pruned = prune(h.tree(t));
        Term dt = h.tree_int(t, kNat);
        Nat ext = max_bool_question(pruned);
        Nat in = eval_set(Term::app(max_bool_question_int(), dt)).as_nat();
        if (ext != in) return Mismatch{std::string::npos, neq("max_bool_question external vs internal", ext, in)};
        Nat mext = modulus_uni(pruned);
        Nat min = eval_set(Term::app(modulus_uni_int(), dt)).as_nat();
        if (mext != min) return Mismatch{std::string::npos, neq("modulus_uni external vs internal", mext, min)};
        return std::nullopt;
      };
    case SuiteId::UniformContinuity:
      return [h, lim = opt.exhaustive_limit, pairs = opt.sampled_pairs](
                 const Term& t, const std::vector<Oracle>&, std::uint64_t seed) -> std::optional<Mismatch> {
        SetValue f = eval_set(t);
        Nat m = eval_set(Term::app(modulus_uni_int(), h.tree_int(t, kNat))).as_nat();
        std::mt19937_64 rng(seed);
        auto check = [&](const std::vector<bool>& prefix) -> std::optional<Mismatch> {
          BoolOracle a = agreeing_bits(prefix, rng), b = agreeing_bits(prefix, rng);
          Nat fa = run_on(f, embed(a)), fb = run_on(f, embed(b));
          if (fa == fb) return std::nullopt;
          return Mismatch{std::string::npos, "uniform modulus " + std::to_string(m) + " violated by " +
                                                 a.str() + " / " + b.str() + ": " + std::to_string(fa) +
                                                 " != " + std::to_string(fb)};
        };
        std::vector<bool> prefix(m);
        if (m <= lim) {
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            for (Nat j = 0; j < m; ++j) prefix[j] = (bits >> j) & 1;
            if (auto bad = check(prefix)) return bad;
          }
        } else {
          for (std::size_t k = 0; k < pairs; ++k) {
            for (Nat j = 0; j < m; ++j) prefix[j] = rng() & 1;
            if (auto bad = check(prefix)) return bad;
          }
        }
        return std::nullopt;
      };
    case SuiteId::EncodedEval:
      break;
  }
  throw std::invalid_argument("no term property for suite " + suite_name(id));
}

bool oracle_free(SuiteId id) {
  return id == SuiteId::MaxBoolQuestion || id == SuiteId::UniformAgree || id == SuiteId::UniformContinuity;
}

std::vector<Oracle> oracles_for(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<Oracle> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen_oracle(rng));
  return out;
}

// Runs body(i, failures_i) over [0, n) and concatenates the failures in index order.
template <class Body>
std::vector<Failure> for_each_input(std::size_t n, Execution exec, const Body& body) {
  std::vector<std::vector<Failure>> per(n);
  if (exec == Execution::Parallel) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i), per[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i, per[i]);
  }
  std::vector<Failure> all;
  for (auto& v : per)
    for (auto& f : v) all.push_back(std::move(f));
  return all;
}

Report run_tree_suite(const GenConfig& cfg, std::size_t n_trees, std::size_t n_oracles,
                      const SuiteOptions& opt) {
  Report rep;
  rep.suite = SuiteId::EncodedEval;
  rep.inputs = n_trees;
  rep.cases = n_trees * n_oracles;
  const Ty motive = church::baire_motive();
  rep.failures = for_each_input(n_trees, opt.execution, [&](std::size_t i, std::vector<Failure>& out) {
    std::uint64_t seed = mix(cfg.seed, 36, i);
    std::string input = "gen_tree(" + std::to_string(seed) + ", " + std::to_string(opt.tree_depth) + ")";
    std::vector<Oracle> as = oracles_for(mix(seed, 1), n_oracles);
    try {
      FuelGuard guard(opt.fuel);
      BaireTree d = gen_tree(seed, opt.tree_depth);
      SetValue internal = eval_set(church::dialogue_f_int())(opt.hooks.encode(d, motive));
      for (const auto& a : as) {
        Nat lhs = dieval(d, a), rhs = run_on(internal, a);
        if (lhs != rhs) {
          out.push_back({input, a.str(), neq("dieval vs internal dialogue on encode", lhs, rhs), ""});
          return;
        }
      }
    } catch (const std::exception& e) {
      out.push_back({input, "", e.what(), ""});
    }
  });
  return rep;
}

}  // namespace

Report run_suite_on(SuiteId which, const std::vector<Term>& terms, const GenConfig& cfg,
                    std::size_t n_trees, std::size_t n_oracles, const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  if (which == SuiteId::EncodedEval) {
    rep = run_tree_suite(cfg, n_trees, n_oracles, opt);
  } else {
    rep.suite = which;
    rep.inputs = terms.size();
    const bool no_oracles = oracle_free(which);
    rep.cases = terms.size() * (no_oracles ? 1 : n_oracles);
    TermProperty prop = property_for(which, opt);

    // Failure or exhausted budget, as seen by the shrinker.
    auto fails = [&](const Term& t, const std::vector<Oracle>& as, std::uint64_t seed) {
      try {
        FuelGuard guard(opt.fuel);
        return prop(t, as, seed).has_value();
      } catch (const std::exception&) {
        return true;
      }
    };

    rep.failures = for_each_input(terms.size(), opt.execution, [&](std::size_t i, std::vector<Failure>& out) {
      const Term& t = terms[i];
      std::uint64_t seed = mix(cfg.seed, static_cast<std::uint64_t>(which) + 100, i);
      std::vector<Oracle> as = no_oracles ? std::vector<Oracle>{} : oracles_for(mix(seed, 1), n_oracles);
      Failure f;
      f.input = pretty(t);
      try {
        FuelGuard guard(opt.fuel);
        auto bad = prop(t, as, seed);
        if (!bad) return;
        f.detail = bad->detail;
        if (bad->oracle < as.size()) {
          f.oracle = as[bad->oracle].str();
          as = {as[bad->oracle]};
        }
      } catch (const std::exception& e) {
        f.detail = e.what();
      }
      if (opt.shrink) {
        Term small = shrink(t, [&](const Term& c) { return fails(c, as, seed); });
        if (small != t) f.shrunk = pretty(small);
      }
      out.push_back(std::move(f));
    });
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report run_suite(SuiteId which, const GenConfig& cfg, std::size_t n_terms, std::size_t n_oracles,
                 const SuiteOptions& opt) {
  if (which == SuiteId::EncodedEval) return run_suite_on(which, {}, cfg, n_terms, n_oracles, opt);
  std::vector<Term> terms;
  if (opt.include_corpus) terms = corpus_terms();
  for (auto& t : gen_corpus(cfg, n_terms)) terms.push_back(std::move(t));
  return run_suite_on(which, terms, cfg, 0, n_oracles, opt);
}

// ---- shrinking ----

namespace {

struct Site {
  Term sub;
  Ty type;
};

void collect(const Term& t, const Ctx& ctx, std::vector<Site>& out) {
  out.push_back({t, type_of(t, ctx)});
  switch (t.kind()) {
    case TermKind::Lam:
      collect(t.child(0), ctx.extend(t.annotation()), out);
      break;
    case TermKind::Succ:
      collect(t.child(0), ctx, out);
      break;
    case TermKind::Rec:
      for (std::size_t i = 0; i < 3; ++i) collect(t.child(i), ctx, out);
      break;
    case TermKind::App:
      collect(t.child(0), ctx, out);
      collect(t.child(1), ctx, out);
      break;
    default:
      break;
  }
}

// Rebuilds t with its pre-order node `target` replaced by `with`.
Term replace_at(const Term& t, std::size_t& counter, std::size_t target, const Term& with) {
  if (counter++ == target) return with;
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.annotation(), replace_at(t.child(0), counter, target, with));
    case TermKind::Succ:
      return Term::succ(replace_at(t.child(0), counter, target, with));
    case TermKind::Rec: {
      Term a = replace_at(t.child(0), counter, target, with);
      Term b = replace_at(t.child(1), counter, target, with);
      Term c = replace_at(t.child(2), counter, target, with);
      return Term::rec(t.annotation(), a, b, c);
    }
    case TermKind::App: {
      Term f = replace_at(t.child(0), counter, target, with);
      Term a = replace_at(t.child(1), counter, target, with);
      return Term::app(f, a);
    }
    default:
      return t;
  }
}

}  // namespace

Term shrink(const Term& t, const std::function<bool(const Term&)>& still_fails) {
  Term cur = t;
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<Site> sites;
    collect(cur, {}, sites);
    for (std::size_t i = 0; i < sites.size() && !progress; ++i) {
      const Site& s = sites[i];
      std::vector<Term> candidates{canonical(s.type)};
      // Succ, Rec and App bind nothing, so their children live in the same context.
      std::size_t kids = 0;
      if (s.sub.kind() == TermKind::Succ) kids = 1;
      if (s.sub.kind() == TermKind::App) kids = 2;
      if (s.sub.kind() == TermKind::Rec) kids = 3;
      for (std::size_t k = 0; k < kids; ++k) candidates.push_back(s.sub.child(k));
      for (const Term& c : candidates) {
        if (c.node_count() >= s.sub.node_count()) continue;
        std::size_t counter = 0;
        Term next = replace_at(cur, counter, i, c);
        try {
          if (type_of(next) != type_of(cur)) continue;
        } catch (const std::exception&) {
          continue;
        }
        if (still_fails(next)) {
          cur = next;
          progress = true;
          break;
        }
      }
    }
  }
  return cur;
}

}  // namespace systemt::harness
