#include "systemt/acceptance.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "systemt/moduli.hpp"

namespace systemt::harness {

Oracle identity_prefix(Nat n) {
  Oracle o;
  for (Nat i = 0; i < n; ++i) o.prefix.push_back(i);
  return o;
}

std::string golden_translation(const Term& t, const std::string& motive_name) {
  Ty motive = motive_name == "nat" ? church::nat_motive() : church::baire_motive();
  return pretty(church::dialogue_tree_int(t, motive)) + "\n";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string summarize(const Report& r) {
  std::ostringstream os;
  os << suite_name(r.suite) << ": " << r.inputs << " inputs, " << r.cases << " cases, "
     << r.failures.size() << " failures, " << r.seconds << " s";
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    os << "; first: " << f.input << " [" << f.oracle << "] " << f.detail;
    if (!f.shrunk.empty()) os << " shrunk to " << f.shrunk;
  }
  return os.str();
}

struct Checker {
  bool ok = true;
  std::ostringstream log;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "FAILED " << what << "; ";
    }
  }
};

CriterionResult anchors() {
  auto t0 = Clock::now();
  Checker c;
  const Oracle id = identity_prefix();
  const Oracle zero{{}, 0};

  Term aa2 = check_source("fun (a : nat -> nat) -> a (a 2)").term;
  BaireTree d = dialogue_tree(aa2);
  c.expect(dieval(d, id) == 2, "aa2 dieval at identity = 2");
  c.expect(modulus(d, id) == 3, "aa2 modulus at identity = 3");
  c.expect(internal_modulus(aa2, id) == 3, "aa2 internal modulus at identity = 3");
  auto spy = run_instrumented(aa2, id);
  c.expect(spy.result == 2 && spy.max_index == Nat{2}, "aa2 direct run queries at most index 2");
  c.expect(internal_modulus(aa2, zero) == 3, "aa2 internal modulus at constant 0 = 3");

  Term a4 = check_source("fun a -> a 4").term;
  c.expect(internal_uniform_modulus(a4) == 5, "a4 internal uniform modulus = 5");
  c.expect(modulus_uni(prune(dialogue_tree(a4))) == 5, "a4 external uniform modulus = 5");
  auto spy4 = run_instrumented(a4, embed(BoolOracle{{true, false, true}, true}));
  c.expect(spy4.max_index == Nat{4}, "a4 direct run queries index 4");

  Term c7 = check_source("fun (a : nat -> nat) -> 7").term;
  BaireTree l7 = dialogue_tree(c7);
  c.expect(l7.is_leaf() && l7.value() == 7, "const7 tree is leaf 7");
  c.expect(modulus(l7, id) == 1 && internal_modulus(c7, id) == 1, "const7 modulus = 1");
  c.expect(!run_instrumented(c7, id).max_index.has_value(), "const7 direct run asks nothing");
  return {7, "hand-computed anchors", c.ok, c.ok ? "all anchors hold" : c.log.str(), since(t0)};
}

CriterionResult max_grid() {
  auto t0 = Clock::now();
  SetValue mx = eval_set(max_term());
  std::size_t bad = 0;
  for (Nat m = 0; m <= 200; ++m) {
    SetValue partial = mx(SetValue::nat(m));
    for (Nat n = 0; n <= 200; ++n)
      if (partial(SetValue::nat(n)).as_nat() != std::max(m, n)) ++bad;
  }
  double secs = since(t0);
  bool ok = bad == 0 && secs < 5.0;
  return {8, "max_term exhaustive grid [0,200]^2", ok,
          std::to_string(bad) + " mismatches in " + std::to_string(secs) + " s (limit 5 s)", secs};
}

CriterionResult round_trip_and_golden(const std::vector<Term>& generated, const std::string& golden_dir) {
  auto t0 = Clock::now();
  Checker c;
  std::vector<Term> corpus_t = corpus_terms();
  std::vector<Term> all = corpus_t;
  all.insert(all.end(), generated.begin(), generated.end());
  std::size_t trips = 0;
  for (const Term& t : all) {
    bool same = false;
    try {
      same = check_source(pretty(t)).term == t;
    } catch (const std::exception&) {
    }
    c.expect(same, "round trip of " + pretty(t));
    ++trips;
  }
  std::size_t goldens = 0;
  if (golden_dir.empty()) {
    c.expect(false, "golden directory not configured");
  } else {
    for (std::size_t i = 0; i < corpus().size(); ++i) {
      for (const std::string motive : {"nat", "baire"}) {
        std::string path = golden_dir + "/" + corpus()[i].name + "." + motive + ".t";
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        c.expect(in.good() || in.eof(), "readable " + path);
        c.expect(buf.str() == golden_translation(corpus_t[i], motive), "golden match " + path);
        ++goldens;
      }
    }
  }
  std::string detail = std::to_string(trips) + " round trips, " + std::to_string(goldens) + " golden files";
  if (!c.ok) detail += "; " + c.log.str();
  return {9, "round trip and golden translations", c.ok, detail, since(t0)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  std::vector<CriterionResult> out;
  GenConfig gen;
  gen.seed = cfg.seed;
  gen.size_budget = cfg.size_budget;

  std::vector<Term> generated = gen_corpus(gen, cfg.terms);
  std::vector<Term> terms = corpus_terms();
  terms.insert(terms.end(), generated.begin(), generated.end());

  SuiteOptions opt;
  opt.execution = cfg.execution;
  auto suite = [&](SuiteId id, std::size_t oracles) {
    return run_suite_on(id, terms, gen, cfg.trees, oracles, opt);
  };
  auto one = [&](int id, const std::string& title, const std::vector<Report>& reports, double limit) {
    bool ok = true;
    double secs = 0;
    std::string detail;
    for (const auto& r : reports) {
      ok = ok && r.passed();
      secs += r.seconds;
      detail += (detail.empty() ? "" : " | ") + summarize(r);
    }
    if (limit > 0) {
      ok = ok && secs < limit;
      detail += " (limit " + std::to_string(static_cast<int>(limit)) + " s)";
    }
    out.push_back({id, title, ok, detail, secs});
  };

  one(1, "dialogue tree correctness (eval_set = dieval . dialogue_tree)", {suite(SuiteId::Tree, 20)}, 60);
  one(2, "internal dialogue tree correctness", {suite(SuiteId::InternalTree, 20)}, 120);
  one(3, "internal dialogue operator on encoded trees", {suite(SuiteId::EncodedEval, 20)}, 0);
  one(4, "max question and modulus, external vs internal",
      {suite(SuiteId::MaxQuestion, 20), suite(SuiteId::ModulusAgree, 20)}, 0);
  one(5, "internal modulus is a modulus of continuity", {suite(SuiteId::Continuity, 10)}, 0);
  one(6, "uniform modulus agreement and correctness",
      {suite(SuiteId::MaxBoolQuestion, 0), suite(SuiteId::UniformAgree, 0), suite(SuiteId::UniformContinuity, 0)}, 0);
  out.push_back(anchors());
  out.push_back(max_grid());
  out.push_back(round_trip_and_golden(generated, cfg.golden_dir));
  return out;
}

}  // namespace systemt::harness
