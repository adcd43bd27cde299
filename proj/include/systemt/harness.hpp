#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "systemt/church.hpp"
#include "systemt/dialogue.hpp"
#include "systemt/oracle.hpp"
#include "systemt/set_model.hpp"
#include "systemt/syntax.hpp"

namespace systemt::harness {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t size_budget = 25;  // AST nodes
  Nat numeral_cap = 3;
  double rec_weight = 2;
  double lam_weight = 5;
  double app_weight = 3;
  double var_weight = 6;
  double succ_weight = 2;
  double numeral_weight = 2;
};

// splitmix64 finalizer, used to derive independent seeds.
std::uint64_t mix(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Closed fallback inhabitant: zero at nat, constant functions at arrows.
Term canonical(const Ty& t);

// Type-directed random term of the target type in ctx; deterministic in
// cfg.seed. Argument types of generated applications come from {nat, nat -> nat}.
Term gen_term(const GenConfig& cfg, const Ty& target, const Ctx& ctx = {});

// Prefix length in [0, 16], entries and default in [0, 10].
Oracle gen_oracle(const GenConfig& cfg);
Oracle gen_oracle(std::mt19937_64& rng);
BoolOracle gen_bool_oracle(std::mt19937_64& rng);

// Lazily generated finite tree: queries in [0, 20), leaves in [0, 50),
// at most max_depth branches on any path. Deterministic in seed.
BaireTree gen_tree(std::uint64_t seed, std::size_t max_depth = 6);

// The fixed ten-term corpus shipped under corpus/.
struct CorpusEntry {
  std::string name;  // file stem
  std::string source;
};
const std::vector<CorpusEntry>& corpus();
std::vector<Term> corpus_terms();

// Generated closed terms of type (nat -> nat) -> nat. Candidates whose probe
// evaluations exceed probe_fuel steps are discarded and regenerated.
std::vector<Term> gen_corpus(const GenConfig& cfg, std::size_t n, std::uint64_t probe_fuel = 200000);

enum class SuiteId {
  Tree,               // eval_set t alpha = dieval (dialogue_tree t) alpha
  EncodedEval,        // internal evaluation of encoded random trees
  InternalTree,       // internal tree of t, evaluated internally, = t alpha
  MaxQuestion,        // external and internal max question agree
  ModulusAgree,       // external and internal modulus agree
  Continuity,         // the internal modulus is a modulus of continuity
  MaxBoolQuestion,    // external and internal boolean max question agree
  UniformAgree,       // external and internal uniform modulus agree
  UniformContinuity,  // boolean inputs agreeing below it give equal results
};
const std::vector<SuiteId>& all_suites();
std::string suite_name(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view name);

struct Failure {
  std::string input;   // pretty-printed term, or tree seed
  std::string oracle;  // empty for oracle-free properties
  std::string detail;
  std::string shrunk;  // shrunk term, when shrinking applied
};

struct Report {
  SuiteId suite = SuiteId::Tree;
  std::size_t inputs = 0;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

// Replaceable pieces of the pipeline; tests swap in broken versions to check
// that the suites notice.
struct Hooks {
  std::function<BaireTree(const Term&)> tree = dialogue_tree;
  std::function<Term(const Term&, const Ty&)> tree_int = church::dialogue_tree_int;
  std::function<SetValue(const BaireTree&, const Ty&)> encode = church::encode;
};

enum class Execution { Serial, Parallel };

struct SuiteOptions {
  bool include_corpus = false;
  Execution execution = Execution::Parallel;
  Hooks hooks;
  std::uint64_t fuel = 50'000'000;  // per input
  bool shrink = true;
  std::size_t betas = 50;           // continuity: agreeing points per oracle
  std::size_t exhaustive_limit = 12;  // uniform-continuity: enumerate all prefixes up to this modulus
  std::size_t sampled_pairs = 200;    // uniform-continuity: pairs when the modulus is larger
  std::size_t tree_depth = 6;         // encoded-eval: random tree depth
};

// Runs one property over n_terms generated inputs (plus the corpus when
// requested) times n_oracles oracles each.
Report run_suite(SuiteId which, const GenConfig& cfg, std::size_t n_terms, std::size_t n_oracles,
                 const SuiteOptions& opt = {});
// Same, over explicitly given terms (ignored by encoded-eval).
Report run_suite_on(SuiteId which, const std::vector<Term>& terms, const GenConfig& cfg,
                    std::size_t n_trees, std::size_t n_oracles, const SuiteOptions& opt = {});

// Greedy shrinking: replace subterms by canonical inhabitants or by
// same-typed children while `still_fails` holds.
Term shrink(const Term& t, const std::function<bool(const Term&)>& still_fails);

// Sampled hereditarily extensional equality at shapes nat and nat -> shape.
// Exact at nat; at arrows, compares at `samples` points of [0, 50] drawn
// from seed. Throws std::invalid_argument at other shapes.
bool hee_check(const Ty& shape, const SetValue& a, const SetValue& b, std::size_t samples,
               std::uint64_t seed);

// Observes a value of type A at nat: applies it to sample naturals at nat
// domains and to sample oracles at (nat -> nat) domains.
std::vector<Nat> observe(const Ty& type, const SetValue& v);
// Handler pairs (leaf: nat -> A, branch: (nat -> A) -> nat -> A): a few fixed
// ones for the standard motives plus `generated` random ones.
std::vector<std::pair<Term, Term>> handler_battery(const Ty& motive, std::uint64_t seed,
                                                   std::size_t generated = 4);
// Applies a value of church_type(nat, A) to each handler pair and observes.
std::vector<Nat> observe_church(const Ty& motive, const SetValue& d,
                                const std::vector<std::pair<Term, Term>>& handlers);

// Direct evaluation at alpha, recording the largest index the program asks.
struct InstrumentedRun {
  Nat result = 0;
  std::optional<Nat> max_index;
};
InstrumentedRun run_instrumented(const Term& t, const Oracle& alpha);

}  // namespace systemt::harness
