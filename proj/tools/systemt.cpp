// Command-line front end: check, eval, tree, translate, modulus, umodulus, selftest.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "systemt/acceptance.hpp"
#include "systemt/church.hpp"
#include "systemt/dialogue.hpp"
#include "systemt/harness.hpp"
#include "systemt/moduli.hpp"

#ifndef SYSTEMT_GOLDEN_DIR
#define SYSTEMT_GOLDEN_DIR ""
#endif

using namespace systemt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitProperty = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Typed load(const std::string& path) {
  try {
    return check_source(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const TypeError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const UnboundVariable& e) {
    throw InputError(path + ":" + e.what());
  }
}

Term load_baire_function(const std::string& path) {
  Typed t = load(path);
  if (t.type != church::baire_motive())
    throw InputError(path + ": expected a term of type " + pretty(church::baire_motive()) +
                     ", found " + pretty(t.type));
  return t.term;
}

Oracle point(const std::string& oracle, const std::string& boracle) {
  try {
    if (!boracle.empty()) return embed(BoolOracle::parse(boracle));
    return Oracle::parse(oracle);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"System T dialogue trees and moduli of continuity"};
  app.require_subcommand(1);

  std::string file, oracle = "default=0", boracle, motive = "nat", suite, golden = SYSTEMT_GOLDEN_DIR;
  Nat answers = 2;
  std::size_t depth = 64, verify = 0, terms = 500, oracles = 20;
  std::uint64_t seed = harness::AcceptanceConfig{}.seed;

  auto* check = app.add_subcommand("check", "print the type of a term");
  check->add_option("FILE", file)->required();

  auto* eval = app.add_subcommand("eval", "run a (nat -> nat) -> nat term at a point");
  eval->add_option("FILE", file)->required();
  auto* eval_or = eval->add_option("--oracle", oracle, "\"n1,n2,...;default=d\"");
  eval->add_option("--boracle", boracle, "boolean point \"1,0,...;default=0\"")->excludes(eval_or);

  auto* tree = app.add_subcommand("tree", "print the dialogue tree as an s-expression");
  tree->add_option("FILE", file)->required();
  tree->add_option("--answers", answers, "answers listed per branch")->check(CLI::PositiveNumber);
  tree->add_option("--depth", depth, "branches printed before truncation");

  auto* translate = app.add_subcommand("translate", "print the internal dialogue tree term");
  translate->add_option("FILE", file)->required();
  translate->add_option("--motive", motive)->check(CLI::IsMember({"nat", "baire"}));

  auto* mod = app.add_subcommand("modulus", "internal modulus of continuity at a point");
  mod->add_option("FILE", file)->required();
  auto* mod_or = mod->add_option("--oracle", oracle);
  mod->add_option("--boracle", boracle)->excludes(mod_or);
  mod->add_option("--verify", verify, "check this many agreeing points");

  auto* umod = app.add_subcommand("umodulus", "internal modulus of uniform continuity");
  umod->add_option("FILE", file)->required();

  auto* self = app.add_subcommand("selftest", "run the property suites");
  std::string suite_ids;
  for (auto id : harness::all_suites()) suite_ids += (suite_ids.empty() ? "" : ", ") + harness::suite_name(id);
  self->add_option("--suite", suite, "one of " + suite_ids + "; default runs the acceptance criteria");
  self->add_option("--seed", seed);
  self->add_option("--terms", terms);
  self->add_option("--oracles", oracles);
  self->add_option("--golden", golden, "directory of golden translate outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help or the usage error
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) {
      std::cout << pretty(load(file).type) << "\n";
    } else if (*eval) {
      std::cout << run_on(load_baire_function(file), point(oracle, boracle)) << "\n";
    } else if (*tree) {
      std::cout << render(dialogue_tree(load_baire_function(file)), {answers, depth}) << "\n";
    } else if (*translate) {
      Ty m = motive == "nat" ? church::nat_motive() : church::baire_motive();
      std::cout << pretty(church::dialogue_tree_int(load_baire_function(file), m)) << "\n";
    } else if (*mod) {
      Term t = load_baire_function(file);
      Oracle alpha = point(oracle, boracle);
      Nat m = internal_modulus(t, alpha);
      std::cout << m << "\n";
      if (verify > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Nat> val(0, 10);
        SetValue f = eval_set(t);
        Nat at_alpha = run_on(f, alpha);
        std::size_t agree = 0;
        for (std::size_t k = 0; k < verify; ++k) {
          Oracle beta;
          for (Nat i = 0; i < m + 16; ++i) beta.prefix.push_back(i < m ? alpha(i) : val(rng));
          beta.default_value = val(rng);
          if (run_on(f, beta) == at_alpha) ++agree;
        }
        std::cout << "verified " << agree << "/" << verify << " agreeing points\n";
        if (agree != verify) return kExitProperty;
      }
    } else if (*umod) {
      std::cout << internal_uniform_modulus(load_baire_function(file)) << "\n";
    } else if (*self) {
      bool ok = true;
      if (!suite.empty()) {
        auto id = harness::parse_suite(suite);
        if (!id) throw InputError("unknown suite " + suite);
        harness::GenConfig cfg;
        cfg.seed = seed;
        harness::SuiteOptions opt;
        opt.include_corpus = true;
        harness::Report r = harness::run_suite(*id, cfg, terms, oracles, opt);
        std::cout << harness::suite_name(r.suite) << ": " << r.inputs << " inputs, " << r.cases
                  << " cases, " << r.failures.size() << " failures, " << r.seconds << " s\n";
        for (const auto& f : r.failures) {
          std::cout << "  " << f.input << " [" << f.oracle << "] " << f.detail << "\n";
          if (!f.shrunk.empty()) std::cout << "    shrunk: " << f.shrunk << "\n";
        }
        ok = r.passed();
      } else {
        harness::AcceptanceConfig cfg;
        cfg.seed = seed;
        cfg.terms = terms;
        cfg.golden_dir = golden;
        for (const auto& c : harness::run_acceptance(cfg)) {
          std::cout << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << c.detail
                    << "\n";
          ok = ok && c.passed;
        }
      }
      return ok ? kExitOk : kExitProperty;
    }
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const TypeMismatch& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
