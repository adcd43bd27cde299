#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace systemt {

using Nat = std::uint64_t;

// Types: the base type `nat` and arrows. Immutable, shared.
class Ty {
 public:
  static Ty nat();
  static Ty arrow(Ty domain, Ty codomain);
  // a1 -> a2 -> ... -> result
  static Ty arrows(const std::vector<Ty>& args, Ty result);

  bool is_nat() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }
  const Ty& domain() const;
  const Ty& codomain() const;

  std::size_t size() const;
  std::string str() const;

  friend bool operator==(const Ty& a, const Ty& b);
  friend bool operator!=(const Ty& a, const Ty& b) { return !(a == b); }

 private:
  struct Node;
  explicit Ty(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Ty::Node {
  Ty domain;
  Ty codomain;
};

// Typing context, index 0 is the most recently bound variable.
class Ctx {
 public:
  Ctx() = default;
  explicit Ctx(std::vector<Ty> innermost_first) : tys_(std::move(innermost_first)) {}

  Ctx extend(Ty t) const;
  const Ty& lookup(std::size_t index) const;
  std::size_t size() const { return tys_.size(); }
  bool empty() const { return tys_.empty(); }

 private:
  std::vector<Ty> tys_;
};

enum class TermKind { Var, Zero, Succ, Rec, Lam, App };

// Core terms with de Bruijn indices. Only Lam (domain) and Rec (motive)
// carry type annotations; everything else is recomputed by type_of.
class Term {
 public:
  static Term var(std::size_t index);
  static Term zero();
  static Term succ(Term t);
  static Term rec(Ty motive, Term step, Term base, Term arg);
  static Term lam(Ty domain, Term body);
  static Term app(Term fn, Term arg);
  // f a1 a2 ...
  static Term apps(Term fn, const std::vector<Term>& args);

  TermKind kind() const;
  std::size_t index() const;
  // Lam domain or Rec motive.
  const Ty& annotation() const;
  // Succ: child(0). Rec: step, base, arg. Lam: body. App: fn, arg.
  const Term& child(std::size_t i) const;

  std::size_t node_count() const;
  // Returns the n such that the term is succ^n zero, if it is one.
  std::optional<Nat> as_numeral() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Surface syntax, named variables, produced by the parser.
struct SourcePos {
  std::size_t line = 0;
  std::size_t col = 0;
};

struct RawTerm {
  enum class Kind { Var, Zero, Numeral, Succ, Rec, Lam, App };
  Kind kind = Kind::Zero;
  std::string name;           // Var, Lam binder
  Nat value = 0;              // Numeral
  std::optional<Ty> annot;    // Lam domain (optional), Rec motive
  std::vector<RawTerm> kids;
  SourcePos pos;
};

struct ParseError : std::runtime_error {
  ParseError(SourcePos p, std::string exp);
  SourcePos pos;
  std::string expected;
};

struct TypeError : std::runtime_error {
  TypeError(SourcePos p, Ty exp, Ty fnd);
  SourcePos pos;
  Ty expected;
  Ty found;
};

struct UnboundVariable : std::runtime_error {
  UnboundVariable(SourcePos p, std::string n);
  SourcePos pos;
  std::string name;
};

struct ArityError : std::runtime_error {
  explicit ArityError(std::size_t missing);
  std::size_t index;
};

struct TypeMismatch : std::runtime_error {
  TypeMismatch(Ty exp, Ty fnd);
  Ty expected;
  Ty found;
};

// Largest accepted decimal literal; numerals unfold into that many Succ nodes.
inline constexpr Nat kMaxNumeralLiteral = 100000;

RawTerm parse(std::string_view text);
Ty parse_type(std::string_view text);

// Default surface name of the variable bound at the given depth.
std::string level_name(std::size_t level);

// Resolves names and infers missing binder annotations by unification;
// unconstrained binder types default to nat. Free names are resolved
// against `names` (innermost first) or, when empty, against level names.
struct Typed {
  Term term;
  Ty type;
};
Typed typecheck(const RawTerm& raw, const Ctx& ctx = {},
                const std::vector<std::string>& names = {});
Typed check_source(std::string_view text, const Ctx& ctx = {});

// Synthesizes the type of a core term; throws TypeError when ill-typed.
Ty type_of(const Term& t, const Ctx& ctx = {});
// Throws TypeMismatch unless t is closed with exactly the given type.
void expect_closed(const Term& t, const Ty& want);

Term numeral(Nat n);

// Adds `by` to every free index >= cutoff.
Term shift(const Term& t, std::size_t by, std::size_t cutoff = 0);
// Capture-free simultaneous substitution of free indices.
Term substitute(const Term& t, const std::map<std::size_t, Term>& subst);

std::string pretty(const Term& t, std::size_t ctx_size = 0);
std::string pretty(const Ty& t);

}  // namespace systemt
