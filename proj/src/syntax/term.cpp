#include "systemt/syntax.hpp"

#include <cassert>

namespace systemt {

// ---- types ----

Ty Ty::nat() { return Ty(nullptr); }

Ty Ty::arrow(Ty domain, Ty codomain) {
  return Ty(std::make_shared<const Node>(Node{std::move(domain), std::move(codomain)}));
}

Ty Ty::arrows(const std::vector<Ty>& args, Ty result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, result);
  return result;
}

const Ty& Ty::domain() const {
  if (!node_) throw std::logic_error("domain of nat");
  return node_->domain;
}

const Ty& Ty::codomain() const {
  if (!node_) throw std::logic_error("codomain of nat");
  return node_->codomain;
}

std::size_t Ty::size() const {
  return is_nat() ? 1 : 1 + domain().size() + codomain().size();
}

std::string Ty::str() const { return pretty(*this); }

bool operator==(const Ty& a, const Ty& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_nat() || b.is_nat()) return false;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

Ctx Ctx::extend(Ty t) const {
  std::vector<Ty> out;
  out.reserve(tys_.size() + 1);
  out.push_back(std::move(t));
  out.insert(out.end(), tys_.begin(), tys_.end());
  return Ctx(std::move(out));
}

const Ty& Ctx::lookup(std::size_t index) const {
  if (index >= tys_.size()) throw std::out_of_range("context index " + std::to_string(index));
  return tys_[index];
}

// ---- terms ----

struct Term::Node {
  TermKind kind;
  std::size_t index = 0;
  Ty annot = Ty::nat();
  std::vector<Term> kids;
};

Term Term::var(std::size_t index) {
  return Term(std::make_shared<const Node>(Node{TermKind::Var, index, Ty::nat(), {}}));
}

Term Term::zero() {
  static const Term z(std::make_shared<const Node>(Node{TermKind::Zero, 0, Ty::nat(), {}}));
  return z;
}

Term Term::succ(Term t) {
  return Term(std::make_shared<const Node>(Node{TermKind::Succ, 0, Ty::nat(), {std::move(t)}}));
}

Term Term::rec(Ty motive, Term step, Term base, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Rec, 0, std::move(motive), {std::move(step), std::move(base), std::move(arg)}}));
}

Term Term::lam(Ty domain, Term body) {
  return Term(
      std::make_shared<const Node>(Node{TermKind::Lam, 0, std::move(domain), {std::move(body)}}));
}

Term Term::app(Term fn, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::App, 0, Ty::nat(), {std::move(fn), std::move(arg)}}));
}

Term Term::apps(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

TermKind Term::kind() const { return node_->kind; }
std::size_t Term::index() const { return node_->index; }
const Ty& Term::annotation() const { return node_->annot; }
const Term& Term::child(std::size_t i) const { return node_->kids.at(i); }

std::size_t Term::node_count() const {
  std::size_t n = 1;
  for (const auto& k : node_->kids) n += k.node_count();
  return n;
}

std::optional<Nat> Term::as_numeral() const {
  Nat n = 0;
  const Node* cur = node_.get();
  while (cur->kind == TermKind::Succ) {
    ++n;
    cur = cur->kids[0].node_.get();
  }
  if (cur->kind != TermKind::Zero) return std::nullopt;
  return n;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.index != y.index) return false;
  if ((x.kind == TermKind::Lam || x.kind == TermKind::Rec) && x.annot != y.annot) return false;
  if (x.kids.size() != y.kids.size()) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (x.kids[i] != y.kids[i]) return false;
  return true;
}

Term numeral(Nat n) {
  Term t = Term::zero();
  for (Nat i = 0; i < n; ++i) t = Term::succ(std::move(t));
  return t;
}

// ---- errors ----

namespace {
std::string at(SourcePos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.col) + ": ";
}
}  // namespace

ParseError::ParseError(SourcePos p, std::string exp)
    : std::runtime_error(at(p) + "parse error: expected " + exp), pos(p), expected(std::move(exp)) {}

TypeError::TypeError(SourcePos p, Ty exp, Ty fnd)
    : std::runtime_error(at(p) + "type error: expected " + pretty(exp) + ", found " + pretty(fnd)),
      pos(p),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

UnboundVariable::UnboundVariable(SourcePos p, std::string n)
    : std::runtime_error(at(p) + "unbound variable " + n), pos(p), name(std::move(n)) {}

ArityError::ArityError(std::size_t missing)
    : std::runtime_error("substitution has no assignment for index " + std::to_string(missing)),
      index(missing) {}

TypeMismatch::TypeMismatch(Ty exp, Ty fnd)
    : std::runtime_error("expected a closed term of type " + pretty(exp) + ", got " + pretty(fnd)),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

// ---- core type synthesis ----

Ty type_of(const Term& t, const Ctx& ctx) {
  switch (t.kind()) {
    case TermKind::Var:
      if (t.index() >= ctx.size()) throw UnboundVariable({}, "#" + std::to_string(t.index()));
      return ctx.lookup(t.index());
    case TermKind::Zero:
      return Ty::nat();
    case TermKind::Succ: {
      Ty a = type_of(t.child(0), ctx);
      if (!a.is_nat()) throw TypeError({}, Ty::nat(), a);
      return Ty::nat();
    }
    case TermKind::Rec: {
      const Ty& m = t.annotation();
      Ty want_step = Ty::arrow(Ty::nat(), Ty::arrow(m, m));
      Ty step = type_of(t.child(0), ctx);
      if (step != want_step) throw TypeError({}, want_step, step);
      Ty base = type_of(t.child(1), ctx);
      if (base != m) throw TypeError({}, m, base);
      Ty arg = type_of(t.child(2), ctx);
      if (!arg.is_nat()) throw TypeError({}, Ty::nat(), arg);
      return m;
    }
    case TermKind::Lam:
      return Ty::arrow(t.annotation(), type_of(t.child(0), ctx.extend(t.annotation())));
    case TermKind::App: {
      Ty f = type_of(t.child(0), ctx);
      Ty a = type_of(t.child(1), ctx);
      if (f.is_nat()) throw TypeError({}, Ty::arrow(a, Ty::nat()), f);
      if (f.domain() != a) throw TypeError({}, f.domain(), a);
      return f.codomain();
    }
  }
  assert(false);
  return Ty::nat();
}

void expect_closed(const Term& t, const Ty& want) {
  Ty got = Ty::nat();
  try {
    got = type_of(t);
  } catch (const TypeError&) {
    throw TypeMismatch(want, Ty::nat());
  } catch (const UnboundVariable&) {  // open terms are not of any closed type
    throw TypeMismatch(want, Ty::nat());
  }
  if (got != want) throw TypeMismatch(want, got);
}

// ---- shifting and substitution ----

namespace {

template <class OnVar>
Term map_vars(const Term& t, std::size_t depth, const OnVar& on_var) {
  switch (t.kind()) {
    case TermKind::Var:
      return on_var(t.index(), depth);
    case TermKind::Zero:
      return t;
    case TermKind::Succ:
      return Term::succ(map_vars(t.child(0), depth, on_var));
    case TermKind::Rec:
      return Term::rec(t.annotation(), map_vars(t.child(0), depth, on_var),
                       map_vars(t.child(1), depth, on_var), map_vars(t.child(2), depth, on_var));
    case TermKind::Lam:
      return Term::lam(t.annotation(), map_vars(t.child(0), depth + 1, on_var));
    case TermKind::App:
      return Term::app(map_vars(t.child(0), depth, on_var), map_vars(t.child(1), depth, on_var));
  }
  return t;
}

}  // namespace

Term shift(const Term& t, std::size_t by, std::size_t cutoff) {
  if (by == 0) return t;
  return map_vars(t, cutoff, [by](std::size_t i, std::size_t depth) {
    return i >= depth ? Term::var(i + by) : Term::var(i);
  });
}

Term substitute(const Term& t, const std::map<std::size_t, Term>& subst) {
  return map_vars(t, 0, [&subst](std::size_t i, std::size_t depth) {
    if (i < depth) return Term::var(i);
    auto it = subst.find(i - depth);
    if (it == subst.end()) throw ArityError(i - depth);
    return shift(it->second, depth);
  });
}

}  // namespace systemt
