#include "systemt/set_model.hpp"

#include <stdexcept>

#include "systemt/fuel.hpp"

namespace systemt {

Nat SetValue::as_nat() const {
  if (auto* n = std::get_if<Nat>(&rep_)) return *n;
  throw std::logic_error("set model: expected a natural, found a function");
}

SetValue SetValue::operator()(const SetValue& arg) const {
  auto* f = std::get_if<std::shared_ptr<const Fn>>(&rep_);
  if (!f) throw std::logic_error("set model: applied a natural as a function");
  burn_fuel();
  return (**f)(arg);
}

SetEnv SetEnv::extend(SetValue v) const {
  SetEnv e;
  e.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
  e.size_ = size_ + 1;
  return e;
}

const SetValue& SetEnv::lookup(std::size_t index) const {
  const Cell* c = head_.get();
  for (std::size_t i = 0; i < index && c; ++i) c = c->next.get();
  if (!c) throw std::out_of_range("set model: unbound index " + std::to_string(index));
  return c->value;
}

namespace {

// Does index `i` occur free in t?
bool mentions(const Term& t, std::size_t i) {
  switch (t.kind()) {
    case TermKind::Var: return t.index() == i;
    case TermKind::Zero: return false;
    case TermKind::Succ: return mentions(t.child(0), i);
    case TermKind::Lam: return mentions(t.child(0), i + 1);
    case TermKind::App: return mentions(t.child(0), i) || mentions(t.child(1), i);
    case TermKind::Rec:
      return mentions(t.child(0), i) || mentions(t.child(1), i) || mentions(t.child(2), i);
  }
  return true;
}

// A step of the form fun k -> fun acc -> e with acc unused: only the last
// iteration contributes (predecessor is the usual case).
bool ignores_accumulator(const Term& step) {
  return step.kind() == TermKind::Lam && step.child(0).kind() == TermKind::Lam &&
         !mentions(step.child(0).child(0), 0);
}

}  // namespace

SetValue eval_set(const Term& t, const SetEnv& env) {
  switch (t.kind()) {
    case TermKind::Var:
      return env.lookup(t.index());
    case TermKind::Zero:
      return SetValue::nat(0);
    case TermKind::Succ: {
      if (auto n = t.as_numeral()) return SetValue::nat(*n);
      return SetValue::nat(eval_set(t.child(0), env).as_nat() + 1);
    }
    case TermKind::Rec: {
      SetValue step = eval_set(t.child(0), env);
      SetValue acc = eval_set(t.child(1), env);
      Nat n = eval_set(t.child(2), env).as_nat();
      if (n > 0 && ignores_accumulator(t.child(0))) return step(SetValue::nat(n - 1))(acc);
      for (Nat k = 0; k < n; ++k) acc = step(SetValue::nat(k))(acc);
      return acc;
    }
    case TermKind::Lam: {
      Term body = t.child(0);
      return SetValue::fun([body, env](const SetValue& x) { return eval_set(body, env.extend(x)); });
    }
    case TermKind::App: {
      SetValue f = eval_set(t.child(0), env);
      return f(eval_set(t.child(1), env));
    }
  }
  throw std::logic_error("set model: unknown term");
}

SetValue apply_set(const SetValue& f, const SetValue& a) { return f(a); }

SetValue lift_oracle(const Oracle& alpha) {
  return SetValue::fun([alpha](const SetValue& i) { return SetValue::nat(alpha(i.as_nat())); });
}

SetValue lift_oracle(std::function<Nat(Nat)> alpha) {
  return SetValue::fun(
      [alpha = std::move(alpha)](const SetValue& i) { return SetValue::nat(alpha(i.as_nat())); });
}

Nat run_on(const SetValue& f, const Oracle& alpha) { return f(lift_oracle(alpha)).as_nat(); }

Nat run_on(const Term& t, const Oracle& alpha) { return run_on(eval_set(t), alpha); }

}  // namespace systemt
