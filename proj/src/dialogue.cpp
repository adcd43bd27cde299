#include "systemt/dialogue.hpp"

#include <stdexcept>

namespace systemt {

BaireTree kleisli(std::function<BaireTree(Nat)> f, const BaireTree& d) {
  if (d.is_leaf()) return f(d.value());
  return BaireTree::branch(
      [f = std::move(f), d](Nat y) { return kleisli(f, d.child(y)); }, d.query());
}

BaireTree functor_map(std::function<Nat(Nat)> g, const BaireTree& d) {
  return kleisli([g = std::move(g)](Nat x) { return BaireTree::leaf(g(x)); }, d);
}

BaireTree generic(const BaireTree& d) {
  return kleisli([](Nat n) { return BaireTree::branch(&BaireTree::leaf, n); }, d);
}

const BaireTree& DialValue::as_tree() const {
  if (auto* d = std::get_if<BaireTree>(&rep_)) return *d;
  throw std::logic_error("dialogue model: expected a tree, found a function");
}

DialValue DialValue::operator()(const DialValue& arg) const {
  auto* f = std::get_if<std::shared_ptr<const Fn>>(&rep_);
  if (!f) throw std::logic_error("dialogue model: applied a tree as a function");
  burn_fuel();
  return (**f)(arg);
}

DialEnv DialEnv::extend(DialValue v) const {
  DialEnv e;
  e.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
  return e;
}

const DialValue& DialEnv::lookup(std::size_t index) const {
  const Cell* c = head_.get();
  for (std::size_t i = 0; i < index && c; ++i) c = c->next.get();
  if (!c) throw std::out_of_range("dialogue model: unbound index " + std::to_string(index));
  return c->value;
}

DialValue gkleisli(const Ty& sigma, std::function<DialValue(Nat)> f, const BaireTree& d) {
  if (sigma.is_nat())
    return DialValue::tree(kleisli([f = std::move(f)](Nat x) { return f(x).as_tree(); }, d));
  return DialValue::fun([cod = sigma.codomain(), f = std::move(f), d](const DialValue& s) {
    return gkleisli(cod, [f, s](Nat x) { return f(x)(s); }, d);
  });
}

namespace {

// Natrec(step . leaf, base)(n), iterating upward from 0.
DialValue natrec(const DialValue& step, DialValue acc, Nat n) {
  for (Nat k = 0; k < n; ++k) acc = step(DialValue::tree(BaireTree::leaf(k)))(acc);
  return acc;
}

}  // namespace

DialValue eval_dial(const Term& t, const DialEnv& env) {
  switch (t.kind()) {
    case TermKind::Var:
      return env.lookup(t.index());
    case TermKind::Zero:
      return DialValue::tree(BaireTree::leaf(0));
    case TermKind::Succ:
      return DialValue::tree(
          functor_map([](Nat x) { return x + 1; }, eval_dial(t.child(0), env).as_tree()));
    case TermKind::Rec: {
      DialValue step = eval_dial(t.child(0), env);
      DialValue base = eval_dial(t.child(1), env);
      BaireTree arg = eval_dial(t.child(2), env).as_tree();
      return gkleisli(
          t.annotation(), [step, base](Nat n) { return natrec(step, base, n); }, arg);
    }
    case TermKind::Lam: {
      Term body = t.child(0);
      return DialValue::fun(
          [body, env](const DialValue& x) { return eval_dial(body, env.extend(x)); });
    }
    case TermKind::App: {
      DialValue f = eval_dial(t.child(0), env);
      return f(eval_dial(t.child(1), env));
    }
  }
  throw std::logic_error("dialogue model: unknown term");
}

BaireTree dialogue_tree(const Term& t) {
  expect_closed(t, Ty::arrow(Ty::arrow(Ty::nat(), Ty::nat()), Ty::nat()));
  DialValue generic_fn =
      DialValue::fun([](const DialValue& v) { return DialValue::tree(generic(v.as_tree())); });
  return eval_dial(t)(generic_fn).as_tree();
}

namespace {

template <class Answer, class Label>
void render_into(const DTree<Answer>& d, const std::vector<Answer>& answers, const Label& label,
                 std::size_t depth, std::size_t max_depth, std::string& out) {
  if (d.is_leaf()) {
    out += "(leaf " + std::to_string(d.value()) + ")";
    return;
  }
  if (depth >= max_depth) {
    out += "(...)";
    return;
  }
  out += "(branch " + std::to_string(d.query());
  for (const Answer& a : answers) {
    out += " (" + label(a) + " ";
    render_into(d.child(a), answers, label, depth + 1, max_depth, out);
    out += ")";
  }
  out += ")";
}

}  // namespace

std::string render(const BaireTree& d, const RenderOptions& opt) {
  std::vector<Nat> answers;
  for (Nat a = 0; a < opt.answers; ++a) answers.push_back(a);
  std::string out;
  render_into(d, answers, [](Nat a) { return std::to_string(a); }, 0, opt.max_depth, out);
  return out;
}

std::string render(const CantorTree& d, std::size_t max_depth) {
  std::string out;
  render_into(d, std::vector<bool>{false, true}, [](bool b) { return std::string(b ? "1" : "0"); },
              0, max_depth, out);
  return out;
}

}  // namespace systemt
