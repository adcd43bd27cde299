#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "systemt/fuel.hpp"
#include "systemt/oracle.hpp"
#include "systemt/syntax.hpp"

namespace systemt {

// Well-founded dialogue tree with natural-number queries and leaves, and
// children indexed by Answer (Nat for the Baire space, bool for the Cantor
// space). Children are a total function, so no structural equality is
// offered; trees are compared by running them against oracles.
template <class Answer>
class DTree {
 public:
  using Children = std::function<DTree(Answer)>;

  static DTree leaf(Nat value) { return DTree(std::make_shared<const Node>(Node{true, value, {}})); }
  static DTree branch(Children children, Nat query) {
    return DTree(std::make_shared<const Node>(Node{false, query, std::move(children)}));
  }

  bool is_leaf() const { return node_->is_leaf; }
  Nat value() const { return node_->payload; }  // leaf value
  Nat query() const { return node_->payload; }  // branch query
  DTree child(Answer a) const {
    burn_fuel();
    return node_->children(a);
  }

 private:
  struct Node {
    bool is_leaf;
    Nat payload;
    Children children;
  };
  explicit DTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using BaireTree = DTree<Nat>;
using CantorTree = DTree<bool>;

// Runs a tree against an oracle: follow the answered child until a leaf.
template <class Answer, class Oracle_>
Nat dieval(DTree<Answer> d, const Oracle_& alpha) {
  while (!d.is_leaf()) d = d.child(alpha(d.query()));
  return d.value();
}

BaireTree kleisli(std::function<BaireTree(Nat)> f, const BaireTree& d);
BaireTree functor_map(std::function<Nat(Nat)> g, const BaireTree& d);
BaireTree generic(const BaireTree& d);

// Dialogue-model value: a tree at nat, a host function at arrow types.
class DialValue {
 public:
  using Fn = std::function<DialValue(const DialValue&)>;

  static DialValue tree(BaireTree d) { return DialValue(std::move(d)); }
  static DialValue fun(Fn f) { return DialValue(std::make_shared<const Fn>(std::move(f))); }

  bool is_tree() const { return std::holds_alternative<BaireTree>(rep_); }
  const BaireTree& as_tree() const;
  DialValue operator()(const DialValue& arg) const;

 private:
  explicit DialValue(BaireTree d) : rep_(std::move(d)) {}
  explicit DialValue(std::shared_ptr<const Fn> f) : rep_(std::move(f)) {}
  std::variant<BaireTree, std::shared_ptr<const Fn>> rep_;
};

class DialEnv {
 public:
  DialEnv() = default;
  DialEnv extend(DialValue v) const;
  const DialValue& lookup(std::size_t index) const;

 private:
  struct Cell {
    DialValue value;
    std::shared_ptr<const Cell> next;
  };
  std::shared_ptr<const Cell> head_;
};

// Kleisli extension lifted pointwise to the interpretation of `sigma`.
DialValue gkleisli(const Ty& sigma, std::function<DialValue(Nat)> f, const BaireTree& d);

DialValue eval_dial(const Term& t, const DialEnv& env = {});

// Tree of a closed term of type (nat -> nat) -> nat; throws TypeMismatch otherwise.
BaireTree dialogue_tree(const Term& t);

// Bounded rendering: answers 0..answers-1 are listed at each branch and
// subtrees deeper than max_depth branches print as "(...)".
struct RenderOptions {
  Nat answers = 2;
  std::size_t max_depth = 64;
};
std::string render(const BaireTree& d, const RenderOptions& opt = {});
std::string render(const CantorTree& d, std::size_t max_depth = 64);

}  // namespace systemt
