#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "systemt/oracle.hpp"
#include "systemt/syntax.hpp"

namespace systemt {

// Value of the set model: a natural at nat, a host function at arrow types.
// Only naturals are ever compared; functions are observed by application.
class SetValue {
 public:
  using Fn = std::function<SetValue(const SetValue&)>;

  static SetValue nat(Nat n) { return SetValue(n); }
  static SetValue fun(Fn f) { return SetValue(std::make_shared<const Fn>(std::move(f))); }

  bool is_nat() const { return std::holds_alternative<Nat>(rep_); }
  Nat as_nat() const;
  SetValue operator()(const SetValue& arg) const;

 private:
  explicit SetValue(Nat n) : rep_(n) {}
  explicit SetValue(std::shared_ptr<const Fn> f) : rep_(std::move(f)) {}
  std::variant<Nat, std::shared_ptr<const Fn>> rep_;
};

// Persistent environment; index 0 is the innermost binding.
class SetEnv {
 public:
  SetEnv() = default;
  SetEnv extend(SetValue v) const;
  const SetValue& lookup(std::size_t index) const;
  std::size_t size() const { return size_; }

 private:
  struct Cell {
    SetValue value;
    std::shared_ptr<const Cell> next;
  };
  std::shared_ptr<const Cell> head_;
  std::size_t size_ = 0;
};

SetValue eval_set(const Term& t, const SetEnv& env = {});
SetValue apply_set(const SetValue& f, const SetValue& a);
SetValue lift_oracle(const Oracle& alpha);
SetValue lift_oracle(std::function<Nat(Nat)> alpha);

// Evaluates a closed term of type (nat -> nat) -> nat at a point.
Nat run_on(const Term& t, const Oracle& alpha);
Nat run_on(const SetValue& f, const Oracle& alpha);

}  // namespace systemt
