#include "systemt/syntax.hpp"

namespace systemt {

std::string level_name(std::size_t level) { return "x" + std::to_string(level); }

std::string pretty(const Ty& t) {
  if (t.is_nat()) return "nat";
  std::string dom = pretty(t.domain());
  if (t.domain().is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + pretty(t.codomain());
}

namespace {

// 0: anywhere, 1: head of an application, 2: argument position.
void print(const Term& t, std::size_t depth, int prec, std::string& out) {
  if (auto n = t.as_numeral()) {
    out += *n == 0 ? "zero" : std::to_string(*n);
    return;
  }
  switch (t.kind()) {
    case TermKind::Var:
      out += level_name(depth - 1 - t.index());
      return;
    case TermKind::Zero:
      out += "zero";
      return;
    case TermKind::Succ:
      if (prec > 1) out += '(';
      out += "succ ";
      print(t.child(0), depth, 2, out);
      if (prec > 1) out += ')';
      return;
    case TermKind::Rec:
      if (prec > 1) out += '(';
      out += "rec[" + pretty(t.annotation()) + "]";
      for (std::size_t i = 0; i < 3; ++i) {
        out += ' ';
        print(t.child(i), depth, 2, out);
      }
      if (prec > 1) out += ')';
      return;
    case TermKind::Lam:
      if (prec > 0) out += '(';
      out += "fun (" + level_name(depth) + " : " + pretty(t.annotation()) + ") -> ";
      print(t.child(0), depth + 1, 0, out);
      if (prec > 0) out += ')';
      return;
    case TermKind::App:
      if (prec > 1) out += '(';
      print(t.child(0), depth, 1, out);
      out += ' ';
      print(t.child(1), depth, 2, out);
      if (prec > 1) out += ')';
      return;
  }
}

}  // namespace

std::string pretty(const Term& t, std::size_t ctx_size) {
  std::string out;
  print(t, ctx_size, 0, out);
  return out;
}

}  // namespace systemt
