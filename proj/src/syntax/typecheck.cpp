#include <unordered_map>

#include "systemt/syntax.hpp"

namespace systemt {

namespace {

// Types with unification variables, used only while elaborating.
struct MTy;
using MTyP = std::shared_ptr<MTy>;
struct MTy {
  enum class K { Nat, Arrow, Meta } k;
  MTyP dom, cod;
  std::size_t id = 0;
};

class Elaborator {
 public:
  Elaborator(const Ctx& ctx, const std::vector<std::string>& names) {
    for (std::size_t i = ctx.size(); i-- > 0;) {
      std::string name = i < names.size() ? names[i] : level_name(ctx.size() - 1 - i);
      scope_.push_back({std::move(name), lift(ctx.lookup(i))});
    }
  }

  Typed run(const RawTerm& raw) {
    MTyP t = infer(raw);
    Term term = build(raw, scope_.size());
    return {std::move(term), zonk(t)};
  }

 private:
  struct Binding {
    std::string name;
    MTyP type;
  };

  static MTyP nat() {
    static const MTyP n = std::make_shared<MTy>(MTy{MTy::K::Nat, nullptr, nullptr, 0});
    return n;
  }
  static MTyP arrow(MTyP a, MTyP b) {
    return std::make_shared<MTy>(MTy{MTy::K::Arrow, std::move(a), std::move(b), 0});
  }
  MTyP fresh() {
    solution_.push_back(nullptr);
    return std::make_shared<MTy>(MTy{MTy::K::Meta, nullptr, nullptr, solution_.size() - 1});
  }

  static MTyP lift(const Ty& t) {
    return t.is_nat() ? nat() : arrow(lift(t.domain()), lift(t.codomain()));
  }

  MTyP resolve(MTyP t) const {
    while (t->k == MTy::K::Meta && solution_[t->id]) t = solution_[t->id];
    return t;
  }

  // Unsolved metas default to nat.
  Ty zonk(const MTyP& t) const {
    MTyP r = resolve(t);
    if (r->k == MTy::K::Arrow) return Ty::arrow(zonk(r->dom), zonk(r->cod));
    return Ty::nat();
  }

  bool occurs(std::size_t id, const MTyP& t) const {
    MTyP r = resolve(t);
    if (r->k == MTy::K::Meta) return r->id == id;
    if (r->k == MTy::K::Arrow) return occurs(id, r->dom) || occurs(id, r->cod);
    return false;
  }

  bool unify_inner(const MTyP& a, const MTyP& b) {
    MTyP x = resolve(a), y = resolve(b);
    if (x == y) return true;
    if (x->k == MTy::K::Meta) {
      if (y->k == MTy::K::Meta && y->id == x->id) return true;
      if (occurs(x->id, y)) return false;
      solution_[x->id] = y;
      return true;
    }
    if (y->k == MTy::K::Meta) return unify_inner(y, x);
    if (x->k != y->k) return false;
    if (x->k == MTy::K::Nat) return true;
    return unify_inner(x->dom, y->dom) && unify_inner(x->cod, y->cod);
  }

  void unify(const MTyP& expected, const MTyP& found, SourcePos pos) {
    if (!unify_inner(expected, found)) throw TypeError(pos, zonk(expected), zonk(found));
  }

  const Binding& lookup(const std::string& name, SourcePos pos, std::size_t* index) const {
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i].name == name) {
        *index = scope_.size() - 1 - i;
        return scope_[i];
      }
    }
    throw UnboundVariable(pos, name);
  }

  MTyP infer(const RawTerm& r) {
    switch (r.kind) {
      case RawTerm::Kind::Var: {
        std::size_t idx;
        return lookup(r.name, r.pos, &idx).type;
      }
      case RawTerm::Kind::Zero:
      case RawTerm::Kind::Numeral:
        return nat();
      case RawTerm::Kind::Succ:
        unify(nat(), infer(r.kids[0]), r.kids[0].pos);
        return nat();
      case RawTerm::Kind::Rec: {
        MTyP m = lift(*r.annot);
        unify(arrow(nat(), arrow(m, m)), infer(r.kids[0]), r.kids[0].pos);
        unify(m, infer(r.kids[1]), r.kids[1].pos);
        unify(nat(), infer(r.kids[2]), r.kids[2].pos);
        return m;
      }
      case RawTerm::Kind::Lam: {
        MTyP dom = r.annot ? lift(*r.annot) : fresh();
        binder_types_[&r] = dom;
        scope_.push_back({r.name, dom});
        MTyP body = infer(r.kids[0]);
        scope_.pop_back();
        return arrow(dom, body);
      }
      case RawTerm::Kind::App: {
        MTyP f = infer(r.kids[0]);
        MTyP a = infer(r.kids[1]);
        MTyP rf = resolve(f);
        if (rf->k == MTy::K::Arrow) {
          unify(rf->dom, a, r.kids[1].pos);
          return rf->cod;
        }
        MTyP result = fresh();
        unify(f, arrow(a, result), r.kids[0].pos);
        return result;
      }
    }
    return nat();
  }

  // Second pass: names to indices, with solved binder types.
  Term build(const RawTerm& r, std::size_t depth) {
    switch (r.kind) {
      case RawTerm::Kind::Var: {
        std::size_t idx;
        lookup(r.name, r.pos, &idx);
        return Term::var(idx);
      }
      case RawTerm::Kind::Zero:
        return Term::zero();
      case RawTerm::Kind::Numeral:
        return numeral(r.value);
      case RawTerm::Kind::Succ:
        return Term::succ(build(r.kids[0], depth));
      case RawTerm::Kind::Rec:
        return Term::rec(*r.annot, build(r.kids[0], depth), build(r.kids[1], depth),
                         build(r.kids[2], depth));
      case RawTerm::Kind::Lam: {
        MTyP dom = binder_types_.at(&r);
        scope_.push_back({r.name, dom});
        Term body = build(r.kids[0], depth + 1);
        scope_.pop_back();
        return Term::lam(zonk(dom), std::move(body));
      }
      case RawTerm::Kind::App:
        return Term::app(build(r.kids[0], depth), build(r.kids[1], depth));
    }
    return Term::zero();
  }

  std::vector<Binding> scope_;  // outermost first
  std::vector<MTyP> solution_;
  std::unordered_map<const RawTerm*, MTyP> binder_types_;
};

}  // namespace

Typed typecheck(const RawTerm& raw, const Ctx& ctx, const std::vector<std::string>& names) {
  return Elaborator(ctx, names).run(raw);
}

Typed check_source(std::string_view text, const Ctx& ctx) { return typecheck(parse(text), ctx); }

}  // namespace systemt
