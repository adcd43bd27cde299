#include "systemt/church.hpp"

namespace systemt::church {

namespace {

const Ty N = Ty::nat();

Ty arr(Ty a, Ty b) { return Ty::arrow(std::move(a), std::move(b)); }
Term v(std::size_t i) { return Term::var(i); }
Term lam(Ty t, Term body) { return Term::lam(std::move(t), std::move(body)); }
Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
Term ap(Term f, Term a, Term b) { return ap(ap(std::move(f), std::move(a)), std::move(b)); }
Term ap(Term f, Term a, Term b, Term c) {
  return ap(ap(std::move(f), std::move(a), std::move(b)), std::move(c));
}

// ((nat -> A) -> nat -> A)
Ty branch_handler(const Ty& motive) { return arr(arr(N, motive), arr(N, motive)); }

}  // namespace

Ty church_type(const Ty& sigma, const Ty& motive) {
  return arr(arr(sigma, motive), arr(branch_handler(motive), motive));
}

Ty translate_type(const Ty& sigma, const Ty& motive) {
  if (sigma.is_nat()) return church_type(N, motive);
  return arr(translate_type(sigma.domain(), motive), translate_type(sigma.codomain(), motive));
}

Ty nat_motive() { return N; }
Ty baire_motive() { return arr(arr(N, N), N); }

// fun z e b -> e z
Term leaf_int(const Ty& motive) {
  return lam(N, lam(arr(N, motive), lam(branch_handler(motive), ap(v(1), v(2)))));
}

// fun phi x e b -> b (fun y -> phi y e b) x
Term branch_int(const Ty& motive) {
  Ty d = church_type(N, motive);
  return lam(arr(N, d),
             lam(N, lam(arr(N, motive),
                        lam(branch_handler(motive),
                            ap(v(0), lam(N, ap(v(4), v(0), v(2), v(1))), v(2))))));
}

// fun f d e' b' -> d (fun x -> f x e' b') b'
Term kleisli_int(const Ty& motive) {
  Ty d = church_type(N, motive);
  return lam(arr(N, d),
             lam(d, lam(arr(N, motive),
                        lam(branch_handler(motive),
                            ap(v(2), lam(N, ap(v(4), v(0), v(2), v(1))), v(0))))));
}

// fun f -> kleisli (fun x -> leaf (f x))
Term functor_int(const Ty& motive) {
  return lam(arr(N, N), ap(kleisli_int(motive), lam(N, ap(leaf_int(motive), ap(v(1), v(0))))));
}

// kleisli (branch leaf)
Term generic_int(const Ty& motive) {
  return ap(kleisli_int(motive), ap(branch_int(motive), leaf_int(motive)));
}

// nat: kleisli.  s1 -> s2: fun f d s -> gkleisli_{s2} (fun x -> f x s) d
Term gkleisli_int(const Ty& sigma, const Ty& motive) {
  if (sigma.is_nat()) return kleisli_int(motive);
  Ty d = church_type(N, motive);
  Ty whole = translate_type(sigma, motive);
  return lam(arr(N, whole),
             lam(d, lam(translate_type(sigma.domain(), motive),
                        ap(gkleisli_int(sigma.codomain(), motive),
                           lam(N, ap(v(3), v(0), v(1))), v(1)))));
}

Term translate(const Term& t, const Ty& motive) {
  switch (t.kind()) {
    case TermKind::Var:
      return t;
    case TermKind::Zero:
      return ap(leaf_int(motive), Term::zero());
    case TermKind::Succ:
      return ap(functor_int(motive), lam(N, Term::succ(v(0))), translate(t.child(0), motive));
    case TermKind::Rec: {
      // gkleisli_sigma (fun n -> rec[[sigma]] (fun x -> [t1] (leaf x)) [t2] n) [t3]
      const Ty& sigma = t.annotation();
      Term step = translate(t.child(0), motive);
      Term base = translate(t.child(1), motive);
      Term arg = translate(t.child(2), motive);
      Term inner = Term::rec(translate_type(sigma, motive),
                             lam(N, ap(shift(step, 2), ap(leaf_int(motive), v(0)))),
                             shift(base, 1), v(0));
      return ap(gkleisli_int(sigma, motive), lam(N, inner), arg);
    }
    case TermKind::Lam:
      return lam(translate_type(t.annotation(), motive), translate(t.child(0), motive));
    case TermKind::App:
      return ap(translate(t.child(0), motive), translate(t.child(1), motive));
  }
  return t;
}

Term dialogue_tree_int(const Term& t, const Ty& motive) {
  expect_closed(t, baire_motive());
  return ap(translate(t, motive), generic_int(motive));
}

// fun d -> d (fun z _ -> z) (fun phi x alpha -> phi (alpha x) alpha)
Term dialogue_f_int() {
  Ty a = baire_motive();
  return lam(church_type(N, a),
             ap(v(0), lam(N, lam(arr(N, N), v(1))),
                lam(arr(N, a), lam(N, lam(arr(N, N), ap(v(2), ap(v(0), v(1)), v(0)))))));
}

namespace {

SetValue encode_with(const BaireTree& d, const SetValue& leaf, const SetValue& branch) {
  if (d.is_leaf()) return leaf(SetValue::nat(d.value()));
  SetValue children = SetValue::fun([d, leaf, branch](const SetValue& y) {
    return encode_with(d.child(y.as_nat()), leaf, branch);
  });
  return branch(children)(SetValue::nat(d.query()));
}

}  // namespace

SetValue encode(const BaireTree& d, const Ty& motive) {
  return encode_with(d, eval_set(leaf_int(motive)), eval_set(branch_int(motive)));
}

}  // namespace systemt::church
