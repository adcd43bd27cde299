#include "systemt/moduli.hpp"

#include "systemt/set_model.hpp"

namespace systemt {

namespace {

const Ty N = Ty::nat();

Ty arr(Ty a, Ty b) { return Ty::arrow(std::move(a), std::move(b)); }
Term v(std::size_t i) { return Term::var(i); }
Term lam(Ty t, Term body) { return Term::lam(std::move(t), std::move(body)); }
Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
Term ap(Term f, Term a, Term b) { return ap(ap(std::move(f), std::move(a)), std::move(b)); }

Ty church_nat() { return church::church_type(N, N); }

}  // namespace

CantorTree prune(const BaireTree& d) {
  if (d.is_leaf()) return CantorTree::leaf(d.value());
  return CantorTree::branch([d](bool b) { return prune(d.child(embed_bit(b))); }, d.query());
}

Nat max_bool_question(const CantorTree& d) {
  if (d.is_leaf()) return 0;
  return std::max(d.query(),
                  std::max(max_bool_question(d.child(false)), max_bool_question(d.child(true))));
}

Nat modulus_uni(const CantorTree& d) { return 1 + max_bool_question(d); }

// max x y = y + (x monus y), with
//   pred n     = rec (fun k _ -> k) 0 n
//   monus x y  = rec (fun _ acc -> pred acc) x y
//   add a b    = rec (fun _ acc -> succ acc) a b
Term max_term() {
  Term pred_of_0 = Term::rec(N, lam(N, lam(N, v(1))), Term::zero(), v(0));
  Term monus = Term::rec(N, lam(N, lam(N, pred_of_0)), v(1), v(0));
  Term add = Term::rec(N, lam(N, lam(N, Term::succ(v(0)))), v(0), monus);
  return lam(N, lam(N, add));
}

// fun d alpha -> d (fun _ -> zero) (fun g x -> max x (g (alpha x)))
Term max_question_int() {
  return lam(church_nat(),
             lam(arr(N, N), ap(v(1), lam(N, Term::zero()),
                               lam(arr(N, N), lam(N, ap(max_term(), v(0), ap(v(1), ap(v(2), v(0)))))))));
}

// fun d alpha -> succ (max_question d alpha)
Term modulus_int() {
  return lam(church_nat(), lam(arr(N, N), Term::succ(ap(max_question_int(), v(1), v(0)))));
}

// fun d -> d (fun _ -> zero) (fun g x -> max x (max (g 0) (g 1)))
Term max_bool_question_int() {
  Term both = ap(max_term(), ap(v(1), numeral(0)), ap(v(1), numeral(1)));
  return lam(church_nat(), ap(v(0), lam(N, Term::zero()),
                              lam(arr(N, N), lam(N, ap(max_term(), v(0), both)))));
}

// fun d -> succ (max_bool_question d)
Term modulus_uni_int() {
  return lam(church_nat(), Term::succ(ap(max_bool_question_int(), v(0))));
}

Nat internal_modulus(const Term& t, const Oracle& alpha) {
  Term m = Term::app(modulus_int(), church::dialogue_tree_int(t, N));
  return run_on(m, alpha);
}

Nat internal_uniform_modulus(const Term& t) {
  return eval_set(Term::app(modulus_uni_int(), church::dialogue_tree_int(t, N))).as_nat();
}

}  // namespace systemt
