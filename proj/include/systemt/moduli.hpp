#pragma once

#include <algorithm>

#include "systemt/church.hpp"
#include "systemt/dialogue.hpp"
#include "systemt/oracle.hpp"

namespace systemt {

// Largest query asked along the path alpha selects; 0 at a leaf.
template <class Oracle_>
Nat max_question(BaireTree d, const Oracle_& alpha) {
  Nat m = 0;
  while (!d.is_leaf()) {
    m = std::max(m, d.query());
    d = d.child(alpha(d.query()));
  }
  return m;
}

// 1 + max_question, also for leaves.
template <class Oracle_>
Nat modulus(const BaireTree& d, const Oracle_& alpha) {
  return 1 + max_question(d, alpha);
}

// Restricts answers to {0, 1}.
CantorTree prune(const BaireTree& d);

// Largest query anywhere in a boolean tree.
Nat max_bool_question(const CantorTree& d);
Nat modulus_uni(const CantorTree& d);

// Closed System T terms. D = church_type(nat, nat).
Term max_term();              // nat -> nat -> nat
Term max_question_int();      // D -> (nat -> nat) -> nat
Term modulus_int();           // D -> (nat -> nat) -> nat
Term max_bool_question_int(); // D -> nat
Term modulus_uni_int();       // D -> nat

// Internal moduli of a closed t : (nat -> nat) -> nat, computed in the set model.
Nat internal_modulus(const Term& t, const Oracle& alpha);
Nat internal_uniform_modulus(const Term& t);

}  // namespace systemt
