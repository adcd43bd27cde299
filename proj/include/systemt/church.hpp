#pragma once

#include "systemt/dialogue.hpp"
#include "systemt/set_model.hpp"
#include "systemt/syntax.hpp"

// Church-encoded dialogue trees inside System T, for a fixed motive A
// (the result type of the fold an encoded tree performs).
namespace systemt::church {

// (sigma -> A) -> ((nat -> A) -> nat -> A) -> A
Ty church_type(const Ty& sigma, const Ty& motive);
// Interpretation of types: nat goes to church_type(nat, A), arrows pointwise.
Ty translate_type(const Ty& sigma, const Ty& motive);

// The two motives exposed on the command line.
Ty nat_motive();    // nat
Ty baire_motive();  // (nat -> nat) -> nat

// Closed terms. Types, writing D for church_type(nat, A):
Term leaf_int(const Ty& motive);     // nat -> D
Term branch_int(const Ty& motive);   // (nat -> D) -> nat -> D
Term kleisli_int(const Ty& motive);  // (nat -> D) -> D -> D
Term functor_int(const Ty& motive);  // (nat -> nat) -> D -> D
Term generic_int(const Ty& motive);  // D -> D
// (nat -> [sigma]) -> D -> [sigma], [.] = translate_type(., A)
Term gkleisli_int(const Ty& sigma, const Ty& motive);

// Term in ctx of type sigma to a term in the translated ctx of type [sigma].
Term translate(const Term& t, const Ty& motive);
// translate(t) applied to generic_int; t must be closed at (nat -> nat) -> nat.
Term dialogue_tree_int(const Term& t, const Ty& motive);
// church_type(nat, (nat -> nat) -> nat) -> (nat -> nat) -> nat
Term dialogue_f_int();

// Host tree into the set-model interpretation of church_type(nat, A).
SetValue encode(const BaireTree& d, const Ty& motive);

}  // namespace systemt::church
