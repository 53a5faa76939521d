#pragma once

#include <optional>

#include "ramiq/class_function.hpp"

namespace ramiq {

// <a, b> = (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

// Res^G_H: values read off along the subgroup embedding.
ClassFunction restrict_to(const ClassFunction& a, const Subgroup& h);

// Ind_H^G by the Frobenius sum; a lives on h.group().
ClassFunction induce(const ClassFunction& a, const Subgroup& h);

// Characteristic module of the generators of a cyclic subgroup, as a class
// function on h.group(). Direct characteristic form; under debug asserts the
// proper-subgroup recursion is evaluated and compared on every call.
ClassFunction theta(const Subgroup& h);

// The recursion [1_H] - sum over proper cyclic B of (|B|/|H|) Ind theta_B.
ClassFunction theta_via_recursion(const Subgroup& h);

// sum over cyclic H of (|H|/|G|) Ind(theta_H * Res chi); equals chi.
ClassFunction artin_recover(const ClassFunction& chi);

// The class function psi(h)/(1-phi(h)) off ker phi and 0 on ker phi, for psi
// vanishing on ker phi; cross-checked against the polynomial representative
// -(1/|phi|) psi sum_d d phi^d.
ClassFunction localized_division(const ClassFunction& psi, const LinearCharacter& phi);

struct Decomposition {
  std::vector<Rational> multiplicities;  // table order
  bool integral = false;
};

Decomposition decompose(const ClassFunction& chi, const CharacterTable& table);

// Abelian groups: the dual group, computed from a cyclic decomposition.
// Non-abelian groups require a supplied table, which is validated.
CharacterTable irreducible_characters(std::shared_ptr<const FiniteGroup> g,
                                      std::optional<std::vector<ClassFunction>> supplied = {});

}  // namespace ramiq
