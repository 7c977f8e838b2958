#pragma once

#include "qloop/magma.hpp"
#include "qloop/permutation.hpp"

#include <utility>

namespace qloop {

/// An isotopism (A, B, C) from a source operation · to a target ∘, read as
/// xA ∘ yB = (x·y)C. This one direction is used everywhere in the library.
struct IsotopismTriple {
  Permutation a;
  Permutation b;
  Permutation c;

  IsotopismTriple(Permutation a_, Permutation b_, Permutation c_);

  static IsotopismTriple identity(int degree);
  /// (p, p, p): the isotopism induced by an isomorphism.
  static IsotopismTriple diagonal(const Permutation& p);

  int degree() const noexcept { return a.degree(); }

  friend bool operator==(const IsotopismTriple&, const IsotopismTriple&) = default;
};

/// First t1, then t2.
IsotopismTriple compose(const IsotopismTriple& t1, const IsotopismTriple& t2);
IsotopismTriple invert(const IsotopismTriple& t);

/// The table ∘ with xA ∘ yB = (x·y)C, i.e. x ∘ y = ((xA⁻¹)·(yB⁻¹))C.
Magma apply_isotopism(const Magma& m, const IsotopismTriple& t);

/// True when t carries `source` onto `target` cell for cell.
bool is_isotopism(const Magma& source, const Magma& target, const IsotopismTriple& t);

/// True when (xy)p = xp ∘ yp for all x, y.
bool is_isomorphism(const Magma& source, const Magma& target, const Permutation& p);

/// (R_g, L_f, I): the principal isotope whose identity is f·g. Requires a loop.
Magma principal_isotope(const Magma& m, Element f, Element g);

/// The same triple on any quasigroup; the result is always a loop with
/// identity f·g, which is what the isotopy search reduces to.
Magma loop_isotope(const Magma& m, Element f, Element g);
IsotopismTriple loop_isotope_triple(const Magma& m, Element f, Element g);

/// x ∘ y with (a·x)·y = a·(x ∘ y).
Magma left_derivative(const Magma& m, Element a);
/// x ∗ y with x·(y·a) = (x ∗ y)·a.
Magma right_derivative(const Magma& m, Element a);

/// (L_a⁻¹, I, L_a⁻¹), which carries m onto left_derivative(m, a).
IsotopismTriple left_derivative_triple(const Magma& m, Element a);
/// (I, R_a⁻¹, R_a⁻¹), which carries m onto right_derivative(m, a).
IsotopismTriple right_derivative_triple(const Magma& m, Element a);

/// y ∘ x = x · y; the transpose of the Cayley table.
Magma parastrophe(const Magma& m);

enum class TranslationSide { Left, Right };

/// Given t carrying m1 onto m2, returns the pair that the translation law
/// equates: on the left side (L²_{xA}, B⁻¹ L¹_x C); on the right side
/// (R²_{xB}, A⁻¹ R¹_x C). Throws ContractError if t does not carry m1 onto m2.
std::pair<Permutation, Permutation> translation_image(const Magma& m1, const Magma& m2, const IsotopismTriple& t,
                                                      Element x, TranslationSide side = TranslationSide::Left);

} // namespace qloop
