#include "qloop/transforms.hpp"

#include "qloop/errors.hpp"

namespace qloop {

IsotopismTriple::IsotopismTriple(Permutation a_, Permutation b_, Permutation c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.degree() != b.degree() || a.degree() != c.degree())
    throw DomainError("isotopism components must share one degree");
}

IsotopismTriple IsotopismTriple::identity(int degree) {
  const auto i = Permutation::identity(degree);
  return {i, i, i};
}

IsotopismTriple IsotopismTriple::diagonal(const Permutation& p) { return {p, p, p}; }

IsotopismTriple compose(const IsotopismTriple& t1, const IsotopismTriple& t2) {
  if (t1.degree() != t2.degree())
    throw DomainError("cannot compose isotopisms of different degrees");
  return {t1.a * t2.a, t1.b * t2.b, t1.c * t2.c};
}

IsotopismTriple invert(const IsotopismTriple& t) { return {t.a.inverse(), t.b.inverse(), t.c.inverse()}; }

namespace {

void require_degree(const Magma& m, const IsotopismTriple& t) {
  if (t.degree() != m.order())
    throw DomainError("isotopism of degree " + std::to_string(t.degree()) + " applied to a table of order " +
                      std::to_string(m.order()));
}

} // namespace

Magma apply_isotopism(const Magma& m, const IsotopismTriple& t) {
  require_degree(m, t);
  require_latin(m, "isotopism");
  const Permutation ai = t.a.inverse();
  const Permutation bi = t.b.inverse();
  return Magma::from_operation(m.order(), [&](Element x, Element y) { return t.c(m(ai(x), bi(y))); });
}

bool is_isotopism(const Magma& source, const Magma& target, const IsotopismTriple& t) {
  if (source.order() != target.order() || t.degree() != source.order())
    return false;
  for (Element x = 1; x <= source.order(); ++x)
    for (Element y = 1; y <= source.order(); ++y)
      if (target(t.a(x), t.b(y)) != t.c(source(x, y)))
        return false;
  return true;
}

bool is_isomorphism(const Magma& source, const Magma& target, const Permutation& p) {
  if (source.order() != target.order() || p.degree() != source.order())
    return false;
  for (Element x = 1; x <= source.order(); ++x)
    for (Element y = 1; y <= source.order(); ++y)
      if (target(p(x), p(y)) != p(source(x, y)))
        return false;
  return true;
}

IsotopismTriple loop_isotope_triple(const Magma& m, Element f, Element g) {
  require_latin(m, "principal isotope");
  require_element(m, f);
  require_element(m, g);
  return {right_translation(m, g), left_translation(m, f), Permutation::identity(m.order())};
}

Magma loop_isotope(const Magma& m, Element f, Element g) {
  require_latin(m, "principal isotope");
  require_element(m, f);
  require_element(m, g);
  // x ∘ y = (x/g)·(f\y)
  return Magma::from_operation(m.order(),
                               [&](Element x, Element y) { return m(m.right_quotient(x, g), m.left_quotient(f, y)); });
}

Magma principal_isotope(const Magma& m, Element f, Element g) {
  require_loop(m, "principal isotope");
  return loop_isotope(m, f, g);
}

Magma left_derivative(const Magma& m, Element a) {
  require_latin(m, "left derivative");
  require_element(m, a);
  return Magma::from_operation(m.order(), [&](Element x, Element y) { return m.left_quotient(a, m(m(a, x), y)); });
}

Magma right_derivative(const Magma& m, Element a) {
  require_latin(m, "right derivative");
  require_element(m, a);
  return Magma::from_operation(m.order(), [&](Element x, Element y) { return m.right_quotient(m(x, m(y, a)), a); });
}

IsotopismTriple left_derivative_triple(const Magma& m, Element a) {
  const Permutation la_inv = left_translation(m, a).inverse();
  return {la_inv, Permutation::identity(m.order()), la_inv};
}

IsotopismTriple right_derivative_triple(const Magma& m, Element a) {
  const Permutation ra_inv = right_translation(m, a).inverse();
  return {Permutation::identity(m.order()), ra_inv, ra_inv};
}

Magma parastrophe(const Magma& m) { return transpose(m); }

std::pair<Permutation, Permutation> translation_image(const Magma& m1, const Magma& m2, const IsotopismTriple& t,
                                                      Element x, TranslationSide side) {
  require_latin(m1, "translation image");
  require_latin(m2, "translation image");
  require_element(m1, x);
  if (!is_isotopism(m1, m2, t))
    throw ContractError("the triple does not carry the first table onto the second");
  if (side == TranslationSide::Left)
    return {left_translation(m2, t.a(x)), t.b.inverse() * left_translation(m1, x) * t.c};
  return {right_translation(m2, t.b(x)), t.a.inverse() * right_translation(m1, x) * t.c};
}

} // namespace qloop
