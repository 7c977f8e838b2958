#include "qloop/catalog.hpp"
#include "qloop/errors.hpp"
#include "qloop/morphisms.hpp"

#include "oracles.hpp"

#include <doctest.h>

using qloop::IsotopismTriple;
using qloop::IsotopyStrategy;
using qloop::Magma;
using qloop::Permutation;
using qloop::Verdict;

namespace {

Permutation rp(int n, std::mt19937& rng) { return Permutation::from_images(oracle::random_perm(n, rng)); }

IsotopismTriple random_triple(int n, std::mt19937& rng) { return {rp(n, rng), rp(n, rng), rp(n, rng)}; }

void agree_with_oracles(const Magma& a, const Magma& b) {
  const auto iso = qloop::are_isomorphic(a, b);
  CHECK(iso.related() == oracle::isomorphic(a.rows(), b.rows()));
  if (iso.related())
    CHECK(qloop::is_isomorphism(a, b, *iso.isomorphism));
  if (!a.is_latin() || !b.is_latin())
    return;
  const bool expected = oracle::isotopic(a.rows(), b.rows());
  for (auto s : {IsotopyStrategy::TripleSearch, IsotopyStrategy::PrincipalIsotopes}) {
    const auto r = qloop::are_isotopic(a, b, qloop::default_node_budget, s);
    CHECK(r.related() == expected);
    if (r.related())
      CHECK(qloop::is_isotopism(a, b, *r.isotopism));
  }
}

} // namespace

TEST_CASE("searches agree with brute force on loops up to order 4") {
  std::vector<Magma> loops;
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : qloop::enumerate_loops(n))
      loops.push_back(m);
  std::mt19937 rng(1);
  // quasigroups that are not loops, and relabelled copies
  const std::size_t base = loops.size();
  for (std::size_t i = 0; i < base; ++i) {
    const int n = loops[i].order();
    loops.push_back(qloop::apply_isotopism(loops[i], random_triple(n, rng)));
    loops.push_back(qloop::relabel(loops[i], rp(n, rng)));
  }
  for (const auto& a : loops)
    for (const auto& b : loops)
      if (a.order() == b.order())
        agree_with_oracles(a, b);
}

TEST_CASE("searches agree with brute force on sampled order-5 loops") {
  const auto loops = qloop::enumerate_loops(5);
  REQUIRE(loops.size() == 56);
  std::mt19937 rng(2);
  for (int k = 0; k < 40; ++k) {
    const Magma& a = loops[rng() % loops.size()];
    const Magma b = k % 2 ? qloop::apply_isotopism(loops[rng() % loops.size()], random_triple(5, rng))
                          : qloop::relabel(a, rp(5, rng));
    agree_with_oracles(a, b);
  }
}

TEST_CASE("groups of order at most 6: isomorphic iff isotopic") {
  std::vector<Magma> groups;
  for (int n = 1; n <= 6; ++n)
    groups.push_back(qloop::catalog::cyclic(n));
  groups.push_back(qloop::catalog::klein());
  groups.push_back(qloop::catalog::symmetric3());
  for (const auto& a : groups)
    for (const auto& b : groups)
      if (a.order() == b.order())
        agree_with_oracles(a, b);
}

TEST_CASE("dihedral and quaternion groups of order 8 are not isomorphic") {
  const Magma d4 = qloop::catalog::dihedral4(), q8 = qloop::catalog::quaternion8();
  CHECK(qloop::are_isomorphic(d4, q8).verdict == Verdict::Unrelated);
  CHECK(qloop::are_isotopic(d4, q8).verdict == Verdict::Unrelated);
  CHECK(qloop::are_isotopic(d4, q8, qloop::default_node_budget, IsotopyStrategy::PrincipalIsotopes).verdict ==
        Verdict::Unrelated);
  // elements of order 2: five in D4, one in Q8
  auto involutions = [](const Magma& g) {
    int k = 0;
    for (int x = 2; x <= 8; ++x)
      k += g(x, x) == 1;
    return k;
  };
  CHECK(involutions(d4) == 5);
  CHECK(involutions(q8) == 1);
}

TEST_CASE("exhausted budget gives unknown, never unrelated") {
  std::mt19937 rng(4);
  const Magma q8 = qloop::catalog::quaternion8();
  const Magma other = qloop::relabel(q8, rp(8, rng));
  const auto r = qloop::are_isomorphic(q8, other, 1);
  CHECK(r.budget_exhausted);
  CHECK(r.verdict == Verdict::Unknown);
  const auto t = qloop::are_isotopic(q8, qloop::catalog::dihedral4(), 2);
  CHECK(t.verdict == Verdict::Unknown);
  CHECK(qloop::are_isotopic(q8, other, 1, IsotopyStrategy::PrincipalIsotopes).verdict == Verdict::Unknown);
}

TEST_CASE("isotopy needs latin tables") {
  CHECK_THROWS_AS(qloop::are_isotopic(qloop::catalog::otimes_printed(), qloop::catalog::theta()),
                  qloop::StructureError);
  CHECK(qloop::are_isotopic(qloop::catalog::cyclic(3), qloop::catalog::cyclic(4)).verdict == Verdict::Unrelated);
}

TEST_CASE("order-6 isotopes relate to the tables they came from") {
  const auto r = qloop::are_isotopic(qloop::catalog::theta(), qloop::catalog::otimes_recomputed());
  CHECK(r.related());
  CHECK(qloop::are_isotopic(qloop::catalog::theta_star(), qloop::catalog::oplus_printed()).related());
}

TEST_CASE("bridge between isotopes of a loop and of its parastrophe") {
  std::mt19937 rng(9);
  const Magma klein = qloop::catalog::klein();
  for (int k = 0; k < 20; ++k) {
    const auto a = rp(4, rng), c = rp(4, rng);
    const auto t2 = random_triple(4, rng);
    const IsotopismTriple t1{a, a, c};
    const auto b = qloop::parastrophe_isotopy_bridge(klein, t1, t2);
    CHECK(b.form == qloop::BridgeForm::Gamma);
    CHECK(b.triple == IsotopismTriple{t1.b.inverse() * t2.a, t1.a.inverse() * t2.b, t1.c.inverse() * t2.c});
    CHECK(qloop::is_isotopism(qloop::apply_isotopism(klein, t1),
                              qloop::apply_isotopism(qloop::parastrophe(klein), t2), b.triple));
  }
  // second form: only the parastrophe isotope commutative
  const auto z5 = qloop::catalog::cyclic(5);
  for (int k = 0; k < 20; ++k) {
    const auto d = rp(5, rng), f = rp(5, rng);
    IsotopismTriple t1 = random_triple(5, rng);
    if (qloop::apply_isotopism(z5, t1).is_commutative())
      continue;
    const auto b = qloop::parastrophe_isotopy_bridge(z5, t1, {d, d, f});
    CHECK(b.form == qloop::BridgeForm::Mu);
  }
  CHECK_THROWS_AS(qloop::parastrophe_isotopy_bridge(qloop::catalog::theta(), qloop::catalog::construction1_triple(),
                                                    qloop::catalog::construction2_triple()),
                  qloop::HypothesisError);
  CHECK_THROWS_AS(qloop::parastrophe_isotopy_bridge(qloop::catalog::otimes_recomputed(),
                                                    IsotopismTriple::identity(6), IsotopismTriple::identity(6)),
                  qloop::StructureError);
}
