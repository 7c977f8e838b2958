#include "qloop/catalog.hpp"
#include "qloop/errors.hpp"
#include "qloop/structure.hpp"

#include "oracles.hpp"

#include <doctest.h>

using qloop::Magma;
using qloop::SubloopKind;

TEST_CASE("centers agree with brute force") {
  for (const auto& name : qloop::catalog::names()) {
    const Magma m = *qloop::catalog::lookup(name);
    if (!m.is_loop())
      continue;
    CHECK(qloop::center(m).elements == oracle::center(m.rows()));
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& m : qloop::enumerate_loops(n))
      CHECK(qloop::center(m).elements == oracle::center(m.rows()));
}

TEST_CASE("centers of small groups") {
  CHECK(qloop::center(qloop::catalog::symmetric3()).elements == std::vector<int>{1});
  CHECK(qloop::center(qloop::catalog::dihedral4()).elements == std::vector<int>{1, 3}); // e, r^2
  CHECK(qloop::center(qloop::catalog::quaternion8()).elements == std::vector<int>{1, 2}); // 1, -1
  CHECK(qloop::center(qloop::catalog::cyclic(6)).elements.size() == 6);
}

TEST_CASE("nuclei of a group are everything") {
  const Magma s3 = qloop::catalog::symmetric3();
  for (auto kind : {SubloopKind::LeftNucleus, SubloopKind::MiddleNucleus, SubloopKind::RightNucleus,
                    SubloopKind::Nucleus})
    CHECK(qloop::nucleus(s3, kind).elements.size() == 6);
  CHECK(qloop::nucleus(s3, SubloopKind::Commutant).elements == std::vector<int>{1});
  CHECK(qloop::nucleus(qloop::catalog::theta(), SubloopKind::Center).closed);
}

TEST_CASE("center rank") {
  CHECK(qloop::center_rank(qloop::catalog::dihedral4()).rank == 1);
  CHECK(qloop::center_rank(qloop::catalog::quaternion8()).rank == 1);
  CHECK(qloop::center_rank(qloop::catalog::symmetric3()).rank == 0);
  CHECK(qloop::center_rank(qloop::catalog::klein()).rank == 2);
  CHECK(qloop::center_rank(qloop::catalog::cyclic(6)).rank == 1);
  const auto r = qloop::center_rank(qloop::catalog::klein());
  CHECK(qloop::generated(qloop::catalog::klein(), r.generators).size() == 4);
}

TEST_CASE("indecomposability") {
  CHECK(qloop::is_indecomposable(qloop::catalog::dihedral4()));
  CHECK(qloop::is_indecomposable(qloop::catalog::quaternion8()));
  CHECK(qloop::is_indecomposable(qloop::catalog::cyclic(4)));
  CHECK(qloop::is_indecomposable(qloop::catalog::cyclic(8)));
  CHECK(qloop::is_indecomposable(qloop::catalog::symmetric3()));
  CHECK_FALSE(qloop::is_indecomposable(qloop::catalog::cyclic(6)));
  CHECK_FALSE(qloop::is_indecomposable(qloop::catalog::klein()));
  CHECK_THROWS_AS(qloop::is_indecomposable(qloop::catalog::theta()), qloop::StructureError);
  CHECK_THROWS_AS(qloop::is_indecomposable(qloop::catalog::dihedral4(), 4), qloop::BudgetError);
}

TEST_CASE("subgroups and generated subloops") {
  CHECK(qloop::subgroups(qloop::catalog::symmetric3()).size() == 6);
  CHECK(qloop::subgroups(qloop::catalog::quaternion8()).size() == 6);
  CHECK(qloop::subgroups(qloop::catalog::dihedral4()).size() == 10);
  CHECK(qloop::generated(qloop::catalog::cyclic(6), {3}) == std::vector<int>{1, 3, 5});
  CHECK(qloop::is_closed(qloop::catalog::cyclic(6), {1, 4}));
  CHECK_FALSE(qloop::is_closed(qloop::catalog::cyclic(6), {1, 2}));
  const Magma z = qloop::subtable(qloop::catalog::cyclic(6), {1, 3, 5});
  CHECK(z.order() == 3);
  CHECK(z.is_loop());
}

TEST_CASE("commutators") {
  CHECK(qloop::commutators(qloop::catalog::dihedral4()) == std::set<int>{1, 3});
  CHECK(qloop::commutators(qloop::catalog::quaternion8()) == std::set<int>{1, 2});
  CHECK(qloop::commutators(qloop::catalog::klein()) == std::set<int>{1});
}

TEST_CASE("structure requires a loop") {
  CHECK_THROWS_AS(qloop::center(qloop::catalog::otimes_recomputed()), qloop::StructureError);
  CHECK_FALSE(qloop::is_group(qloop::catalog::theta()));
  CHECK(qloop::is_group(qloop::catalog::quaternion8()));
}
