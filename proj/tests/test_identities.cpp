#include "qloop/catalog.hpp"
#include "qloop/errors.hpp"
#include "qloop/identities.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <tuple>

using qloop::IdentityId;
using qloop::Magma;

namespace {

// Each law written out directly as lhs/rhs over a product function.
using Law = std::function<std::pair<int, int>(const std::function<int(int, int)>&, int, int, int)>;

const std::map<IdentityId, Law>& laws() {
  static const std::map<IdentityId, Law> table = {
      {IdentityId::C, [](auto m, int x, int y, int z) { return std::pair{m(m(m(y, x), x), z), m(y, m(x, m(x, z)))}; }},
      {IdentityId::LC1, [](auto m, int x, int y, int z) { return std::pair{m(m(x, x), m(y, z)), m(m(x, m(x, y)), z)}; }},
      {IdentityId::LC2, [](auto m, int x, int y, int z) { return std::pair{m(m(x, m(x, y)), z), m(x, m(x, m(y, z)))}; }},
      {IdentityId::LC3, [](auto m, int x, int y, int z) { return std::pair{m(m(m(x, x), y), z), m(x, m(x, m(y, z)))}; }},
      {IdentityId::LC4, [](auto m, int x, int y, int z) { return std::pair{m(m(y, m(x, x)), z), m(y, m(x, m(x, z)))}; }},
      {IdentityId::RC1, [](auto m, int x, int y, int z) { return std::pair{m(m(y, z), m(x, x)), m(y, m(m(z, x), x))}; }},
      {IdentityId::RC2, [](auto m, int x, int y, int z) { return std::pair{m(m(m(y, z), x), x), m(y, m(m(z, x), x))}; }},
      {IdentityId::RC3, [](auto m, int x, int y, int z) { return std::pair{m(m(m(y, z), x), x), m(y, m(z, m(x, x)))}; }},
      {IdentityId::RC4, [](auto m, int x, int y, int z) { return std::pair{m(m(m(y, x), x), z), m(y, m(m(x, x), z))}; }},
  };
  return table;
}

bool law_holds(const Magma& m, IdentityId id) {
  const auto& law = laws().at(id);
  auto mul = [&](int a, int b) { return m(a, b); };
  for (int x = 1; x <= m.order(); ++x)
    for (int y = 1; y <= m.order(); ++y)
      for (int z = 1; z <= m.order(); ++z) {
        auto [l, r] = law(mul, x, y, z);
        if (l != r)
          return false;
      }
  return true;
}

std::vector<Magma> sample_tables() {
  std::vector<Magma> out;
  for (const auto& name : qloop::catalog::names())
    out.push_back(*qloop::catalog::lookup(name));
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : qloop::enumerate_loops(n))
      out.push_back(m);
  return out;
}

} // namespace

TEST_CASE("identity checks agree with direct evaluation") {
  for (const auto& m : sample_tables())
    for (const auto& [id, law] : laws())
      CHECK(qloop::satisfies(m, id) == law_holds(m, id));
}

TEST_CASE("witness is the first failing triple and evaluates as reported") {
  const Magma& otimes = qloop::catalog::otimes_recomputed();
  auto mul = [&](int a, int b) { return otimes(a, b); };
  for (auto id : {IdentityId::LC1, IdentityId::LC3, IdentityId::LC4}) {
    const auto r = qloop::check_identity(otimes, id);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness);
    const auto w = *r.witness;
    auto [l, rhs] = laws().at(id)(mul, w.x, w.y, w.z);
    CHECK(l == w.lhs);
    CHECK(rhs == w.rhs);
    CHECK(l != rhs);
    bool earlier = false;
    for (int x = 1; x <= 6; ++x)
      for (int y = 1; y <= 6; ++y)
        for (int z = 1; z <= 6; ++z)
          if (std::tuple{x, y, z} < std::tuple{w.x, w.y, w.z}) {
            auto [a, b] = laws().at(id)(mul, x, y, z);
            earlier = earlier || a != b;
          }
    CHECK_FALSE(earlier);
  }
}

TEST_CASE("profile of the order-6 tables") {
  const Magma& theta = qloop::catalog::theta();
  const Magma& tstar = qloop::catalog::theta_star();
  for (auto id : qloop::members(qloop::Family::LC))
    CHECK(qloop::satisfies(theta, id));
  for (auto id : qloop::members(qloop::Family::RC))
    CHECK(qloop::satisfies(tstar, id));
  CHECK_FALSE(qloop::satisfies(theta, IdentityId::C));
  CHECK_FALSE(qloop::satisfies(tstar, IdentityId::C));
  CHECK(qloop::is_lc_loop(theta));
  CHECK_FALSE(qloop::is_rc_loop(theta));
  CHECK(qloop::is_rc_loop(tstar));

  const Magma& otimes = qloop::catalog::otimes_recomputed();
  CHECK(qloop::satisfies(otimes, IdentityId::LC2));
  CHECK_FALSE(qloop::satisfies(otimes, IdentityId::LC1));
  CHECK_FALSE(qloop::satisfies(otimes, IdentityId::LC3));
  CHECK_FALSE(qloop::satisfies(otimes, IdentityId::LC4));
  CHECK(otimes.left_identities() == std::vector<int>{5});
  CHECK(otimes.right_identities().empty());

  const Magma& oplus = qloop::catalog::oplus_recomputed();
  CHECK(qloop::satisfies(oplus, IdentityId::RC2));
  CHECK_FALSE(qloop::satisfies(oplus, IdentityId::RC1));
  CHECK_FALSE(qloop::satisfies(oplus, IdentityId::RC3));
  CHECK_FALSE(qloop::satisfies(oplus, IdentityId::RC4));
  CHECK(oplus.right_identities() == std::vector<int>{3});
  CHECK(oplus.left_identities().empty());
}

TEST_CASE("classification labels") {
  const auto q8 = qloop::classify(qloop::catalog::quaternion8());
  for (const char* l : {"group", "loop", "C-loop", "LC-loop", "RC-loop", "central-square", "quasigroup"})
    CHECK(q8.labels.count(l) == 1);
  CHECK(q8.labels.count("commutative") == 0);
  const auto theta = qloop::classify(qloop::catalog::theta());
  CHECK(theta.labels.count("LC-loop") == 1);
  CHECK(theta.labels.count("RC-loop") == 0);
  CHECK(theta.lc_forms_agree == true);
  const auto otimes = qloop::classify(qloop::catalog::otimes_recomputed());
  CHECK(otimes.labels.count("quasigroup") == 1);
  CHECK(otimes.labels.count("loop") == 0);
  CHECK(otimes.labels.count("left-loop") == 1);
  const auto bad = qloop::classify(qloop::catalog::otimes_printed());
  CHECK(bad.labels.count("quasigroup") == 0);
}

TEST_CASE("identity names") {
  CHECK(qloop::identity_from_string("lc2") == IdentityId::LC2);
  CHECK(qloop::identity_from_string("left-alternative") == IdentityId::LeftAlternative);
  CHECK(qloop::identity_from_string("CENTRAL_SQUARE") == IdentityId::CentralSquare);
  CHECK_FALSE(qloop::identity_from_string("moufang"));
  for (auto id : qloop::all_identities)
    CHECK(qloop::identity_from_string(qloop::to_string(id)) == id);
  CHECK(qloop::family_from_string("rc") == qloop::Family::RC);
  CHECK(qloop::members(qloop::Family::C).size() == 1);
}

TEST_CASE("central square needs a loop") {
  CHECK_THROWS_AS(qloop::is_central_square(qloop::catalog::otimes_recomputed()), qloop::StructureError);
  CHECK(qloop::is_central_square(qloop::catalog::dihedral4()));
  CHECK_FALSE(qloop::is_central_square(qloop::catalog::symmetric3()));
}
