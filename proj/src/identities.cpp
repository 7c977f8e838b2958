#include "qloop/identities.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qloop {

namespace {

struct Entry {
  IdentityId id;
  std::string_view name;
  std::string_view equation;
  int arity;
};

constexpr std::array<Entry, 15> catalog = {{
    {IdentityId::C, "C", "(yx.x)z = y(x.xz)", 3},
    {IdentityId::LC1, "LC1", "xx.yz = (x.xy)z", 3},
    {IdentityId::LC2, "LC2", "(x.xy)z = x(x.yz)", 3},
    {IdentityId::LC3, "LC3", "(xx.y)z = x(x.yz)", 3},
    {IdentityId::LC4, "LC4", "(y.xx)z = y(x.xz)", 3},
    {IdentityId::RC1, "RC1", "yz.xx = y(zx.x)", 3},
    {IdentityId::RC2, "RC2", "(yz.x)x = y(zx.x)", 3},
    {IdentityId::RC3, "RC3", "(yz.x)x = y(z.xx)", 3},
    {IdentityId::RC4, "RC4", "(yx.x)z = y(xx.z)", 3},
    {IdentityId::Commutative, "COMMUTATIVE", "xy = yx", 2},
    {IdentityId::Associative, "ASSOCIATIVE", "(xy)z = x(yz)", 3},
    {IdentityId::LeftAlternative, "LEFT_ALTERNATIVE", "x.xy = xx.y", 2},
    {IdentityId::RightAlternative, "RIGHT_ALTERNATIVE", "yx.x = y.xx", 2},
    {IdentityId::Flexible, "FLEXIBLE", "xy.x = x.yx", 2},
    {IdentityId::CentralSquare, "CENTRAL_SQUARE", "xx in Z", 2},
}};

const Entry& entry(IdentityId id) {
  return catalog[static_cast<std::size_t>(id)];
}

/// Both sides of a law at one assignment.
std::pair<Element, Element> sides(const Magma& m, IdentityId id, Element x, Element y, Element z) {
  switch (id) {
  case IdentityId::C:
    return {m(m(m(y, x), x), z), m(y, m(x, m(x, z)))};
  case IdentityId::LC1:
    return {m(m(x, x), m(y, z)), m(m(x, m(x, y)), z)};
  case IdentityId::LC2:
    return {m(m(x, m(x, y)), z), m(x, m(x, m(y, z)))};
  case IdentityId::LC3:
    return {m(m(m(x, x), y), z), m(x, m(x, m(y, z)))};
  case IdentityId::LC4:
    return {m(m(y, m(x, x)), z), m(y, m(x, m(x, z)))};
  case IdentityId::RC1:
    return {m(m(y, z), m(x, x)), m(y, m(m(z, x), x))};
  case IdentityId::RC2:
    return {m(m(m(y, z), x), x), m(y, m(m(z, x), x))};
  case IdentityId::RC3:
    return {m(m(m(y, z), x), x), m(y, m(z, m(x, x)))};
  case IdentityId::RC4:
    return {m(m(m(y, x), x), z), m(y, m(m(x, x), z))};
  case IdentityId::Commutative:
    return {m(x, y), m(y, x)};
  case IdentityId::Associative:
    return {m(m(x, y), z), m(x, m(y, z))};
  case IdentityId::LeftAlternative:
    return {m(x, m(x, y)), m(m(x, x), y)};
  case IdentityId::RightAlternative:
    return {m(m(y, x), x), m(y, m(x, x))};
  case IdentityId::Flexible:
    return {m(m(x, y), x), m(x, m(y, x))};
  case IdentityId::CentralSquare:
    break;
  }
  return {0, 0};
}

/// x·x central fails at (x, y, z): the first of the commuting and the three
/// associating conditions for a = x·x that breaks.
std::optional<Witness> central_square_witness(const Magma& m) {
  const int n = m.order();
  for (Element x = 1; x <= n; ++x) {
    const Element a = m(x, x);
    for (Element y = 1; y <= n; ++y) {
      if (m(a, y) != m(y, a))
        return Witness{x, y, 0, m(a, y), m(y, a)};
      for (Element z = 1; z <= n; ++z) {
        if (m(a, m(y, z)) != m(m(a, y), z))
          return Witness{x, y, z, m(a, m(y, z)), m(m(a, y), z)};
        if (m(y, m(a, z)) != m(m(y, a), z))
          return Witness{x, y, z, m(y, m(a, z)), m(m(y, a), z)};
        if (m(y, m(z, a)) != m(m(y, z), a))
          return Witness{x, y, z, m(y, m(z, a)), m(m(y, z), a)};
      }
    }
  }
  return std::nullopt;
}

std::string normalise(std::string_view s) {
  std::string out;
  for (char c : s)
    out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

} // namespace

std::string_view to_string(IdentityId id) { return entry(id).name; }
std::string_view equation(IdentityId id) { return entry(id).equation; }
int arity(IdentityId id) { return entry(id).arity; }

std::optional<IdentityId> identity_from_string(std::string_view name) {
  const std::string key = normalise(name);
  for (const auto& e : catalog)
    if (e.name == key)
      return e.id;
  return std::nullopt;
}

IdentityReport check_identity(const Magma& m, IdentityId id) {
  IdentityReport report{id, true, std::nullopt};
  if (id == IdentityId::CentralSquare) {
    report.witness = central_square_witness(m);
    report.holds = !report.witness;
    return report;
  }
  const int n = m.order();
  const int zmax = arity(id) == 3 ? n : 1;
  for (Element x = 1; x <= n; ++x)
    for (Element y = 1; y <= n; ++y)
      for (Element z = 1; z <= zmax; ++z) {
        auto [lhs, rhs] = sides(m, id, x, y, z);
        if (lhs != rhs) {
          report.holds = false;
          report.witness = Witness{x, y, arity(id) == 3 ? z : 0, lhs, rhs};
          return report;
        }
      }
  return report;
}

bool satisfies(const Magma& m, IdentityId id) { return check_identity(m, id).holds; }

std::optional<Family> family_from_string(std::string_view name) {
  const std::string key = normalise(name);
  if (key == "LC")
    return Family::LC;
  if (key == "RC")
    return Family::RC;
  if (key == "C")
    return Family::C;
  if (key == "ALL")
    return Family::All;
  return std::nullopt;
}

std::vector<IdentityId> members(Family family) {
  switch (family) {
  case Family::LC:
    return {IdentityId::LC1, IdentityId::LC2, IdentityId::LC3, IdentityId::LC4};
  case Family::RC:
    return {IdentityId::RC1, IdentityId::RC2, IdentityId::RC3, IdentityId::RC4};
  case Family::C:
    return {IdentityId::C};
  case Family::All:
    break;
  }
  return {all_identities.begin(), all_identities.end()};
}

std::vector<IdentityReport> check_family(const Magma& m, Family family) {
  std::vector<IdentityReport> out;
  for (IdentityId id : members(family))
    out.push_back(check_identity(m, id));
  return out;
}

namespace {

bool all_hold(const Magma& m, Family family) {
  for (IdentityId id : members(family))
    if (!satisfies(m, id))
      return false;
  return true;
}

bool any_hold(const Magma& m, Family family) {
  for (IdentityId id : members(family))
    if (satisfies(m, id))
      return true;
  return false;
}

} // namespace

bool is_lc_loop(const Magma& m) { return m.is_loop() && all_hold(m, Family::LC); }
bool is_rc_loop(const Magma& m) { return m.is_loop() && all_hold(m, Family::RC); }
bool is_c_loop(const Magma& m) { return m.is_loop() && satisfies(m, IdentityId::C); }

bool is_alternative(const Magma& m) {
  return satisfies(m, IdentityId::LeftAlternative) && satisfies(m, IdentityId::RightAlternative);
}

bool is_central_square(const Magma& m) {
  require_loop(m, "central-square test");
  return satisfies(m, IdentityId::CentralSquare);
}

Classification classify(const Magma& m) {
  Classification c;
  c.left_identities = m.left_identities();
  c.right_identities = m.right_identities();
  c.identity = m.identity();

  c.labels.insert("magma");
  if (m.is_commutative())
    c.labels.insert("commutative");
  if (is_alternative(m))
    c.labels.insert("alternative");
  if (!m.is_latin())
    return c;

  c.labels.insert("quasigroup");
  if (!m.left_identities().empty())
    c.labels.insert("left-loop");
  if (!m.right_identities().empty())
    c.labels.insert("right-loop");
  if (!m.is_loop())
    return c;

  c.labels.insert("loop");
  const bool lc = all_hold(m, Family::LC);
  const bool rc = all_hold(m, Family::RC);
  const bool central = satisfies(m, IdentityId::C);
  c.lc_forms_agree = lc || !any_hold(m, Family::LC);
  c.rc_forms_agree = rc || !any_hold(m, Family::RC);
  c.lc_and_rc_iff_c = (lc && rc) == central;
  if (lc)
    c.labels.insert("LC-loop");
  if (rc)
    c.labels.insert("RC-loop");
  if (central)
    c.labels.insert("C-loop");
  if (satisfies(m, IdentityId::Associative))
    c.labels.insert("group");
  if (satisfies(m, IdentityId::CentralSquare))
    c.labels.insert("central-square");
  return c;
}

} // namespace qloop
