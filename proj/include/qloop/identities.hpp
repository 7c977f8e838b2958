#pragma once

#include "qloop/magma.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qloop {

/// The checkable laws. Order here is the catalog order used by reports.
enum class IdentityId {
  C,   // (yx·x)z = y(x·xz)
  LC1, // xx·yz = (x·xy)z
  LC2, // (x·xy)z = x(x·yz)
  LC3, // (xx·y)z = x(x·yz)
  LC4, // (y·xx)z = y(x·xz)
  RC1, // yz·xx = y(zx·x)
  RC2, // (yz·x)x = y(zx·x)
  RC3, // (yz·x)x = y(z·xx)
  RC4, // (yx·x)z = y(xx·z)
  Commutative,
  Associative,
  LeftAlternative,  // x·xy = xx·y
  RightAlternative, // yx·x = y·xx
  Flexible,         // xy·x = x·yx
  CentralSquare,    // every x·x lies in the center
};

inline constexpr std::array<IdentityId, 15> all_identities = {
    IdentityId::C,           IdentityId::LC1,         IdentityId::LC2,
    IdentityId::LC3,         IdentityId::LC4,         IdentityId::RC1,
    IdentityId::RC2,         IdentityId::RC3,         IdentityId::RC4,
    IdentityId::Commutative, IdentityId::Associative, IdentityId::LeftAlternative,
    IdentityId::RightAlternative, IdentityId::Flexible, IdentityId::CentralSquare,
};

std::string_view to_string(IdentityId id);
/// Case-insensitive; accepts "lc2", "LEFT_ALTERNATIVE", "left-alternative".
std::optional<IdentityId> identity_from_string(std::string_view name);
/// Number of universally quantified variables (2 or 3).
int arity(IdentityId id);
std::string_view equation(IdentityId id);

struct Witness {
  Element x = 0;
  Element y = 0;
  Element z = 0; // 0 for two-variable laws
  Element lhs = 0;
  Element rhs = 0;
};

struct IdentityReport {
  IdentityId identity;
  bool holds = true;
  std::optional<Witness> witness; // present exactly when !holds
};

/// Exhaustive check; the witness is the lexicographically first failing
/// (x, y, z).
IdentityReport check_identity(const Magma& m, IdentityId id);
bool satisfies(const Magma& m, IdentityId id);

enum class Family { LC, RC, C, All };
std::optional<Family> family_from_string(std::string_view name);
std::vector<IdentityId> members(Family family);
std::vector<IdentityReport> check_family(const Magma& m, Family family);

/// Structural classification of a table.
struct Classification {
  std::set<std::string> labels;
  std::vector<Element> left_identities;
  std::vector<Element> right_identities;
  std::optional<Element> identity;
  /// For loops: whether (LC and RC) agrees with C on this table.
  std::optional<bool> lc_and_rc_iff_c;
  /// For loops: whether LC1..LC4 agree, and RC1..RC4 agree.
  std::optional<bool> lc_forms_agree;
  std::optional<bool> rc_forms_agree;
};

Classification classify(const Magma& m);

/// On loops, "LC-loop" means LC1..LC4 all hold (they coincide on loops).
bool is_lc_loop(const Magma& m);
bool is_rc_loop(const Magma& m);
bool is_c_loop(const Magma& m);
bool is_alternative(const Magma& m);

/// True when every square lies in the center. Throws StructureError for
/// non-loops.
bool is_central_square(const Magma& m);

} // namespace qloop
