#pragma once

#include "qloop/magma.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qloop::harness {

enum class CheckStatus { Verified, Refuted, HypothesisNeverSatisfied, Deviation };

std::string_view to_string(CheckStatus s);

/// One machine-checked claim over a universe of tables.
///
/// `instances_checked` counts instances whose premises held and were
/// checked; `vacuous_instances` counts instances skipped because a premise
/// failed. A Refuted or Deviation status carries a witness that
/// `replay_witness` reproduces from the serialized form alone.
struct TheoremCheck {
  std::string id;
  std::string universe;
  std::uint64_t instances_checked = 0;
  std::uint64_t vacuous_instances = 0;
  CheckStatus status = CheckStatus::Verified;
  std::optional<nlohmann::json> witness;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 0;
  /// Largest order of exhaustively enumerated loops (at most 6).
  int max_order = 5;
  /// Satisfying instances required per order by the isotope bridge check.
  int bridge_instances = 25;
};

// Each function below checks one group of related claims. IDs are stable.

/// Commutative loops: LC, RC and C coincide.
TheoremCheck verify_commutative_equivalences(const Options& opt);

/// On loops the four LC forms agree, the four RC forms agree, and C is LC and
/// RC together; on quasigroups the LC forms come apart.
std::vector<TheoremCheck> verify_loop_identity_equivalences(const Options& opt);

/// Derivatives, a⁻¹,e- and e,a⁻¹-isotopes, and generalized distributive laws.
std::vector<TheoremCheck> verify_derivative_theorems(const Options& opt);

/// The transpose swaps LC and RC and preserves C.
std::vector<TheoremCheck> verify_parastrophe_lemmas(const Options& opt);

/// Reproduction and identity profile of the two order-6 quasigroup isotopes.
std::vector<TheoremCheck> verify_constructions();

/// Isotopes of a loop and of its parastrophe are isotopic when one is
/// commutative.
std::vector<TheoremCheck> verify_isotopy_bridge(const Options& opt);

/// Transfer of LC, RC and C along (A,B,B) and (A,B,A) loop isotopisms.
std::vector<TheoremCheck> verify_isotopic_invariance(const Options& opt);

/// Centers, ranks, indecomposability, and isotopy versus isomorphism of
/// small groups, including the dihedral and quaternion groups of order 8.
std::vector<TheoremCheck> verify_group_structure(const Options& opt);

struct Report {
  Options options;
  std::vector<TheoremCheck> checks;

  bool all_passed() const; // nothing Refuted
};

Report run_all(const Options& opt);

nlohmann::json to_json(const TheoremCheck& check, std::uint64_t seed);
nlohmann::json to_json(const Report& report);

/// Re-derives a serialized witness from its stored data. Returns true when
/// the refutation or deviation it records still reproduces.
bool replay_witness(const nlohmann::json& witness);

/// Serialization helpers shared with the C API.
nlohmann::json table_json(const Magma& m);
Magma table_from_json(const nlohmann::json& j);

} // namespace qloop::harness
