#pragma once

#include "qloop/magma.hpp"
#include "qloop/transforms.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qloop {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

enum class Verdict { Related, Unrelated, Unknown };

std::string_view to_string(Verdict v);

/// Outcome of an isomorphism or isotopism search. A witness is present
/// exactly when the verdict is Related, and it has been re-checked against
/// both tables before being returned. An exhausted budget yields Unknown,
/// never Unrelated.
struct MorphismResult {
  Verdict verdict = Verdict::Unrelated;
  std::optional<Permutation> isomorphism;
  std::optional<IsotopismTriple> isotopism;
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;

  bool related() const noexcept { return verdict == Verdict::Related; }
};

/// Backtracking over bijections α with (x·y)α = xα ∘ yα. Candidate images are
/// filtered by per-element invariants and each assignment is closed under
/// products of already assigned elements. Images are tried in ascending
/// order, so the witness is deterministic.
MorphismResult are_isomorphic(const Magma& m1, const Magma& m2, std::uint64_t budget = default_node_budget);

enum class IsotopyStrategy {
  /// Choose the image of element 1 under A and then B element by element;
  /// C and the rest of A are forced and checked as soon as they are known.
  TripleSearch,
  /// Reduce both tables to loop isotopes and test the n² principal isotopes
  /// of the first against the second for isomorphism.
  PrincipalIsotopes,
};

MorphismResult are_isotopic(const Magma& m1, const Magma& m2, std::uint64_t budget = default_node_budget,
                            IsotopyStrategy strategy = IsotopyStrategy::TripleSearch);

enum class BridgeForm {
  Gamma, // (B⁻¹D, A⁻¹E, C⁻¹F), used when ⊗ is commutative
  Mu,    // (A⁻¹E, B⁻¹D, C⁻¹F), used when ⊕ is commutative
};

struct BridgeIsotopism {
  IsotopismTriple triple;
  BridgeForm form;
};

/// For a loop θ with ⊗ = θ(A,B,C) and ⊕ = θ*(D,E,F), builds the isotopism
/// carrying ⊗ onto ⊕ when one of them is commutative, and checks it cell by
/// cell before returning. Throws HypothesisError when neither is commutative.
BridgeIsotopism parastrophe_isotopy_bridge(const Magma& theta, const IsotopismTriple& theta_iso,
                                           const IsotopismTriple& tstar_iso);

} // namespace qloop
