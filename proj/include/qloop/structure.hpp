#pragma once

#include "qloop/magma.hpp"

#include <set>
#include <string_view>
#include <vector>

namespace qloop {

enum class SubloopKind { Center, LeftNucleus, MiddleNucleus, RightNucleus, Nucleus, Commutant };

std::string_view to_string(SubloopKind kind);

/// A distinguished subset of a loop. `closed` records whether it is closed
/// under the loop operation.
struct SubloopSet {
  std::vector<Element> elements; // ascending
  bool closed = false;
  SubloopKind kind = SubloopKind::Center;
};

/// N_λ = {a : a(xy) = (ax)y}, N_μ = {a : x(ay) = (xa)y}, N_ρ = {a : x(ya) = (xy)a},
/// N = N_λ ∩ N_μ ∩ N_ρ, C = {a : ax = xa}, Z = N ∩ C. Each requires a loop.
SubloopSet nucleus(const Magma& m, SubloopKind kind);
SubloopSet center(const Magma& m);

bool is_closed(const Magma& m, const std::vector<Element>& subset);

/// Smallest subset containing `generators` and closed under the operation.
/// For a finite loop this is the subloop they generate (with the identity).
std::vector<Element> generated(const Magma& m, const std::vector<Element>& generators);

/// Restriction of m to a closed subset, relabelled 1..k in ascending order of
/// the original labels.
Magma subtable(const Magma& m, const std::vector<Element>& subset);

struct AbelianRank {
  int rank = 0;
  std::vector<Element> generators; // a minimum generating set of the center
};

/// Fewest generators of Z(m), found by trying subsets in increasing size.
AbelianRank center_rank(const Magma& m);

bool is_group(const Magma& m);

/// All subgroups of a group table, each as an ascending element list.
std::vector<std::vector<Element>> subgroups(const Magma& m);

/// True when the group is not an internal direct product of two proper
/// nontrivial subgroups. Throws StructureError for non-groups and
/// BudgetError above `max_order`.
bool is_indecomposable(const Magma& m, int max_order = 16);

/// The set {[x, y] = x⁻¹y⁻¹xy} of a group table.
std::set<Element> commutators(const Magma& m);

} // namespace qloop
