#pragma once

#include "qloop/magma.hpp"
#include "qloop/transforms.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qloop::catalog {

/// The printed order-6 RC-loop table.
const Magma& theta_star();
/// Its transpose, the LC-loop it was built from.
const Magma& theta();
/// The printed LC-quasigroup isotope of theta. Not latin: row 4 repeats 4.
const Magma& otimes_printed();
/// theta under construction1_triple.
const Magma& otimes_recomputed();
/// The printed RC-quasigroup isotope of theta_star.
const Magma& oplus_printed();
/// theta_star under construction2_triple.
const Magma& oplus_recomputed();

/// A = (1 5 2 4 3 6), B = C = (1 3 4 6 5 2).
const IsotopismTriple& construction1_triple();
/// A = C = (1 5 2 4 3 6), B = (1 3 4 6 5 2).
const IsotopismTriple& construction2_triple();

/// Z_n with label k+1 for the residue k.
Magma cyclic(int n);
/// Z_2 x Z_2.
Magma klein();
/// Permutations of three points in lexicographic order of their image lists.
Magma symmetric3();
/// Symmetries of the square; r^i s^j has label 1 + i + 4j.
Magma dihedral4();
/// Quaternion units 1, -1, i, -i, j, -j, k, -k as labels 1..8.
Magma quaternion8();

/// Names accepted by lookup, in listing order.
std::vector<std::string> names();
std::optional<Magma> lookup(std::string_view name);

} // namespace qloop::catalog

namespace qloop {

enum class LoopFilter { None, Commutative, LC, RC, C };

/// Every loop of order n whose identity is the label 1 (reduced latin
/// squares), in lexicographic order of the row-major cells. Throws
/// BudgetError for n > 6.
void for_each_loop(int n, LoopFilter filter, const std::function<void(const Magma&)>& visit);
std::vector<Magma> enumerate_loops(int n, LoopFilter filter = LoopFilter::None);

} // namespace qloop
