#include "qloop/catalog.hpp"

#include "qloop/errors.hpp"
#include "qloop/identities.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace qloop::catalog {

namespace {

const Permutation& cycle_152436() {
  static const Permutation p = Permutation::from_cycles(6, {{1, 5, 2, 4, 3, 6}});
  return p;
}

const Permutation& cycle_134652() {
  static const Permutation p = Permutation::from_cycles(6, {{1, 3, 4, 6, 5, 2}});
  return p;
}

} // namespace

const Magma& theta_star() {
  static const Magma m = Magma::from_rows({
      {1, 2, 3, 4, 5, 6},
      {2, 1, 5, 3, 6, 4},
      {3, 6, 1, 2, 4, 5},
      {4, 5, 6, 1, 3, 2},
      {5, 4, 2, 6, 1, 3},
      {6, 3, 4, 5, 2, 1},
  });
  return m;
}

const Magma& theta() {
  static const Magma m = transpose(theta_star());
  return m;
}

const Magma& otimes_printed() {
  static const Magma m = Magma::from_rows({
      {6, 4, 5, 2, 3, 1},
      {5, 3, 2, 6, 1, 4},
      {4, 5, 6, 1, 2, 3},
      {3, 6, 1, 5, 4, 4},
      {1, 2, 3, 4, 5, 6},
      {2, 1, 4, 3, 6, 5},
  });
  return m;
}

const Magma& otimes_recomputed() {
  static const Magma m = apply_isotopism(theta(), construction1_triple());
  return m;
}

const Magma& oplus_printed() {
  static const Magma m = Magma::from_rows({
      {6, 4, 1, 3, 5, 2},
      {3, 5, 2, 4, 6, 1},
      {2, 6, 3, 1, 4, 5},
      {5, 1, 4, 2, 3, 6},
      {4, 2, 5, 6, 1, 3},
      {1, 3, 6, 5, 2, 4},
  });
  return m;
}

const Magma& oplus_recomputed() {
  static const Magma m = apply_isotopism(theta_star(), construction2_triple());
  return m;
}

const IsotopismTriple& construction1_triple() {
  static const IsotopismTriple t{cycle_152436(), cycle_134652(), cycle_134652()};
  return t;
}

const IsotopismTriple& construction2_triple() {
  static const IsotopismTriple t{cycle_152436(), cycle_134652(), cycle_152436()};
  return t;
}

Magma cyclic(int n) {
  return Magma::from_operation(n, [n](Element x, Element y) { return (x - 1 + y - 1) % n + 1; });
}

Magma klein() {
  return Magma::from_operation(4, [](Element x, Element y) { return ((x - 1) ^ (y - 1)) + 1; });
}

Magma symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto label = [&](const std::array<int, 3>& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin() + 1);
  };
  // x·y applies x first, then y.
  return Magma::from_operation(6, [&](Element x, Element y) {
    const auto& px = perms[static_cast<std::size_t>(x - 1)];
    const auto& py = perms[static_cast<std::size_t>(y - 1)];
    std::array<int, 3> r{};
    for (std::size_t i = 0; i < 3; ++i)
      r[i] = py[static_cast<std::size_t>(px[i])];
    return label(r);
  });
}

Magma dihedral4() {
  // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j + l)
  return Magma::from_operation(8, [](Element x, Element y) {
    const int i = (x - 1) % 4, j = (x - 1) / 4;
    const int k = (y - 1) % 4, l = (y - 1) / 4;
    const int rot = ((i + (j ? -k : k)) % 4 + 4) % 4;
    return 1 + rot + 4 * ((j + l) % 2);
  });
}

Magma quaternion8() {
  // basis 0..3 = 1, i, j, k; products as (sign, basis)
  static constexpr int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto decode = [](Element x) { return std::pair<int, int>{(x - 1) / 2, (x - 1) % 2 ? -1 : 1}; };
  return Magma::from_operation(8, [&](Element x, Element y) {
    auto [bx, sx] = decode(x);
    auto [by, sy] = decode(y);
    const int s = sx * sy * sign[bx][by];
    return 1 + 2 * basis[bx][by] + (s < 0 ? 1 : 0);
  });
}

std::vector<std::string> names() {
  std::vector<std::string> out = {"theta_star",        "theta",        "otimes_printed",
                                  "otimes_recomputed", "oplus_printed", "oplus_recomputed"};
  for (int n = 1; n <= 8; ++n)
    out.push_back("Z" + std::to_string(n));
  out.insert(out.end(), {"klein", "S3", "D4", "Q8"});
  return out;
}

std::optional<Magma> lookup(std::string_view name) {
  std::string key;
  for (char c : name)
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "theta_star")
    return theta_star();
  if (key == "theta")
    return theta();
  if (key == "otimes_printed")
    return otimes_printed();
  if (key == "otimes_recomputed")
    return otimes_recomputed();
  if (key == "oplus_printed")
    return oplus_printed();
  if (key == "oplus_recomputed")
    return oplus_recomputed();
  if (key == "klein" || key == "v4")
    return klein();
  if (key == "s3")
    return symmetric3();
  if (key == "d4")
    return dihedral4();
  if (key == "q8")
    return quaternion8();
  if (key.size() == 2 && key[0] == 'z' && key[1] >= '1' && key[1] <= '8')
    return cyclic(key[1] - '0');
  return std::nullopt;
}

} // namespace qloop::catalog

namespace qloop {

namespace {

bool accept(const Magma& m, LoopFilter filter) {
  switch (filter) {
  case LoopFilter::None:
    return true;
  case LoopFilter::Commutative:
    return m.is_commutative();
  case LoopFilter::LC:
    return is_lc_loop(m);
  case LoopFilter::RC:
    return is_rc_loop(m);
  case LoopFilter::C:
    return is_c_loop(m);
  }
  return false;
}

} // namespace

void for_each_loop(int n, LoopFilter filter, const std::function<void(const Magma&)>& visit) {
  if (n < 1)
    throw DomainError("loop order must be positive");
  if (n > 6)
    throw BudgetError("loop enumeration is limited to order 6");

  const auto un = static_cast<std::size_t>(n);
  std::vector<Element> cells(un * un, 0);
  std::vector<std::uint32_t> row_used(un + 1, 0), col_used(un + 1, 0);
  auto mark = [&](Element x, Element y, Element v, bool on) {
    const std::uint32_t bit = 1u << v;
    cells[static_cast<std::size_t>(x - 1) * un + static_cast<std::size_t>(y - 1)] = on ? v : 0;
    if (on) {
      row_used[static_cast<std::size_t>(x)] |= bit;
      col_used[static_cast<std::size_t>(y)] |= bit;
    } else {
      row_used[static_cast<std::size_t>(x)] &= ~bit;
      col_used[static_cast<std::size_t>(y)] &= ~bit;
    }
  };
  for (Element k = 1; k <= n; ++k) {
    mark(1, k, k, true);
    if (k > 1)
      mark(k, 1, k, true);
  }

  const bool symmetric = filter == LoopFilter::Commutative;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == un * un) {
      Magma m(n, cells);
      if (accept(m, filter))
        visit(m);
      return;
    }
    const Element x = static_cast<Element>(cell / un) + 1;
    const Element y = static_cast<Element>(cell % un) + 1;
    if (x == 1 || y == 1) {
      fill(cell + 1);
      return;
    }
    if (symmetric && y < x) {
      const Element v = cells[static_cast<std::size_t>(y - 1) * un + static_cast<std::size_t>(x - 1)];
      const std::uint32_t bit = 1u << v;
      if ((row_used[static_cast<std::size_t>(x)] & bit) || (col_used[static_cast<std::size_t>(y)] & bit))
        return;
      mark(x, y, v, true);
      fill(cell + 1);
      mark(x, y, v, false);
      return;
    }
    for (Element v = 1; v <= n; ++v) {
      const std::uint32_t bit = 1u << v;
      if ((row_used[static_cast<std::size_t>(x)] & bit) || (col_used[static_cast<std::size_t>(y)] & bit))
        continue;
      mark(x, y, v, true);
      fill(cell + 1);
      mark(x, y, v, false);
    }
  };
  fill(0);
}

std::vector<Magma> enumerate_loops(int n, LoopFilter filter) {
  std::vector<Magma> out;
  for_each_loop(n, filter, [&](const Magma& m) { out.push_back(m); });
  return out;
}

} // namespace qloop
