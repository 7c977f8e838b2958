#include "qloop/structure.hpp"

#include "qloop/errors.hpp"
#include "qloop/identities.hpp"

#include <algorithm>
#include <functional>

namespace qloop {

std::string_view to_string(SubloopKind kind) {
  switch (kind) {
  case SubloopKind::Center:
    return "center";
  case SubloopKind::LeftNucleus:
    return "left-nucleus";
  case SubloopKind::MiddleNucleus:
    return "middle-nucleus";
  case SubloopKind::RightNucleus:
    return "right-nucleus";
  case SubloopKind::Nucleus:
    return "nucleus";
  case SubloopKind::Commutant:
    return "commutant";
  }
  return "?";
}

namespace {

bool in_left_nucleus(const Magma& m, Element a) {
  for (Element x = 1; x <= m.order(); ++x)
    for (Element y = 1; y <= m.order(); ++y)
      if (m(a, m(x, y)) != m(m(a, x), y))
        return false;
  return true;
}

bool in_middle_nucleus(const Magma& m, Element a) {
  for (Element x = 1; x <= m.order(); ++x)
    for (Element y = 1; y <= m.order(); ++y)
      if (m(x, m(a, y)) != m(m(x, a), y))
        return false;
  return true;
}

bool in_right_nucleus(const Magma& m, Element a) {
  for (Element x = 1; x <= m.order(); ++x)
    for (Element y = 1; y <= m.order(); ++y)
      if (m(x, m(y, a)) != m(m(x, y), a))
        return false;
  return true;
}

bool in_commutant(const Magma& m, Element a) {
  for (Element x = 1; x <= m.order(); ++x)
    if (m(a, x) != m(x, a))
      return false;
  return true;
}

bool member(const Magma& m, SubloopKind kind, Element a) {
  switch (kind) {
  case SubloopKind::LeftNucleus:
    return in_left_nucleus(m, a);
  case SubloopKind::MiddleNucleus:
    return in_middle_nucleus(m, a);
  case SubloopKind::RightNucleus:
    return in_right_nucleus(m, a);
  case SubloopKind::Nucleus:
    return in_left_nucleus(m, a) && in_middle_nucleus(m, a) && in_right_nucleus(m, a);
  case SubloopKind::Commutant:
    return in_commutant(m, a);
  case SubloopKind::Center:
    return in_commutant(m, a) && in_left_nucleus(m, a) && in_middle_nucleus(m, a) && in_right_nucleus(m, a);
  }
  return false;
}

} // namespace

SubloopSet nucleus(const Magma& m, SubloopKind kind) {
  require_loop(m, std::string(to_string(kind)));
  SubloopSet set;
  set.kind = kind;
  for (Element a = 1; a <= m.order(); ++a)
    if (member(m, kind, a))
      set.elements.push_back(a);
  set.closed = is_closed(m, set.elements);
  return set;
}

SubloopSet center(const Magma& m) { return nucleus(m, SubloopKind::Center); }

bool is_closed(const Magma& m, const std::vector<Element>& subset) {
  std::vector<bool> in(static_cast<std::size_t>(m.order()) + 1, false);
  for (Element a : subset)
    in[static_cast<std::size_t>(a)] = true;
  for (Element a : subset)
    for (Element b : subset)
      if (!in[static_cast<std::size_t>(m(a, b))])
        return false;
  return true;
}

std::vector<Element> generated(const Magma& m, const std::vector<Element>& generators) {
  std::vector<bool> in(static_cast<std::size_t>(m.order()) + 1, false);
  std::vector<Element> elems;
  auto add = [&](Element a) {
    if (!in[static_cast<std::size_t>(a)]) {
      in[static_cast<std::size_t>(a)] = true;
      elems.push_back(a);
    }
  };
  if (m.identity())
    add(*m.identity());
  for (Element g : generators) {
    require_element(m, g);
    add(g);
  }
  // Each new element is multiplied against everything already present.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(m(elems[i], elems[j]));
      add(m(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Magma subtable(const Magma& m, const std::vector<Element>& subset) {
  std::vector<Element> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Element> position(static_cast<std::size_t>(m.order()) + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    position[static_cast<std::size_t>(sorted[i])] = static_cast<Element>(i + 1);
  const int k = static_cast<int>(sorted.size());
  return Magma::from_operation(k, [&](Element x, Element y) {
    const Element p = position[static_cast<std::size_t>(m(sorted[static_cast<std::size_t>(x - 1)],
                                                          sorted[static_cast<std::size_t>(y - 1)]))];
    if (p == 0)
      throw StructureError("subset is not closed under the operation");
    return p;
  });
}

AbelianRank center_rank(const Magma& m) {
  const SubloopSet z = center(m);
  if (!z.closed || !satisfies(subtable(m, z.elements), IdentityId::Associative) ||
      !satisfies(subtable(m, z.elements), IdentityId::Commutative))
    throw Error("internal consistency: center is not an abelian group");

  AbelianRank result;
  if (z.elements.size() == 1)
    return result;

  const std::size_t size = z.elements.size();
  std::vector<Element> chosen;
  std::function<bool(std::size_t, int)> pick = [&](std::size_t start, int remaining) -> bool {
    if (remaining == 0)
      return generated(m, chosen).size() == size;
    for (std::size_t i = start; i < size; ++i) {
      chosen.push_back(z.elements[i]);
      if (pick(i + 1, remaining - 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= static_cast<int>(size); ++k) {
    chosen.clear();
    if (pick(0, k)) {
      result.rank = k;
      result.generators = chosen;
      return result;
    }
  }
  throw Error("internal consistency: center has no generating set");
}

bool is_group(const Magma& m) { return m.is_latin() && satisfies(m, IdentityId::Associative); }

std::vector<std::vector<Element>> subgroups(const Magma& m) {
  if (!is_group(m))
    throw StructureError("subgroup enumeration requires a group table");
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> queue{generated(m, {})};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto h = queue[i];
    for (Element g = 1; g <= m.order(); ++g) {
      if (std::binary_search(h.begin(), h.end(), g))
        continue;
      auto gens = h;
      gens.push_back(g);
      auto k = generated(m, gens);
      if (found.insert(k).second)
        queue.push_back(std::move(k));
    }
  }
  std::vector<std::vector<Element>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

bool is_indecomposable(const Magma& m, int max_order) {
  if (!is_group(m))
    throw StructureError("indecomposability is implemented for group tables only");
  if (m.order() > max_order)
    throw BudgetError("indecomposability search capped at order " + std::to_string(max_order));
  const Element e = *m.identity();
  const auto subs = subgroups(m);
  const auto n = static_cast<std::size_t>(m.order());
  for (const auto& h : subs) {
    if (h.size() == 1 || h.size() == n || n % h.size() != 0)
      continue;
    for (const auto& k : subs) {
      if (k.size() == 1 || k.size() * h.size() != n)
        continue;
      std::vector<Element> meet;
      std::set_intersection(h.begin(), h.end(), k.begin(), k.end(), std::back_inserter(meet));
      if (meet.size() != 1 || meet.front() != e)
        continue;
      bool commute = true;
      for (Element a : h)
        for (Element b : k)
          commute = commute && m(a, b) == m(b, a);
      if (commute)
        return false; // |H||K| = n with trivial meet, so HK covers the group
    }
  }
  return true;
}

std::set<Element> commutators(const Magma& m) {
  if (!is_group(m))
    throw StructureError("commutators are computed for group tables only");
  std::set<Element> out;
  for (Element x = 1; x <= m.order(); ++x)
    for (Element y = 1; y <= m.order(); ++y) {
      const Element xi = inverses(m, x).left;
      const Element yi = inverses(m, y).left;
      out.insert(m(m(m(xi, yi), x), y));
    }
  return out;
}

} // namespace qloop
