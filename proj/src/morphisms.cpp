#include "qloop/morphisms.hpp"

#include "qloop/errors.hpp"

#include <algorithm>
#include <vector>

namespace qloop {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Related:
    return "related";
  case Verdict::Unrelated:
    return "unrelated";
  case Verdict::Unknown:
    return "unknown";
  }
  return "?";
}

namespace {

using Signature = std::vector<int>;

/// Smallest k with x^k = e for left-normed powers x^(k+1) = x·x^k. The
/// powers run along the L_x-orbit of x, which passes through e = x\x, so
/// the loop always terminates on a loop.
int left_power_order(const Magma& m, Element x) {
  const Element e = *m.identity();
  Element p = x;
  for (int k = 1; k <= m.order(); ++k) {
    if (p == e)
      return k;
    p = m(x, p);
  }
  return 0;
}

/// Isomorphism-invariant data per element.
std::vector<Signature> signatures(const Magma& m) {
  const int n = m.order();
  std::vector<Signature> sig(static_cast<std::size_t>(n) + 1);
  std::vector<int> roots(static_cast<std::size_t>(n) + 1, 0);
  for (Element y = 1; y <= n; ++y)
    ++roots[static_cast<std::size_t>(m(y, y))];
  for (Element x = 1; x <= n; ++x) {
    int commuting = 0, fixes_left = 0, fixes_right = 0, left_alt = 0;
    for (Element y = 1; y <= n; ++y) {
      commuting += m(x, y) == m(y, x);
      fixes_left += m(x, y) == y;
      fixes_right += m(y, x) == y;
      left_alt += m(x, m(x, y)) == m(m(x, x), y);
    }
    Signature& s = sig[static_cast<std::size_t>(x)];
    s = {m(x, x) == x, roots[static_cast<std::size_t>(x)], commuting, fixes_left, fixes_right, left_alt};
    if (m.is_loop()) {
      s.push_back(x == *m.identity());
      s.push_back(left_power_order(m, x));
    }
  }
  return sig;
}

bool same_profile(std::vector<Signature> a, std::vector<Signature> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class IsomorphismSearch {
public:
  IsomorphismSearch(const Magma& m1, const Magma& m2, std::uint64_t budget)
      : m1_(m1), m2_(m2), n_(m1.order()), budget_(budget), sig1_(signatures(m1)), sig2_(signatures(m2)),
        image_(static_cast<std::size_t>(n_) + 1, 0), preimage_(static_cast<std::size_t>(n_) + 1, 0) {}

  MorphismResult run() {
    MorphismResult result;
    if (same_profile(sig1_, sig2_) && search()) {
      std::vector<Element> images(image_.begin() + 1, image_.end());
      auto p = Permutation::from_images(std::move(images));
      if (!is_isomorphism(m1_, m2_, p))
        throw Error("internal consistency: isomorphism witness failed verification");
      result.verdict = Verdict::Related;
      result.isomorphism = std::move(p);
    } else {
      result.verdict = exhausted_ ? Verdict::Unknown : Verdict::Unrelated;
    }
    result.nodes_explored = nodes_;
    result.budget_exhausted = exhausted_;
    return result;
  }

private:
  bool assign(Element x, Element u) {
    const auto ux = static_cast<std::size_t>(x);
    const auto uu = static_cast<std::size_t>(u);
    if (image_[ux] != 0)
      return image_[ux] == u;
    if (preimage_[uu] != 0 || sig1_[ux] != sig2_[uu])
      return false;
    image_[ux] = u;
    preimage_[uu] = x;
    trail_.push_back(x);
    return true;
  }

  /// Closes the partial map under products, starting from trail_[from].
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const Element x = trail_[i];
      const Element u = image_[static_cast<std::size_t>(x)];
      for (std::size_t j = 0; j <= i; ++j) {
        const Element y = trail_[j];
        const Element v = image_[static_cast<std::size_t>(y)];
        if (!assign(m1_(x, y), m2_(u, v)) || !assign(m1_(y, x), m2_(v, u)))
          return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      preimage_[static_cast<std::size_t>(image_[static_cast<std::size_t>(x)])] = 0;
      image_[static_cast<std::size_t>(x)] = 0;
    }
  }

  bool search() {
    Element x = 1;
    while (x <= n_ && image_[static_cast<std::size_t>(x)] != 0)
      ++x;
    if (x > n_)
      return true;
    for (Element u = 1; u <= n_; ++u) {
      if (preimage_[static_cast<std::size_t>(u)] != 0 || sig1_[static_cast<std::size_t>(x)] != sig2_[static_cast<std::size_t>(u)])
        continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      if (assign(x, u) && propagate(mark) && search())
        return true;
      undo(mark);
      if (exhausted_)
        return false;
    }
    return false;
  }

  const Magma& m1_;
  const Magma& m2_;
  int n_;
  std::uint64_t budget_;
  std::vector<Signature> sig1_, sig2_;
  std::vector<Element> image_, preimage_;
  std::vector<Element> trail_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

/// Partial bijection with undo support, one per component of the triple.
struct PartialMap {
  std::vector<Element> image, preimage;
  explicit PartialMap(int n)
      : image(static_cast<std::size_t>(n) + 1, 0), preimage(static_cast<std::size_t>(n) + 1, 0) {}
  Element operator[](Element x) const { return image[static_cast<std::size_t>(x)]; }
};

class TripleSearch {
public:
  TripleSearch(const Magma& m1, const Magma& m2, std::uint64_t budget)
      : m1_(m1), m2_(m2), n_(m1.order()), budget_(budget), maps_{PartialMap(n_), PartialMap(n_), PartialMap(n_)} {}

  MorphismResult run() {
    MorphismResult result;
    for (Element a = 1; a <= n_ && !found_ && !exhausted_; ++a) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        break;
      }
      const std::size_t mark = trail_.size();
      if (set(0, 1, a) && propagate() && search())
        found_ = true;
      else
        undo(mark);
    }
    if (found_) {
      IsotopismTriple t{to_perm(0), to_perm(1), to_perm(2)};
      if (!is_isotopism(m1_, m2_, t))
        throw Error("internal consistency: isotopism witness failed verification");
      result.verdict = Verdict::Related;
      result.isotopism = std::move(t);
    } else {
      result.verdict = exhausted_ ? Verdict::Unknown : Verdict::Unrelated;
    }
    result.nodes_explored = nodes_;
    result.budget_exhausted = exhausted_;
    return result;
  }

private:
  Permutation to_perm(int which) const {
    const auto& img = maps_[which].image;
    return Permutation::from_images(std::vector<Element>(img.begin() + 1, img.end()));
  }

  bool set(int which, Element x, Element v) {
    PartialMap& map = maps_[which];
    const auto ux = static_cast<std::size_t>(x);
    if (map.image[ux] != 0)
      return map.image[ux] == v;
    if (map.preimage[static_cast<std::size_t>(v)] != 0)
      return false;
    map.image[ux] = v;
    map.preimage[static_cast<std::size_t>(v)] = x;
    trail_.push_back({which, x});
    changed_ = true;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [which, x] = trail_.back();
      trail_.pop_back();
      PartialMap& map = maps_[which];
      map.preimage[static_cast<std::size_t>(map.image[static_cast<std::size_t>(x)])] = 0;
      map.image[static_cast<std::size_t>(x)] = 0;
    }
  }

  /// Fixpoint of: C(x·y) = xA ∘ yB; xA = C(x·y) / yB; yB = xA \ C(x·y).
  bool propagate() {
    const PartialMap& A = maps_[0];
    const PartialMap& B = maps_[1];
    const PartialMap& C = maps_[2];
    do {
      changed_ = false;
      for (Element x = 1; x <= n_; ++x)
        for (Element y = 1; y <= n_; ++y) {
          const Element xa = A[x], yb = B[y], z = m1_(x, y), zc = C[z];
          if (xa && yb) {
            if (!set(2, z, m2_(xa, yb)))
              return false;
          } else if (xa && zc) {
            if (!set(1, y, m2_.left_quotient(xa, zc)))
              return false;
          } else if (yb && zc) {
            if (!set(0, x, m2_.right_quotient(zc, yb)))
              return false;
          }
        }
    } while (changed_);
    return true;
  }

  bool search() {
    Element y = 1;
    while (y <= n_ && maps_[1][y] != 0)
      ++y;
    if (y > n_)
      return true; // A(1) and all of B determine C and then A
    for (Element v = 1; v <= n_; ++v) {
      if (maps_[1].preimage[static_cast<std::size_t>(v)] != 0)
        continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      if (set(1, y, v) && propagate() && search())
        return true;
      undo(mark);
      if (exhausted_)
        return false;
    }
    return false;
  }

  const Magma& m1_;
  const Magma& m2_;
  int n_;
  std::uint64_t budget_;
  PartialMap maps_[3];
  std::vector<std::pair<int, Element>> trail_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool found_ = false;
  bool changed_ = false;
};

MorphismResult principal_isotope_search(const Magma& m1, const Magma& m2, std::uint64_t budget) {
  MorphismResult result;
  const IsotopismTriple to_l1 = loop_isotope_triple(m1, 1, 1);
  const IsotopismTriple to_l2 = loop_isotope_triple(m2, 1, 1);
  const Magma l1 = apply_isotopism(m1, to_l1);
  const Magma l2 = apply_isotopism(m2, to_l2);

  for (Element f = 1; f <= l1.order(); ++f)
    for (Element g = 1; g <= l1.order(); ++g) {
      if (++result.nodes_explored > budget) {
        result.budget_exhausted = true;
        result.verdict = Verdict::Unknown;
        return result;
      }
      const IsotopismTriple to_p = loop_isotope_triple(l1, f, g);
      const Magma p = apply_isotopism(l1, to_p);
      MorphismResult iso = are_isomorphic(p, l2, budget - result.nodes_explored);
      result.nodes_explored += iso.nodes_explored;
      if (iso.budget_exhausted) {
        result.budget_exhausted = true;
        result.verdict = Verdict::Unknown;
        return result;
      }
      if (iso.related()) {
        // m1 -> l1 -> p -> l2 -> m2
        IsotopismTriple t =
            compose(compose(compose(to_l1, to_p), IsotopismTriple::diagonal(*iso.isomorphism)), invert(to_l2));
        if (!is_isotopism(m1, m2, t))
          throw Error("internal consistency: composed isotopism failed verification");
        result.verdict = Verdict::Related;
        result.isotopism = std::move(t);
        return result;
      }
    }
  result.verdict = Verdict::Unrelated;
  return result;
}

} // namespace

MorphismResult are_isomorphic(const Magma& m1, const Magma& m2, std::uint64_t budget) {
  if (m1.order() != m2.order())
    return MorphismResult{};
  return IsomorphismSearch(m1, m2, budget).run();
}

MorphismResult are_isotopic(const Magma& m1, const Magma& m2, std::uint64_t budget, IsotopyStrategy strategy) {
  require_latin(m1, "isotopy search");
  require_latin(m2, "isotopy search");
  if (m1.order() != m2.order())
    return MorphismResult{};
  if (strategy == IsotopyStrategy::PrincipalIsotopes)
    return principal_isotope_search(m1, m2, budget);
  return TripleSearch(m1, m2, budget).run();
}

BridgeIsotopism parastrophe_isotopy_bridge(const Magma& theta, const IsotopismTriple& theta_iso,
                                           const IsotopismTriple& tstar_iso) {
  require_loop(theta, "parastrophe isotopy bridge");
  const Magma otimes = apply_isotopism(theta, theta_iso);
  const Magma oplus = apply_isotopism(parastrophe(theta), tstar_iso);

  const auto& [a, b, c] = theta_iso;
  const auto& [d, e, f] = tstar_iso;
  std::optional<BridgeIsotopism> bridge;
  if (otimes.is_commutative())
    bridge = BridgeIsotopism{{b.inverse() * d, a.inverse() * e, c.inverse() * f}, BridgeForm::Gamma};
  else if (oplus.is_commutative())
    bridge = BridgeIsotopism{{a.inverse() * e, b.inverse() * d, c.inverse() * f}, BridgeForm::Mu};
  else
    throw HypothesisError("neither isotope is commutative");

  if (!is_isotopism(otimes, oplus, bridge->triple))
    throw ContractError("bridge triple does not carry the first isotope onto the second");
  return *bridge;
}

} // namespace qloop
