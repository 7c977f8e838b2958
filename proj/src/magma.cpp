#include "qloop/magma.hpp"

#include "qloop/errors.hpp"

#include <algorithm>

namespace qloop {

Magma::Magma(int order, std::vector<Element> cells) : order_(order), cells_(std::move(cells)) {
  if (order_ < 1)
    throw DomainError("table order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (cells_.size() != n * n)
    throw DomainError("table of order " + std::to_string(order_) + " needs " + std::to_string(n * n) +
                      " cells, got " + std::to_string(cells_.size()));
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] < 1 || cells_[i] > order_)
      throw DomainError("cell (" + std::to_string(i / n + 1) + "," + std::to_string(i % n + 1) + ") holds " +
                        std::to_string(cells_[i]) + ", outside 1.." + std::to_string(order_));
  }
  compute_flags();
}

Magma Magma::from_rows(const std::vector<std::vector<Element>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Element> cells;
  cells.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw DomainError("table rows must all have length " + std::to_string(n));
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return Magma(n, std::move(cells));
}

void Magma::compute_flags() {
  const int n = order_;
  const auto un = static_cast<std::size_t>(n);

  latin_ = true;
  std::vector<int> seen(un + 1, 0);
  int stamp = 0;
  for (Element x = 1; x <= n && latin_; ++x) {
    ++stamp;
    for (Element y = 1; y <= n; ++y) {
      int& s = seen[static_cast<std::size_t>((*this)(x, y))];
      if (s == stamp) {
        latin_ = false;
        break;
      }
      s = stamp;
    }
  }
  for (Element y = 1; y <= n && latin_; ++y) {
    ++stamp;
    for (Element x = 1; x <= n; ++x) {
      int& s = seen[static_cast<std::size_t>((*this)(x, y))];
      if (s == stamp) {
        latin_ = false;
        break;
      }
      s = stamp;
    }
  }

  commutative_ = true;
  for (Element x = 1; x <= n && commutative_; ++x)
    for (Element y = x + 1; y <= n; ++y)
      if ((*this)(x, y) != (*this)(y, x)) {
        commutative_ = false;
        break;
      }

  for (Element e = 1; e <= n; ++e) {
    bool left = true, right = true;
    for (Element x = 1; x <= n; ++x) {
      left = left && (*this)(e, x) == x;
      right = right && (*this)(x, e) == x;
    }
    if (left)
      left_identities_.push_back(e);
    if (right)
      right_identities_.push_back(e);
  }
  for (Element e : left_identities_)
    if (std::find(right_identities_.begin(), right_identities_.end(), e) != right_identities_.end())
      identity_ = e;

  if (latin_) {
    ldiv_.assign(un * un, 0);
    rdiv_.assign(un * un, 0);
    for (Element a = 1; a <= n; ++a)
      for (Element x = 1; x <= n; ++x) {
        ldiv_[index(a, (*this)(a, x))] = x; // a·x = b  =>  a\b = x
        rdiv_[index(a, (*this)(x, a))] = x; // x·a = b  =>  b/a = x
      }
  }
}

Element Magma::multiply(Element x, Element y) const {
  require_element(*this, x);
  require_element(*this, y);
  return (*this)(x, y);
}

std::vector<std::vector<Element>> Magma::rows() const {
  std::vector<std::vector<Element>> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (Element x = 1; x <= order_; ++x) {
    auto r = row(x);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

void require_element(const Magma& m, Element x) {
  if (!m.contains(x))
    throw DomainError("element " + std::to_string(x) + " outside 1.." + std::to_string(m.order()));
}

void require_latin(const Magma& m, std::string_view what) {
  if (!m.is_latin())
    throw StructureError(std::string(what) + " requires a quasigroup (latin table)");
}

void require_loop(const Magma& m, std::string_view what) {
  if (!m.is_loop())
    throw StructureError(std::string(what) + " requires a loop");
}

Permutation left_translation(const Magma& m, Element a) {
  require_latin(m, "left translation");
  require_element(m, a);
  auto r = m.row(a);
  return Permutation::from_images(std::vector<Element>(r.begin(), r.end()));
}

Permutation right_translation(const Magma& m, Element a) {
  require_latin(m, "right translation");
  require_element(m, a);
  std::vector<Element> images;
  images.reserve(static_cast<std::size_t>(m.order()));
  for (Element x = 1; x <= m.order(); ++x)
    images.push_back(m(x, a));
  return Permutation::from_images(std::move(images));
}

Element left_divide(const Magma& m, Element a, Element b) {
  require_latin(m, "left division");
  require_element(m, a);
  require_element(m, b);
  return m.left_quotient(a, b);
}

Element right_divide(const Magma& m, Element a, Element b) {
  require_latin(m, "right division");
  require_element(m, a);
  require_element(m, b);
  return m.right_quotient(b, a);
}

Inverses inverses(const Magma& m, Element a) {
  if (!m.identity())
    throw StructureError("inverses require a two-sided identity");
  require_element(m, a);
  const Element e = *m.identity();
  Inverses inv{0, 0};
  for (Element x = 1; x <= m.order(); ++x) {
    if (inv.left == 0 && m(x, a) == e)
      inv.left = x;
    if (inv.right == 0 && m(a, x) == e)
      inv.right = x;
  }
  if (inv.left == 0 || inv.right == 0)
    throw StructureError("element " + std::to_string(a) + " has no inverse");
  return inv;
}

Magma transpose(const Magma& m) {
  return Magma::from_operation(m.order(), [&](Element x, Element y) { return m(y, x); });
}

TranslationSets translation_sets(const Magma& m) {
  require_latin(m, "translation sets");
  TranslationSets sets;
  for (Element a = 1; a <= m.order(); ++a) {
    sets.left.push_back(left_translation(m, a));
    sets.right.push_back(right_translation(m, a));
    if (sets.left.back() == sets.right.back()) {
      sets.both.push_back(sets.left.back());
      sets.both_elements.push_back(a);
    }
  }
  return sets;
}

Magma relabel(const Magma& m, const Permutation& p) {
  if (p.degree() != m.order())
    throw DomainError("relabelling permutation has the wrong degree");
  const Permutation inv = p.inverse();
  return Magma::from_operation(m.order(), [&](Element x, Element y) { return p(m(inv(x), inv(y))); });
}

} // namespace qloop
