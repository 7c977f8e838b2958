#pragma once

#include "qloop/permutation.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qloop {

/// A finite magma given by its Cayley table over the labels 1..n; row is the
/// left operand. Immutable once built. The structural flags are computed on
/// construction, and for latin tables the division tables too, so that
/// `left_divide` and `right_divide` are lookups.
class Magma {
public:
  /// `cells` is row-major with n*n labels in 1..n.
  Magma(int order, std::vector<Element> cells);

  static Magma from_rows(const std::vector<std::vector<Element>>& rows);

  template <typename Op>
  static Magma from_operation(int order, Op&& op) {
    std::vector<Element> cells;
    cells.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    for (Element x = 1; x <= order; ++x)
      for (Element y = 1; y <= order; ++y)
        cells.push_back(op(x, y));
    return Magma(order, std::move(cells));
  }

  int order() const noexcept { return order_; }

  /// Unchecked product; x and y must lie in 1..n.
  Element operator()(Element x, Element y) const noexcept { return cells_[index(x, y)]; }

  /// Checked product, throws DomainError on out-of-range operands.
  Element multiply(Element x, Element y) const;

  std::span<const Element> cells() const noexcept { return cells_; }
  std::span<const Element> row(Element x) const noexcept {
    return std::span<const Element>(cells_).subspan(index(x, 1), static_cast<std::size_t>(order_));
  }
  std::vector<std::vector<Element>> rows() const;

  bool is_latin() const noexcept { return latin_; }
  bool is_commutative() const noexcept { return commutative_; }
  bool is_loop() const noexcept { return latin_ && identity_.has_value(); }
  std::optional<Element> identity() const noexcept { return identity_; }
  const std::vector<Element>& left_identities() const noexcept { return left_identities_; }
  const std::vector<Element>& right_identities() const noexcept { return right_identities_; }

  /// Lookups valid only on latin tables.
  Element left_quotient(Element a, Element b) const noexcept { return ldiv_[index(a, b)]; }
  Element right_quotient(Element b, Element a) const noexcept { return rdiv_[index(a, b)]; }

  bool contains(Element x) const noexcept { return x >= 1 && x <= order_; }

  friend bool operator==(const Magma& a, const Magma& b) {
    return a.order_ == b.order_ && a.cells_ == b.cells_;
  }

private:
  std::size_t index(Element x, Element y) const noexcept {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(y - 1);
  }
  void compute_flags();

  int order_;
  std::vector<Element> cells_;
  bool latin_ = false;
  bool commutative_ = false;
  std::vector<Element> left_identities_;
  std::vector<Element> right_identities_;
  std::optional<Element> identity_;
  std::vector<Element> ldiv_; // ldiv_[a][b] = a\b
  std::vector<Element> rdiv_; // rdiv_[a][b] = b/a
};

/// Left and right inverses of an element of a loop; `two_sided` is set when
/// they agree.
struct Inverses {
  Element left;  // aλ with aλ·a = e
  Element right; // aρ with a·aρ = e
  std::optional<Element> two_sided() const {
    return left == right ? std::optional<Element>(left) : std::nullopt;
  }
};

/// The sets of left and right translations, and the translations that are
/// simultaneously left and right translations by the same element.
struct TranslationSets {
  std::vector<Permutation> left;  // L_x for x = 1..n
  std::vector<Permutation> right; // R_x for x = 1..n
  std::vector<Permutation> both;  // B with B = L_a = R_a for some a
  std::vector<Element> both_elements;
};

void require_element(const Magma& m, Element x);
void require_latin(const Magma& m, std::string_view what);
void require_loop(const Magma& m, std::string_view what);

Permutation left_translation(const Magma& m, Element a);
Permutation right_translation(const Magma& m, Element a);
Element left_divide(const Magma& m, Element a, Element b);
Element right_divide(const Magma& m, Element a, Element b);
Inverses inverses(const Magma& m, Element a);
Magma transpose(const Magma& m);
TranslationSets translation_sets(const Magma& m);

/// Relabels the table by a bijection: the result ∘ satisfies (x·y)p = xp ∘ yp.
Magma relabel(const Magma& m, const Permutation& p);

/// Parses the text table format (comment lines, the order, then n rows) or,
/// when the first significant character is '{', the JSON form
/// {"order": n, "table": [[...], ...]}.
Magma parse_table(std::string_view text);

/// Text form accepted by parse_table: the order, then the rows.
std::string format_table(const Magma& m);

/// Bordered Cayley table for terminal output.
std::string render_table(const Magma& m, std::string_view symbol = "*");

} // namespace qloop
