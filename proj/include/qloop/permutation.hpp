#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qloop {

/// Elements are the labels 1..n everywhere in the public interface.
using Element = int;

/// A bijection of {1..n}. Permutations act on the right: `p(x)` is the image
/// written xp, and `p * q` means "apply p, then q", so the product reads in
/// the same order as a chain of right actions x(pq) = (xp)q.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int degree);

  /// `images[i]` is the image of element i+1. Throws DomainError unless the
  /// images form a bijection of 1..n.
  static Permutation from_images(std::vector<Element> images);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<Element>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  Element operator()(Element x) const noexcept { return images_[static_cast<std::size_t>(x - 1)]; }
  Element image(Element x) const;

  std::span<const Element> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;
  /// Space separated images, "3 1 2".
  std::string to_image_string() const;

  friend Permutation operator*(const Permutation& first, const Permutation& then);
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<Element> images) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

/// Parses image notation ("3 1 2") or cycle notation ("(1 5 2)(3 4)"), chosen
/// by a leading '('. Image notation must list exactly `degree` tokens.
Permutation parse_permutation(std::string_view text, int degree);

} // namespace qloop
