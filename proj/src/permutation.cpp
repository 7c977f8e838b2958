#include "qloop/permutation.hpp"

#include "qloop/errors.hpp"

#include <cctype>
#include <charconv>

namespace qloop {

Permutation Permutation::identity(int degree) {
  if (degree < 1)
    throw DomainError("permutation degree must be positive");
  std::vector<Element> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Element> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1)
    throw DomainError("permutation degree must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Element v : images) {
    if (v < 1 || v > n)
      throw DomainError("permutation image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<Element>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Element from = cycle[i];
      if (from < 1 || from > degree)
        throw DomainError("cycle point " + std::to_string(from) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(from)])
        throw DomainError("cycle point " + std::to_string(from) + " appears twice");
      used[static_cast<std::size_t>(from)] = true;
      p.images_[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Element Permutation::image(Element x) const {
  if (x < 1 || x > degree())
    throw DomainError("element " + std::to_string(x) + " outside 1.." + std::to_string(degree()));
  return (*this)(x);
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Element>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Element>(i + 1))
      return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size() + 1, false);
  for (Element start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start)
      continue;
    out += '(';
    Element x = start;
    bool first = true;
    while (!done[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string Permutation::to_image_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree())
    throw DomainError("cannot compose permutations of degree " + std::to_string(first.degree()) +
                      " and " + std::to_string(then.degree()));
  std::vector<Element> images(first.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = then(first.images_[i]);
  return Permutation(std::move(images));
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() const { return pos >= text.size(); }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos + 1); }

  Element number() {
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    Element v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin)
      fail("expected an integer");
    pos += static_cast<std::size_t>(ptr - begin);
    return v;
  }
};

} // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  Cursor cur{text};
  cur.skip_space();
  if (cur.done())
    cur.fail("empty permutation");

  if (text[cur.pos] != '(') {
    std::vector<Element> images;
    while (!cur.done()) {
      images.push_back(cur.number());
      cur.skip_space();
    }
    if (static_cast<int>(images.size()) != degree)
      throw ParseError("image notation needs " + std::to_string(degree) + " entries, got " +
                           std::to_string(images.size()),
                       1, 1);
    return Permutation::from_images(std::move(images));
  }

  std::vector<std::vector<Element>> cycles;
  while (!cur.done()) {
    if (text[cur.pos] != '(')
      cur.fail("expected '('");
    ++cur.pos;
    std::vector<Element> cycle;
    cur.skip_space();
    while (!cur.done() && text[cur.pos] != ')') {
      if (text[cur.pos] == ',') {
        ++cur.pos;
        cur.skip_space();
        continue;
      }
      cycle.push_back(cur.number());
      cur.skip_space();
    }
    if (cur.done())
      cur.fail("unterminated cycle");
    ++cur.pos;
    cycles.push_back(std::move(cycle));
    cur.skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

} // namespace qloop
