#pragma once

// Free-group words in meridian generators, their weight-2 Magnus data and
// their expansion into products of simple commutators.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ohtsuki {

/// Link-component label. The component carrying the word is 0; generators are >= 1.
using Component = int;
using ComponentSet = std::set<Component>;

struct Letter {
  Component generator = 1;
  int sign = 1;  // +1 meridian, -1 inverse meridian

  auto operator<=>(const Letter&) const = default;
};

/// A word whose generators all have exponent sum zero.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument if some generator has nonzero exponent sum
  /// or a letter is malformed.
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  ComponentSet generators() const;

  /// Concatenation; both factors already satisfy the exponent-sum invariant.
  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// [first, second]^exponent with first < second.
struct SimpleCommutator {
  Component first = 1;
  Component second = 2;
  int exponent = 1;

  /// Normalizes [b,a]^e to [a,b]^-e. Throws if a == b or e is not +-1.
  static SimpleCommutator make(Component a, Component b, int exponent = 1);

  SimpleCommutator inverse() const { return {first, second, -exponent}; }
  std::pair<Component, Component> pair() const { return {first, second}; }
  auto operator<=>(const SimpleCommutator&) const = default;
};

/// Ordered product of commutator circles on component 0's spanning disk.
class Presentation {
 public:
  Presentation() : ambient_{0} {}
  /// Throws std::invalid_argument if a circle mentions 0 or a component outside ambient.
  Presentation(std::vector<SimpleCommutator> circles, ComponentSet ambient);
  /// Ambient defaults to {0} together with every generator mentioned.
  explicit Presentation(std::vector<SimpleCommutator> circles);

  const std::vector<SimpleCommutator>& circles() const noexcept { return circles_; }
  const ComponentSet& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return circles_.size(); }

  Presentation with_ambient(ComponentSet ambient) const { return {circles_, std::move(ambient)}; }
  bool operator==(const Presentation&) const = default;

 private:
  std::vector<SimpleCommutator> circles_;
  ComponentSet ambient_;
};

/// Antisymmetric integer matrix of weight-2 exponents; only i < j is stored.
class EpsilonMatrix {
 public:
  int operator()(Component i, Component j) const;
  void add(Component i, Component j, int delta);

  /// Nonzero entries keyed by (i, j) with i < j.
  const std::map<std::pair<Component, Component>, int>& entries() const noexcept {
    return entries_;
  }
  bool is_zero() const noexcept { return entries_.empty(); }

  EpsilonMatrix& operator+=(const EpsilonMatrix& other);
  friend EpsilonMatrix operator+(EpsilonMatrix a, const EpsilonMatrix& b) { return a += b; }
  bool operator==(const EpsilonMatrix&) const = default;

 private:
  std::map<std::pair<Component, Component>, int> entries_;
};

Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// e_ij = sum over positions p < q, p an i-letter and q a j-letter, of sign(p) sign(q).
EpsilonMatrix magnus_epsilon(const Word& w);

/// |e_ij| copies of [i,j]^sign(e_ij), pairs in lexicographic order.
/// Throws std::invalid_argument if a generator of w is not in ambient or is 0.
Presentation canonical_presentation(const Word& w, const ComponentSet& ambient);
/// Ambient = {0} together with the generators of w.
Presentation canonical_presentation(const Word& w);

/// Distributes "[a, b1 b2 ...]" brackets left to right without cancelling.
Presentation parse_bracket(std::string_view text);
Presentation parse_bracket(std::string_view text, const ComponentSet& ambient);

/// Prints a presentation in the bracket grammar, one bracket per circle
/// ("[1, 2][2, -4]"). parse_bracket of the output returns the same circles.
std::string format_bracket(const Presentation& p);

EpsilonMatrix presentation_epsilon(const Presentation& p);

/// Parses "0..4" or "0,1,2,5". Throws ParseError.
ComponentSet parse_ambient(std::string_view text);
std::string format_ambient(const ComponentSet& ambient);

std::string to_string(const SimpleCommutator& c);

}  // namespace ohtsuki
