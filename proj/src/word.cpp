#include "ohtsuki/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ohtsuki/error.hpp"

namespace ohtsuki {

namespace {

struct Token {
  int value;
  std::size_t offset;
};

std::optional<Token> read_int(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return std::nullopt;
  }
  const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos) throw ParseError("integer out of range", start);
  return Token{value, start};
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::map<Component, int> sums;
  for (const auto& l : letters_) {
    if (l.generator < 1) throw std::invalid_argument("generator index must be >= 1");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    sums[l.generator] += l.sign;
  }
  for (const auto& [g, s] : sums)
    if (s != 0)
      throw std::invalid_argument("exponent sum of generator " + std::to_string(g) + " is " +
                                  (s > 0 ? "+" : "") + std::to_string(s));
}

ComponentSet Word::generators() const {
  ComponentSet out;
  for (const auto& l : letters_) out.insert(l.generator);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

SimpleCommutator SimpleCommutator::make(Component a, Component b, int exponent) {
  if (a == b) throw std::invalid_argument("commutator of a generator with itself");
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("commutator exponent must be +-1");
  if (a > b) return {b, a, -exponent};
  return {a, b, exponent};
}

Presentation::Presentation(std::vector<SimpleCommutator> circles, ComponentSet ambient)
    : circles_(std::move(circles)), ambient_(std::move(ambient)) {
  ambient_.insert(0);
  for (const auto& c : circles_) {
    if (c.first >= c.second) throw std::invalid_argument("commutator not in normal form");
    if (c.first == 0) throw std::invalid_argument("circle mentions the localized component 0");
    if (!ambient_.contains(c.first) || !ambient_.contains(c.second))
      throw std::invalid_argument("circle " + to_string(c) + " mentions a component outside ambient");
  }
}

Presentation::Presentation(std::vector<SimpleCommutator> circles)
    : Presentation(circles, [&] {
        ComponentSet amb{0};
        for (const auto& c : circles) amb.insert({c.first, c.second});
        return amb;
      }()) {}

int EpsilonMatrix::operator()(Component i, Component j) const {
  if (i == j) return 0;
  const bool swapped = i > j;
  const auto it = entries_.find(swapped ? std::pair{j, i} : std::pair{i, j});
  if (it == entries_.end()) return 0;
  return swapped ? -it->second : it->second;
}

void EpsilonMatrix::add(Component i, Component j, int delta) {
  if (i == j || delta == 0) return;
  if (i > j) {
    std::swap(i, j);
    delta = -delta;
  }
  auto& slot = entries_[{i, j}];
  slot += delta;
  if (slot == 0) entries_.erase({i, j});
}

EpsilonMatrix& EpsilonMatrix::operator+=(const EpsilonMatrix& other) {
  for (const auto& [ij, v] : other.entries_) add(ij.first, ij.second, v);
  return *this;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    const auto tok = read_int(text, pos);
    if (!tok) throw ParseError("expected a signed integer", pos);
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("malformed token", tok->offset);
    if (tok->value == 0) throw ParseError("zero is not a generator", tok->offset);
    letters.push_back({std::abs(tok->value), tok->value > 0 ? 1 : -1});
    skip_space(text, pos);
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.generator);
  }
  return out;
}

EpsilonMatrix magnus_epsilon(const Word& w) {
  EpsilonMatrix e;
  const auto& L = w.letters();
  for (std::size_t p = 0; p < L.size(); ++p)
    for (std::size_t q = p + 1; q < L.size(); ++q)
      if (L[p].generator < L[q].generator)
        e.add(L[p].generator, L[q].generator, L[p].sign * L[q].sign);
  return e;
}

Presentation canonical_presentation(const Word& w, const ComponentSet& ambient) {
  for (Component g : w.generators())
    if (!ambient.contains(g))
      throw std::invalid_argument("generator " + std::to_string(g) + " is not in the ambient set");
  std::vector<SimpleCommutator> circles;
  const EpsilonMatrix e = magnus_epsilon(w);
  for (const auto& [ij, v] : e.entries()) {
    const int sign = v > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(v); ++k) circles.push_back({ij.first, ij.second, sign});
  }
  return {std::move(circles), ambient};
}

Presentation canonical_presentation(const Word& w) {
  ComponentSet ambient = w.generators();
  ambient.insert(0);
  return canonical_presentation(w, ambient);
}

namespace {

std::vector<SimpleCommutator> parse_bracket_circles(std::string_view text) {
  std::vector<SimpleCommutator> circles;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw ParseError("expected at least one bracket", pos);
  while (pos < text.size()) {
    if (text[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    skip_space(text, pos);
    const auto head = read_int(text, pos);
    if (!head) throw ParseError("expected bracket head", pos);
    if (head->value == 0) throw ParseError("zero is not a generator", head->offset);
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    std::size_t tail_count = 0;
    for (;;) {
      while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
        ++pos;
      if (pos < text.size() && text[pos] == ']') break;
      const auto tok = read_int(text, pos);
      if (!tok) throw ParseError("expected a signed integer or ']'", pos);
      if (tok->value == 0) throw ParseError("zero is not a generator", tok->offset);
      if (std::abs(tok->value) == std::abs(head->value))
        throw ParseError("bracket entry repeats its head generator", tok->offset);
      const int exponent = (head->value > 0 ? 1 : -1) * (tok->value > 0 ? 1 : -1);
      circles.push_back(SimpleCommutator::make(std::abs(head->value), std::abs(tok->value), exponent));
      ++tail_count;
    }
    if (tail_count == 0) throw ParseError("bracket has an empty right-hand side", pos);
    ++pos;  // ']'
    skip_space(text, pos);
  }
  return circles;
}

}  // namespace

Presentation parse_bracket(std::string_view text) { return Presentation(parse_bracket_circles(text)); }

Presentation parse_bracket(std::string_view text, const ComponentSet& ambient) {
  return {parse_bracket_circles(text), ambient};
}

std::string format_bracket(const Presentation& p) {
  std::string out;
  for (const auto& c : p.circles()) {
    out += "[" + std::to_string(c.first) + ", " + std::to_string(c.exponent * c.second) + "]";
  }
  return out;
}

EpsilonMatrix presentation_epsilon(const Presentation& p) {
  EpsilonMatrix e;
  for (const auto& c : p.circles()) e.add(c.first, c.second, c.exponent);
  return e;
}

ComponentSet parse_ambient(std::string_view text) {
  ComponentSet out;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    const auto lo = read_int(text, pos);
    if (!lo || lo->value < 0) throw ParseError("expected a component index", pos);
    if (text.substr(pos, 2) == "..") {
      pos += 2;
      const auto hi = read_int(text, pos);
      if (!hi || hi->value < lo->value) throw ParseError("bad range upper bound", pos);
      for (int i = lo->value; i <= hi->value; ++i) out.insert(i);
    } else {
      out.insert(lo->value);
    }
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') ++pos;
    skip_space(text, pos);
  }
  if (out.empty()) throw ParseError("empty ambient set", 0);
  return out;
}

std::string format_ambient(const ComponentSet& ambient) {
  std::string out;
  for (Component c : ambient) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

std::string to_string(const SimpleCommutator& c) {
  std::string s = "[" + std::to_string(c.first) + "," + std::to_string(c.second) + "]";
  if (c.exponent < 0) s += "^-1";
  return s;
}

}  // namespace ohtsuki
