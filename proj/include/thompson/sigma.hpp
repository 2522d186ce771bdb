#pragma once

// The generating set Σ = {A_i, B_i, C_i, π_i, π̄_i} of 2V, words over it, and
// the decomposition of an arbitrary 2V element into a Σ word.
//
// Each generator is a pair (a, b) of Π₀ monoid words and denotes the element
// carrying rectangle i of b onto rectangle i of a:
//   A_i  = (v0^{i+1} v1, v0^{i+2})     B_i  = (v0^{i+1} h1, v0^{i+2})
//   C_i  = (v0^i h0,     v0^{i+1})     π_i  = (v0^{i+2} s1, v0^{i+2})
//   π̄_i  = (v0^{i+1} s0, v0^{i+1})
// Products compose right to left: in the word x y, y acts first.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/monoid.hpp"

namespace thompson::sigma {

enum class Base { A, B, C, Pi, PiBar };

/// Tokens: "A3", "B0", "C2", "p1" (π), "q0" (π̄); a trailing "'" inverts.
struct SigmaLetter {
  Base base;
  std::size_t index;
  int exponent = 1;

  SigmaLetter inverse() const { return {base, index, -exponent}; }
  std::string to_string() const;

  auto operator<=>(const SigmaLetter&) const = default;
};

SigmaLetter A(std::size_t i);
SigmaLetter B(std::size_t i);
SigmaLetter C(std::size_t i);
SigmaLetter Pi(std::size_t i);
SigmaLetter PiBar(std::size_t i);

struct SigmaWord {
  std::vector<SigmaLetter> letters;

  SigmaWord() = default;
  SigmaWord(std::initializer_list<SigmaLetter> l) : letters(l) {}
  explicit SigmaWord(std::vector<SigmaLetter> l) : letters(std::move(l)) {}

  static SigmaWord parse(std::string_view text);
  std::string to_string() const;

  SigmaWord inverse() const;
  SigmaWord operator+(const SigmaWord& rhs) const;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const SigmaWord&) const = default;
};

/// The defining monoid word pair (range word, domain word) of a generator.
std::pair<pi::MonoidWord, pi::MonoidWord> defining_pair(Base base, std::size_t index);

/// The 2V element of a pair (a, b) of Π₀ words with equal rectangle counts.
nv::Element element_of_pair(const pi::MonoidWord& a, const pi::MonoidWord& b);

nv::Element generator(const SigmaLetter& x);

nv::Element eval_sigma(const SigmaWord& w);

/// Σ word for (w, v0^k), where w is a Π₀ word in p·q form whose square 0 has
/// k+1 rectangles.
SigmaWord word_over_v0_power(const pi::MonoidWord& w);

/// Σ word representing a 2-dimensional element.
SigmaWord decompose(const nv::Element& f);

} // namespace thompson::sigma
