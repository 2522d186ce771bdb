#pragma once

// The positive monoid of numbered pattern sequences on the squares
// S_0, S_1, ... and its generators v_i (vertical split), h_i (horizontal
// split) and s_i (exchange of the numbers i and i+1).

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/cantor.hpp"

namespace thompson::pi {

using cantor::Brick;
using cantor::NumberedPattern;

enum class LetterKind { V, H, S };

struct Letter {
  LetterKind kind;
  std::size_t index;

  static Letter v(std::size_t i) { return {LetterKind::V, i}; }
  static Letter h(std::size_t i) { return {LetterKind::H, i}; }
  static Letter s(std::size_t i) { return {LetterKind::S, i}; }

  bool is_split() const { return kind != LetterKind::S; }
  std::string to_string() const;

  auto operator<=>(const Letter&) const = default;
};

/// Whitespace separated tokens "v<i>", "h<i>", "s<i>".
struct MonoidWord {
  std::vector<Letter> letters;

  static MonoidWord parse(std::string_view text);
  std::string to_string() const;

  std::size_t size() const { return letters.size(); }
  MonoidWord operator+(const MonoidWord& rhs) const;
  bool operator==(const MonoidWord&) const = default;
};

struct NumberedBrick {
  Brick brick;
  std::size_t number;

  auto operator<=>(const NumberedBrick&) const = default;
};

/// A numbered sequence of 2-dimensional patterns. Only squares below
/// tail_start() are stored; square s >= tail_start() is unsplit and carries
/// number s + offset().
class PatternSequence {
public:
  static PatternSequence trivial() { return {}; }
  /// The Π₀ sequence with square 0 = p, brick i numbered i.
  static PatternSequence from_square0(const NumberedPattern& p);
  /// Inverse of to_string.
  static PatternSequence parse(std::string_view text);

  std::size_t tail_start() const { return squares_.size(); }
  std::size_t offset() const;
  std::size_t explicit_rectangles() const;

  /// Rectangles of square s sorted by brick (materialized for tail squares).
  std::vector<NumberedBrick> square(std::size_t s) const;
  /// Square s as a numbered pattern ordered by the rectangle numbers, which
  /// must then be consecutive.
  NumberedPattern square_pattern(std::size_t s) const;

  /// Right multiplication by one generator.
  PatternSequence then(Letter x) const;

  std::string to_string() const;

  bool operator==(const PatternSequence&) const = default;

private:
  void materialize(std::size_t square);
  std::pair<std::size_t, std::size_t> locate(std::size_t number);
  void split(std::size_t number, std::size_t axis);
  void exchange(std::size_t number);
  void canonicalize();

  friend PatternSequence multiply(const PatternSequence& p, const PatternSequence& q);

  std::vector<std::vector<NumberedBrick>> squares_;
};

PatternSequence eval_word(const MonoidWord& w);

/// Pastes square i of q into rectangle i of p; the numbering is q's.
PatternSequence multiply(const PatternSequence& p, const PatternSequence& q);

bool check_monoid_relation(const MonoidWord& lhs, const MonoidWord& rhs);

/// One instance of the defining relations of the monoid. family is "1"
/// (x_j y_i = y_i x_{j+1}, i < j), "2a" (s_i s_i = 1), "2b" (commuting
/// exchanges), "2c" (braid), "3" (moving s_j past x_i) or "4" (the cross
/// relation v_i h_{i+1} h_i = h_i v_{i+1} v_i s_{i+1}).
struct MonoidRelation {
  std::string family;
  std::string indices;
  MonoidWord lhs;
  MonoidWord rhs;
};

/// All instances whose parameters i, j are at most max_index, with x and y
/// ranging over {v, h}.
std::vector<MonoidRelation> monoid_relation_instances(std::size_t max_index);

/// Moves every s-letter to the right of every split letter using the
/// s_j x_i exchange rules, leftmost violation first.
MonoidWord rewrite_to_pq(const MonoidWord& w);

/// True when all split letters precede all s-letters.
bool is_pq_form(const MonoidWord& w);

bool in_pi0(const PatternSequence& s);

/// Word p·q for the Π₀ sequence whose square 0 is the 2-dimensional
/// pattern p, numbered by position. p replays the guillotine split tree
/// splitting the lowest numbered unfinished region first; q is the
/// bubble-sort factorization of the renumbering. Throws std::invalid_argument
/// for a pattern without a guillotine decomposition.
MonoidWord pattern_to_pq(const NumberedPattern& p);

} // namespace thompson::pi
