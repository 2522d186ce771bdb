#pragma once

// Binary words, bricks, numbered patterns and eventually periodic points of
// the Cantor n-cube C^n. Bit 0 names the left (or bottom) third of a
// coordinate interval, bit 1 the right (or top) third.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

/// Raised for malformed text input (words, bricks, patterns, points, files).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace thompson

namespace thompson::cantor {

/// A finite word over {0,1}; the empty word prints as "e".
class Word {
public:
  Word() = default;
  explicit Word(std::string bits);

  static Word parse(std::string_view text);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }

  bool is_prefix_of(const Word& other) const;
  /// True when neither word is a prefix of the other.
  bool disjoint_from(const Word& other) const;

  Word operator+(const Word& rhs) const { return Word(bits_ + rhs.bits_, trusted{}); }
  Word operator+(char bit) const { return Word(bits_ + bit, trusted{}); }
  Word prefix(std::size_t n) const { return Word(bits_.substr(0, n), trusted{}); }
  Word suffix_from(std::size_t n) const { return Word(bits_.substr(n), trusted{}); }
  Word reversed() const;
  Word with_last_flipped() const;

  std::string to_string() const { return bits_.empty() ? std::string("e") : bits_; }

  auto operator<=>(const Word&) const = default;

private:
  struct trusted {};
  Word(std::string bits, trusted) : bits_(std::move(bits)) {}
  std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Exact dyadic rational numerator / 2^exponent.
class Dyadic {
public:
  using Integer = boost::multiprecision::cpp_int;

  Dyadic() = default;
  Dyadic(Integer numerator, unsigned exponent);

  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic power_of_half(unsigned exponent) { return Dyadic(1, exponent); }

  Dyadic operator+(const Dyadic& rhs) const;
  Dyadic operator-(const Dyadic& rhs) const;
  bool operator==(const Dyadic& rhs) const;
  bool is_zero() const { return numerator_ == 0; }

  const Integer& numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }
  std::string to_string() const;

private:
  void normalize();
  Integer numerator_ = 0;
  unsigned exponent_ = 0;
};

/// Clopen box of C^n: the points whose coordinate j starts with words[j].
class Brick {
public:
  Brick() = default;
  explicit Brick(std::vector<Word> words);

  static Brick whole(std::size_t dim) { return Brick(std::vector<Word>(dim)); }
  static Brick parse(std::string_view text);

  std::size_t dim() const { return words_.size(); }
  const Word& operator[](std::size_t axis) const { return words_[axis]; }
  const std::vector<Word>& words() const { return words_; }

  /// Total number of letters; the measure is 2^-depth.
  std::size_t depth() const;
  Dyadic measure() const { return Dyadic::power_of_half(static_cast<unsigned>(depth())); }

  bool contains(const Brick& inner) const;
  bool disjoint_from(const Brick& other) const;
  /// Coordinatewise intersection, empty when the bricks are disjoint.
  std::optional<Brick> intersect(const Brick& other) const;

  /// Coordinatewise concatenation: the image of `inner` under the affine
  /// identification of the cube with this brick.
  Brick operator+(const Brick& inner) const;
  /// Inverse of operator+: the suffixes left after removing this brick's words.
  Brick relative(const Brick& inner) const;

  Brick child(std::size_t axis, char bit) const;

  std::string to_string() const;

  auto operator<=>(const Brick&) const = default;

private:
  std::vector<Word> words_;
};

std::ostream& operator<<(std::ostream& os, const Brick& b);

std::pair<Brick, Brick> split_brick(const Brick& b, std::size_t axis);

/// Ordered brick list; position i is rectangle number i. Validity is a
/// separate check (validate_partition).
class NumberedPattern {
public:
  NumberedPattern() = default;
  NumberedPattern(std::size_t dim, std::vector<Brick> bricks);

  static NumberedPattern trivial(std::size_t dim) { return {dim, {Brick::whole(dim)}}; }
  static NumberedPattern parse(std::string_view text);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return bricks_.size(); }
  const Brick& operator[](std::size_t i) const { return bricks_[i]; }
  const std::vector<Brick>& bricks() const { return bricks_; }

  /// Replaces brick i by its two halves along axis (child 0 at i, child 1 at i+1).
  NumberedPattern split(std::size_t i, std::size_t axis) const;
  /// Index of the brick containing `inner`, if any.
  std::optional<std::size_t> find_containing(const Brick& inner) const;

  std::string to_string() const;

  bool operator==(const NumberedPattern&) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Brick> bricks_;
};

std::ostream& operator<<(std::ostream& os, const NumberedPattern& p);

struct PartitionVerdict {
  bool valid = false;
  /// First offending pair (i < j) when two bricks intersect.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  /// 1 - sum of measures when the bricks are disjoint but do not cover.
  std::optional<Dyadic> deficit;
  std::string reason;

  explicit operator bool() const { return valid; }
};

PartitionVerdict validate_partition(const NumberedPattern& p);

struct RefinedBrick {
  Brick brick;
  std::size_t in_p;
  std::size_t in_q;
};

/// All nonempty intersections of a brick of p with a brick of q, ordered by
/// (index in p, index in q).
std::vector<RefinedBrick> common_refinement(const NumberedPattern& p, const NumberedPattern& q);

/// Binary split tree whose leaves realize a pattern by iterated half-splits.
struct SplitTree {
  struct Node {
    Brick region;
    std::optional<std::size_t> axis; // set on interior nodes
    std::size_t lower = 0;           // child indices, valid when axis is set
    std::size_t upper = 0;
    std::optional<std::size_t> brick; // pattern index, set on leaves
  };
  std::vector<Node> nodes; // nodes[0] is the whole cube

  std::size_t split_count() const;
  /// Leaf bricks in depth-first, lower-half-first order.
  std::vector<Brick> leaves() const;
};

struct GuillotineResult {
  std::optional<SplitTree> tree;
  std::optional<Brick> stuck_region; // region with no separating midline
  explicit operator bool() const { return tree.has_value(); }
};

GuillotineResult guillotine_decompose(const NumberedPattern& p);

/// Eventually periodic infinite word pre·period^inf in canonical form:
/// primitive period and shortest preperiod.
class PeriodicWord {
public:
  PeriodicWord() : period_("0") {}
  PeriodicWord(Word pre, Word period);

  static PeriodicWord parse(std::string_view text);

  const Word& pre() const { return pre_; }
  const Word& period() const { return period_; }

  char bit(std::size_t i) const;
  Word expand(std::size_t length) const;
  bool has_prefix(const Word& w) const;
  /// Removes a prefix; requires has_prefix(w).
  PeriodicWord strip(const Word& w) const;
  PeriodicWord prepend(const Word& w) const;

  std::string to_string() const;

  auto operator<=>(const PeriodicWord&) const = default;

private:
  void canonicalize();
  Word pre_;
  Word period_;
};

/// Rational point of C^n.
class Point {
public:
  Point() = default;
  explicit Point(std::vector<PeriodicWord> coords) : coords_(std::move(coords)) {}

  static Point parse(std::string_view text);

  std::size_t dim() const { return coords_.size(); }
  const PeriodicWord& operator[](std::size_t axis) const { return coords_[axis]; }
  const std::vector<PeriodicWord>& coords() const { return coords_; }

  std::string to_string() const;

  auto operator<=>(const Point&) const = default;

private:
  std::vector<PeriodicWord> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& x);

bool point_in_brick(const Point& x, const Brick& b);

/// Strips from's words and prepends to's words coordinatewise.
Point apply_prefix_replacement(const Point& x, const Brick& from, const Brick& to);

} // namespace thompson::cantor
