#pragma once

// The baker's map as the two-sided shift on eventually periodic bi-infinite
// binary sequences.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/cantor.hpp"

namespace thompson::baker {

using cantor::PeriodicWord;
using cantor::Word;

/// x: Z -> {0,1}, with x_0 x_1 ... = b ρ ρ ... and x_{-1} x_{-2} ... the
/// reverse of ... λ λ a. Text form "(λ)a.b(ρ)", empty a or b written "e".
class TwoSidedPoint {
public:
  TwoSidedPoint() = default;
  /// right = x_0 x_1 ..., left = x_{-1} x_{-2} ...
  TwoSidedPoint(PeriodicWord left, PeriodicWord right) : left_(std::move(left)), right_(std::move(right)) {}

  static TwoSidedPoint parse(std::string_view text);
  /// The purely periodic sequence with period `period` and x_0 = period[0].
  static TwoSidedPoint periodic(const Word& period);

  const PeriodicWord& left() const { return left_; }
  const PeriodicWord& right() const { return right_; }
  char at(long i) const;

  std::string to_string() const;

  auto operator<=>(const TwoSidedPoint&) const = default;

private:
  PeriodicWord left_;
  PeriodicWord right_;
};

/// (shift(x))_i = x_{i+1}.
TwoSidedPoint shift(const TwoSidedPoint& x);

/// Coordinate 0 = x_0 x_1 ..., coordinate 1 = x_{-1} x_{-2} ...
cantor::Point to_point(const TwoSidedPoint& x);
/// Throws std::invalid_argument unless p is 2-dimensional.
TwoSidedPoint from_point(const cantor::Point& p);

/// Orbit size of a purely periodic point; nullopt for an infinite orbit.
std::optional<std::size_t> orbit_size(const TwoSidedPoint& x);

/// Lexicographically least representatives of the binary necklaces of
/// length p with trivial rotation stabilizer, in increasing order. OpenMP
/// parallel over leading bits.
std::vector<Word> enumerate_periodic_orbits(std::size_t p);
std::vector<Word> enumerate_periodic_orbits_serial(std::size_t p);

} // namespace thompson::baker
