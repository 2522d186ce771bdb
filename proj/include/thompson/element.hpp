#pragma once

// Elements of nV as numbered pattern pairs. Brick i of the domain pattern is
// carried onto brick i of the range pattern by the orientation preserving
// prefix replacement.

#include <span>
#include <string>
#include <string_view>

#include "thompson/cantor.hpp"

namespace thompson::nv {

using cantor::Brick;
using cantor::NumberedPattern;
using cantor::Point;

class Element {
public:
  Element() = default;

  static Element identity(std::size_t dim);
  /// Skips partition validation; for internally produced pattern pairs.
  static Element unchecked(NumberedPattern domain, NumberedPattern range);

  std::size_t dim() const { return domain_.dim(); }
  std::size_t size() const { return domain_.size(); }
  const NumberedPattern& domain() const { return domain_; }
  const NumberedPattern& range() const { return range_; }

  /// The .el text form: header line then one "brick => brick" line per pair.
  std::string to_file() const;
  static Element parse_file(std::string_view text);

  bool operator==(const Element&) const = default; // structural, not group equality

private:
  Element(NumberedPattern domain, NumberedPattern range)
      : domain_(std::move(domain)), range_(std::move(range)) {}

  NumberedPattern domain_;
  NumberedPattern range_;
};

/// Validating constructor; throws std::invalid_argument on mismatched counts,
/// dimensions, or a pattern that is not a partition.
Element make_element(NumberedPattern domain, NumberedPattern range);

Point apply(const Element& f, const Point& x);

/// g∘f: f is applied first.
Element compose(const Element& g, const Element& f);

Element invert(const Element& f);

bool is_identity(const Element& f);

/// Group equality: f∘g⁻¹ is the identity.
bool equals(const Element& f, const Element& g);

/// Merges paired sibling bricks split along the same axis in the same order
/// until no such pair remains.
Element reduce(const Element& f);

/// Splits brick i of the domain and its paired range brick along axis.
/// The result represents the same homeomorphism.
Element subdivide(const Element& f, std::size_t i, std::size_t axis);

/// Builds h with h(K) inside U, where K is a proper nonempty set of brick
/// indices of `pattern` and U is any brick other than the whole cube.
Element transitivity_map(const NumberedPattern& pattern, std::span<const std::size_t> K,
                         const Brick& U);

} // namespace thompson::nv
