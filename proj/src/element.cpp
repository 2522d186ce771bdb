#include "thompson/element.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace thompson::nv {

using cantor::Word;

Element Element::identity(std::size_t dim) {
  return Element(NumberedPattern::trivial(dim), NumberedPattern::trivial(dim));
}

Element Element::unchecked(NumberedPattern domain, NumberedPattern range) {
  return Element(std::move(domain), std::move(range));
}

Element make_element(NumberedPattern domain, NumberedPattern range) {
  if (domain.dim() != range.dim())
    throw std::invalid_argument("make_element: domain has dim " + std::to_string(domain.dim()) +
                                " but range has dim " + std::to_string(range.dim()));
  if (domain.size() != range.size())
    throw std::invalid_argument("make_element: domain has " + std::to_string(domain.size()) +
                                " bricks but range has " + std::to_string(range.size()));
  if (auto v = validate_partition(domain); !v)
    throw std::invalid_argument("make_element: invalid domain: " + v.reason);
  if (auto v = validate_partition(range); !v)
    throw std::invalid_argument("make_element: invalid range: " + v.reason);
  return Element::unchecked(std::move(domain), std::move(range));
}

std::string Element::to_file() const {
  std::ostringstream os;
  os << "nV dim=" << dim() << " k=" << size() << '\n';
  for (std::size_t i = 0; i < size(); ++i)
    os << domain_[i] << " => " << range_[i] << '\n';
  return os.str();
}

Element Element::parse_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("element file is empty");
  std::size_t dim = 0, k = 0;
  {
    std::istringstream header(line);
    std::string tag, dim_field, k_field;
    header >> tag >> dim_field >> k_field;
    if (tag != "nV" || dim_field.rfind("dim=", 0) != 0 || k_field.rfind("k=", 0) != 0)
      throw ParseError("element header must be \"nV dim=<n> k=<count>\", got \"" + line + "\"");
    try {
      dim = std::stoul(dim_field.substr(4));
      k = std::stoul(k_field.substr(2));
    } catch (const std::exception&) {
      throw ParseError("bad numbers in element header \"" + line + "\"");
    }
  }
  std::vector<Brick> dom, ran;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      continue;
    auto arrow = line.find("=>");
    if (arrow == std::string::npos)
      throw ParseError("element line must be \"brick => brick\", got \"" + line + "\"");
    dom.push_back(Brick::parse(std::string_view(line).substr(0, arrow)));
    ran.push_back(Brick::parse(std::string_view(line).substr(arrow + 2)));
    if (dom.back().dim() != dim || ran.back().dim() != dim)
      throw ParseError("brick dimension differs from header dim=" + std::to_string(dim));
  }
  if (dom.size() != k)
    throw ParseError("header says k=" + std::to_string(k) + " but file has " +
                     std::to_string(dom.size()) + " pairs");
  try {
    return make_element(NumberedPattern(dim, std::move(dom)), NumberedPattern(dim, std::move(ran)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Point apply(const Element& f, const Point& x) {
  if (x.dim() != f.dim())
    throw std::invalid_argument("apply: point dim differs from element dim");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (cantor::point_in_brick(x, f.domain()[i]))
      return cantor::apply_prefix_replacement(x, f.domain()[i], f.range()[i]);
  throw std::logic_error("apply: no domain brick contains " + x.to_string());
}

Element compose(const Element& g, const Element& f) {
  if (g.dim() != f.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  auto pieces = cantor::common_refinement(f.range(), g.domain());
  std::vector<Brick> dom, ran;
  dom.reserve(pieces.size());
  ran.reserve(pieces.size());
  for (const auto& piece : pieces) {
    const std::size_t i = piece.in_p;
    const std::size_t j = piece.in_q;
    dom.push_back(f.domain()[i] + f.range()[i].relative(piece.brick));
    ran.push_back(g.range()[j] + g.domain()[j].relative(piece.brick));
  }
  return Element::unchecked(NumberedPattern(f.dim(), std::move(dom)),
                            NumberedPattern(f.dim(), std::move(ran)));
}

Element invert(const Element& f) { return Element::unchecked(f.range(), f.domain()); }

bool is_identity(const Element& f) { return f.domain() == f.range(); }

bool equals(const Element& f, const Element& g) { return is_identity(compose(f, invert(g))); }

namespace {

// Finds a merge: a pair (i, j, axis) with domain bricks i, j siblings along
// axis and range bricks i, j siblings along the same axis in the same order.
struct Merge {
  std::size_t keep;
  std::size_t drop;
  std::size_t axis;
};

std::optional<Merge> find_merge(const std::vector<Brick>& dom, const std::vector<Brick>& ran,
                                const std::unordered_map<std::string, std::size_t>& index) {
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t a = 0; a < dom[i].dim(); ++a) {
      const Word& w = dom[i][a];
      const Word& r = ran[i][a];
      if (w.empty() || r.empty() || w.bits().back() != r.bits().back())
        continue;
      auto sib_words = dom[i].words();
      sib_words[a] = w.with_last_flipped();
      auto it = index.find(Brick(std::move(sib_words)).to_string());
      if (it == index.end())
        continue;
      const std::size_t j = it->second;
      auto rsib_words = ran[i].words();
      rsib_words[a] = r.with_last_flipped();
      if (ran[j] != Brick(std::move(rsib_words)))
        continue;
      return Merge{std::min(i, j), std::max(i, j), a};
    }
  }
  return std::nullopt;
}

Brick parent(const Brick& b, std::size_t axis) {
  auto words = b.words();
  words[axis] = words[axis].prefix(words[axis].size() - 1);
  return Brick(std::move(words));
}

} // namespace

Element reduce(const Element& f) {
  std::vector<Brick> dom = f.domain().bricks();
  std::vector<Brick> ran = f.range().bricks();
  std::unordered_map<std::string, std::size_t> index;
  auto rebuild = [&] {
    index.clear();
    for (std::size_t i = 0; i < dom.size(); ++i)
      index.emplace(dom[i].to_string(), i);
  };
  rebuild();
  while (auto m = find_merge(dom, ran, index)) {
    dom[m->keep] = parent(dom[m->keep], m->axis);
    ran[m->keep] = parent(ran[m->keep], m->axis);
    dom.erase(dom.begin() + static_cast<std::ptrdiff_t>(m->drop));
    ran.erase(ran.begin() + static_cast<std::ptrdiff_t>(m->drop));
    rebuild();
  }
  return Element::unchecked(NumberedPattern(f.dim(), std::move(dom)),
                            NumberedPattern(f.dim(), std::move(ran)));
}

Element subdivide(const Element& f, std::size_t i, std::size_t axis) {
  return Element::unchecked(f.domain().split(i, axis), f.range().split(i, axis));
}

namespace {

// Pattern list with a membership flag per brick; splitting keeps the flag.
struct FlaggedPattern {
  std::vector<Brick> bricks;
  std::vector<bool> flag;

  void split(std::size_t i) {
    auto [lo, hi] = cantor::split_brick(bricks[i], 0);
    bricks[i] = std::move(lo);
    bricks.insert(bricks.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(hi));
    flag.insert(flag.begin() + static_cast<std::ptrdiff_t>(i) + 1, flag[i]);
  }

  // Lexicographically first brick without the flag.
  std::size_t first_unflagged() const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < bricks.size(); ++i)
      if (!flag[i] && (!best || bricks[i] < bricks[*best]))
        best = i;
    if (!best)
      throw std::logic_error("transitivity_map: no brick available for balancing");
    return *best;
  }
};

} // namespace

Element transitivity_map(const NumberedPattern& pattern, std::span<const std::size_t> K,
                         const Brick& U) {
  const std::size_t dim = pattern.dim();
  if (U.dim() != dim)
    throw std::invalid_argument("transitivity_map: U has the wrong dimension");
  if (U.depth() == 0)
    throw std::invalid_argument("transitivity_map: U must not be the whole cube");
  std::vector<bool> in_k(pattern.size(), false);
  for (auto k : K) {
    if (k >= pattern.size())
      throw std::invalid_argument("transitivity_map: brick index out of range");
    in_k[k] = true;
  }
  const auto k_count = static_cast<std::size_t>(std::count(in_k.begin(), in_k.end(), true));
  if (k_count == 0)
    throw std::invalid_argument("transitivity_map: K is empty");
  if (k_count == pattern.size())
    throw std::invalid_argument("transitivity_map: K must be a proper subset of the pattern");
  if (auto v = validate_partition(pattern); !v)
    throw std::invalid_argument("transitivity_map: " + v.reason);

  // Pattern isolating U as one of its bricks.
  NumberedPattern iso = NumberedPattern::trivial(dim);
  std::size_t at = 0;
  for (std::size_t axis = 0; axis < dim; ++axis)
    for (std::size_t l = 0; l < U[axis].size(); ++l) {
      iso = iso.split(at, axis);
      if (U[axis][l] == '1')
        ++at;
    }

  std::deque<Brick> pieces{U};
  while (pieces.size() < k_count) {
    auto [lo, hi] = cantor::split_brick(pieces.front(), 0);
    pieces.pop_front();
    pieces.push_back(std::move(lo));
    pieces.push_back(std::move(hi));
  }

  FlaggedPattern dom{pattern.bricks(), in_k};
  FlaggedPattern ran;
  for (std::size_t i = 0; i < iso.size(); ++i) {
    if (i == at) {
      for (auto& p : pieces) {
        ran.bricks.push_back(p);
        ran.flag.push_back(true);
      }
    } else {
      ran.bricks.push_back(iso[i]);
      ran.flag.push_back(false);
    }
  }
  while (dom.bricks.size() < ran.bricks.size())
    dom.split(dom.first_unflagged());
  while (ran.bricks.size() < dom.bricks.size())
    ran.split(ran.first_unflagged());

  std::vector<Brick> out_dom, out_ran;
  for (bool flagged : {true, false}) {
    for (std::size_t i = 0; i < dom.bricks.size(); ++i)
      if (dom.flag[i] == flagged)
        out_dom.push_back(dom.bricks[i]);
    for (std::size_t i = 0; i < ran.bricks.size(); ++i)
      if (ran.flag[i] == flagged)
        out_ran.push_back(ran.bricks[i]);
  }
  return make_element(NumberedPattern(dim, std::move(out_dom)), NumberedPattern(dim, std::move(out_ran)));
}

} // namespace thompson::nv
