#include "thompson/cantor.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace thompson::cantor {

namespace {

std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

} // namespace

// ---------------------------------------------------------------- Word

Word::Word(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw ParseError("binary word contains '" + std::string(1, c) + "'");
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  if (text == "e")
    return Word();
  if (text.empty())
    throw ParseError("empty word must be spelled \"e\"");
  return Word(std::string(text));
}

bool Word::is_prefix_of(const Word& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

bool Word::disjoint_from(const Word& other) const {
  return !is_prefix_of(other) && !other.is_prefix_of(*this);
}

Word Word::reversed() const { return Word(std::string(bits_.rbegin(), bits_.rend()), trusted{}); }

Word Word::with_last_flipped() const {
  std::string b = bits_;
  b.back() = b.back() == '0' ? '1' : '0';
  return Word(std::move(b), trusted{});
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(Integer numerator, unsigned exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && (numerator_ & 1) == 0) {
    numerator_ >>= 1;
    --exponent_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
  unsigned e = std::max(exponent_, rhs.exponent_);
  Integer a = numerator_ << (e - exponent_);
  Integer b = rhs.numerator_ << (e - rhs.exponent_);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const {
  unsigned e = std::max(exponent_, rhs.exponent_);
  Integer a = numerator_ << (e - exponent_);
  Integer b = rhs.numerator_ << (e - rhs.exponent_);
  return Dyadic(a - b, e);
}

bool Dyadic::operator==(const Dyadic& rhs) const {
  return numerator_ == rhs.numerator_ && exponent_ == rhs.exponent_;
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  os << numerator_;
  if (exponent_ > 0)
    os << "/2^" << exponent_;
  return os.str();
}

// ---------------------------------------------------------------- Brick

Brick::Brick(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty())
    throw std::invalid_argument("brick dimension must be positive");
}

Brick Brick::parse(std::string_view text) {
  std::vector<Word> words;
  for (auto part : split_on(trim(text), ','))
    words.push_back(Word::parse(part));
  return Brick(std::move(words));
}

std::size_t Brick::depth() const {
  std::size_t d = 0;
  for (const auto& w : words_)
    d += w.size();
  return d;
}

bool Brick::contains(const Brick& inner) const {
  for (std::size_t j = 0; j < words_.size(); ++j)
    if (!words_[j].is_prefix_of(inner.words_[j]))
      return false;
  return true;
}

bool Brick::disjoint_from(const Brick& other) const {
  for (std::size_t j = 0; j < words_.size(); ++j)
    if (words_[j].disjoint_from(other.words_[j]))
      return true;
  return false;
}

std::optional<Brick> Brick::intersect(const Brick& other) const {
  std::vector<Word> out;
  out.reserve(words_.size());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    const Word& a = words_[j];
    const Word& b = other.words_[j];
    if (a.is_prefix_of(b))
      out.push_back(b);
    else if (b.is_prefix_of(a))
      out.push_back(a);
    else
      return std::nullopt;
  }
  return Brick(std::move(out));
}

Brick Brick::operator+(const Brick& inner) const {
  std::vector<Word> out;
  out.reserve(words_.size());
  for (std::size_t j = 0; j < words_.size(); ++j)
    out.push_back(words_[j] + inner.words_[j]);
  return Brick(std::move(out));
}

Brick Brick::relative(const Brick& inner) const {
  std::vector<Word> out;
  out.reserve(words_.size());
  for (std::size_t j = 0; j < words_.size(); ++j)
    out.push_back(inner.words_[j].suffix_from(words_[j].size()));
  return Brick(std::move(out));
}

Brick Brick::child(std::size_t axis, char bit) const {
  auto words = words_;
  words[axis] = words[axis] + bit;
  return Brick(std::move(words));
}

std::string Brick::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < words_.size(); ++j) {
    if (j)
      s += ',';
    s += words_[j].to_string();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Brick& b) { return os << b.to_string(); }

std::pair<Brick, Brick> split_brick(const Brick& b, std::size_t axis) {
  if (axis >= b.dim())
    throw std::out_of_range("split axis " + std::to_string(axis) + " out of range for dim " +
                            std::to_string(b.dim()));
  return {b.child(axis, '0'), b.child(axis, '1')};
}

// ---------------------------------------------------------------- NumberedPattern

NumberedPattern::NumberedPattern(std::size_t dim, std::vector<Brick> bricks)
    : dim_(dim), bricks_(std::move(bricks)) {
  for (const auto& b : bricks_)
    if (b.dim() != dim_)
      throw std::invalid_argument("pattern bricks must share dimension " + std::to_string(dim_));
}

NumberedPattern NumberedPattern::parse(std::string_view text) {
  std::vector<Brick> bricks;
  for (auto part : split_on(trim(text), '|'))
    bricks.push_back(Brick::parse(part));
  std::size_t dim = bricks.front().dim();
  return NumberedPattern(dim, std::move(bricks));
}

NumberedPattern NumberedPattern::split(std::size_t i, std::size_t axis) const {
  auto [lo, hi] = split_brick(bricks_.at(i), axis);
  auto bricks = bricks_;
  bricks[i] = std::move(lo);
  bricks.insert(bricks.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(hi));
  return NumberedPattern(dim_, std::move(bricks));
}

std::optional<std::size_t> NumberedPattern::find_containing(const Brick& inner) const {
  for (std::size_t i = 0; i < bricks_.size(); ++i)
    if (bricks_[i].contains(inner))
      return i;
  return std::nullopt;
}

std::string NumberedPattern::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bricks_.size(); ++i) {
    if (i)
      s += '|';
    s += bricks_[i].to_string();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const NumberedPattern& p) { return os << p.to_string(); }

PartitionVerdict validate_partition(const NumberedPattern& p) {
  PartitionVerdict v;
  if (p.size() == 0) {
    v.reason = "pattern has no bricks";
    v.deficit = Dyadic::one();
    return v;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p[i].disjoint_from(p[j])) {
        v.overlap = std::pair{i, j};
        v.reason = "bricks " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
        return v;
      }
  Dyadic total;
  for (const auto& b : p.bricks())
    total = total + b.measure();
  Dyadic deficit = Dyadic::one() - total;
  if (!deficit.is_zero()) {
    v.deficit = deficit;
    v.reason = "bricks do not cover the cube, measure deficit " + deficit.to_string();
    return v;
  }
  v.valid = true;
  return v;
}

std::vector<RefinedBrick> common_refinement(const NumberedPattern& p, const NumberedPattern& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("common_refinement: dimension mismatch");
  std::vector<RefinedBrick> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (auto b = p[i].intersect(q[j]))
        out.push_back({std::move(*b), i, j});
  return out;
}

// ---------------------------------------------------------------- guillotine

std::size_t SplitTree::split_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.axis.has_value(); }));
}

std::vector<Brick> SplitTree::leaves() const {
  std::vector<Brick> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    const Node& n = nodes[i];
    if (n.axis) {
      stack.push_back(n.upper);
      stack.push_back(n.lower);
    } else {
      out.push_back(n.region);
    }
  }
  return out;
}

namespace {

bool decompose_region(const NumberedPattern& p, std::size_t node, std::vector<std::size_t> members,
                      SplitTree& tree, std::optional<Brick>& stuck) {
  const Brick region = tree.nodes[node].region;
  if (members.size() == 1 && p[members[0]] == region) {
    tree.nodes[node].brick = members[0];
    return true;
  }
  for (std::size_t axis = 0; axis < region.dim(); ++axis) {
    const std::size_t cut = region[axis].size();
    bool separates = std::all_of(members.begin(), members.end(),
                                 [&](std::size_t m) { return p[m][axis].size() > cut; });
    if (!separates)
      continue;
    std::vector<std::size_t> lower, upper;
    for (auto m : members)
      (p[m][axis][cut] == '0' ? lower : upper).push_back(m);
    if (lower.empty() || upper.empty())
      break; // a half with no bricks: not a partition of the region
    auto [lo, hi] = split_brick(region, axis);
    std::size_t lo_i = tree.nodes.size();
    tree.nodes.push_back({std::move(lo), std::nullopt, 0, 0, std::nullopt});
    std::size_t hi_i = tree.nodes.size();
    tree.nodes.push_back({std::move(hi), std::nullopt, 0, 0, std::nullopt});
    tree.nodes[node].axis = axis;
    tree.nodes[node].lower = lo_i;
    tree.nodes[node].upper = hi_i;
    return decompose_region(p, lo_i, std::move(lower), tree, stuck) &&
           decompose_region(p, hi_i, std::move(upper), tree, stuck);
  }
  stuck = region;
  return false;
}

} // namespace

GuillotineResult guillotine_decompose(const NumberedPattern& p) {
  GuillotineResult result;
  if (p.size() == 0)
    return result;
  SplitTree tree;
  tree.nodes.push_back({Brick::whole(p.dim()), std::nullopt, 0, 0, std::nullopt});
  std::vector<std::size_t> members(p.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    members[i] = i;
  if (decompose_region(p, 0, std::move(members), tree, result.stuck_region))
    result.tree = std::move(tree);
  return result;
}

// ---------------------------------------------------------------- PeriodicWord

PeriodicWord::PeriodicWord(Word pre, Word period) : pre_(std::move(pre)), period_(std::move(period)) {
  if (period_.empty())
    throw std::invalid_argument("period of an eventually periodic word must be nonempty");
  canonicalize();
}

void PeriodicWord::canonicalize() {
  const std::string& p = period_.bits();
  const std::size_t n = p.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i)
      repeats = p[i] == p[i - d];
    if (repeats) {
      period_ = period_.prefix(d);
      break;
    }
  }
  std::string pre = pre_.bits();
  std::string per = period_.bits();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  pre_ = Word(std::move(pre));
  period_ = Word(std::move(per));
}

PeriodicWord PeriodicWord::parse(std::string_view text) {
  text = trim(text);
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      close + 1 != text.size())
    throw ParseError("periodic word must look like pre(period): \"" + std::string(text) + "\"");
  auto pre_text = text.substr(0, open);
  Word pre = pre_text.empty() ? Word() : Word::parse(pre_text);
  Word period = Word::parse(text.substr(open + 1, close - open - 1));
  if (period.empty())
    throw ParseError("period must be nonempty");
  return PeriodicWord(std::move(pre), std::move(period));
}

char PeriodicWord::bit(std::size_t i) const {
  if (i < pre_.size())
    return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

Word PeriodicWord::expand(std::size_t length) const {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i)
    s[i] = bit(i);
  return Word(std::move(s));
}

bool PeriodicWord::has_prefix(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (bit(i) != w[i])
      return false;
  return true;
}

PeriodicWord PeriodicWord::strip(const Word& w) const {
  if (w.size() <= pre_.size())
    return PeriodicWord(pre_.suffix_from(w.size()), period_);
  std::size_t k = (w.size() - pre_.size()) % period_.size();
  return PeriodicWord(Word(), period_.suffix_from(k) + period_.prefix(k));
}

PeriodicWord PeriodicWord::prepend(const Word& w) const { return PeriodicWord(w + pre_, period_); }

std::string PeriodicWord::to_string() const { return pre_.bits() + "(" + period_.bits() + ")"; }

// ---------------------------------------------------------------- Point

Point Point::parse(std::string_view text) {
  std::vector<PeriodicWord> coords;
  for (auto part : split_on(trim(text), ';'))
    coords.push_back(PeriodicWord::parse(part));
  return Point(std::move(coords));
}

std::string Point::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j)
      s += ';';
    s += coords_[j].to_string();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Point& x) { return os << x.to_string(); }

bool point_in_brick(const Point& x, const Brick& b) {
  if (x.dim() != b.dim())
    throw std::invalid_argument("point_in_brick: dimension mismatch");
  for (std::size_t j = 0; j < b.dim(); ++j)
    if (!x[j].has_prefix(b[j]))
      return false;
  return true;
}

Point apply_prefix_replacement(const Point& x, const Brick& from, const Brick& to) {
  if (!point_in_brick(x, from))
    throw std::invalid_argument("point " + x.to_string() + " is not in brick " + from.to_string());
  std::vector<PeriodicWord> coords;
  coords.reserve(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j)
    coords.push_back(x[j].strip(from[j]).prepend(to[j]));
  return Point(std::move(coords));
}

} // namespace thompson::cantor
