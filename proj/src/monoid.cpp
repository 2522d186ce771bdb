#include "thompson/monoid.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace thompson::pi {

// ---------------------------------------------------------------- words

std::string Letter::to_string() const {
  char c = kind == LetterKind::V ? 'v' : kind == LetterKind::H ? 'h' : 's';
  return c + std::to_string(index);
}

MonoidWord MonoidWord::parse(std::string_view text) {
  MonoidWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2)
      throw ParseError("bad monoid letter \"" + tok + "\"");
    LetterKind kind;
    switch (tok[0]) {
    case 'v': kind = LetterKind::V; break;
    case 'h': kind = LetterKind::H; break;
    case 's': kind = LetterKind::S; break;
    default: throw ParseError("bad monoid letter \"" + tok + "\"");
    }
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad monoid letter index in \"" + tok + "\"");
    w.letters.push_back({kind, index});
  }
  return w;
}

std::string MonoidWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i)
      s += ' ';
    s += letters[i].to_string();
  }
  return s;
}

MonoidWord MonoidWord::operator+(const MonoidWord& rhs) const {
  MonoidWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

// ---------------------------------------------------------------- sequences

std::size_t PatternSequence::explicit_rectangles() const {
  std::size_t n = 0;
  for (const auto& sq : squares_)
    n += sq.size();
  return n;
}

std::size_t PatternSequence::offset() const { return explicit_rectangles() - squares_.size(); }

std::vector<NumberedBrick> PatternSequence::square(std::size_t s) const {
  if (s < squares_.size())
    return squares_[s];
  return {{Brick::whole(2), s + offset()}};
}

NumberedPattern PatternSequence::square_pattern(std::size_t s) const {
  auto rects = square(s);
  std::sort(rects.begin(), rects.end(),
            [](const auto& a, const auto& b) { return a.number < b.number; });
  for (std::size_t i = 1; i < rects.size(); ++i)
    if (rects[i].number != rects[0].number + i)
      throw std::invalid_argument("square " + std::to_string(s) + " is not consecutively numbered");
  std::vector<Brick> bricks;
  for (auto& r : rects)
    bricks.push_back(std::move(r.brick));
  return NumberedPattern(2, std::move(bricks));
}

PatternSequence PatternSequence::from_square0(const NumberedPattern& p) {
  if (p.dim() != 2)
    throw std::invalid_argument("pattern sequences are 2-dimensional");
  PatternSequence s;
  std::vector<NumberedBrick> sq;
  for (std::size_t i = 0; i < p.size(); ++i)
    sq.push_back({p[i], i});
  std::sort(sq.begin(), sq.end());
  s.squares_.push_back(std::move(sq));
  s.canonicalize();
  return s;
}

void PatternSequence::materialize(std::size_t square) {
  const std::size_t off = offset();
  while (squares_.size() <= square)
    squares_.push_back({{Brick::whole(2), squares_.size() + off}});
}

std::pair<std::size_t, std::size_t> PatternSequence::locate(std::size_t number) {
  for (std::size_t s = 0; s < squares_.size(); ++s)
    for (std::size_t r = 0; r < squares_[s].size(); ++r)
      if (squares_[s][r].number == number)
        return {s, r};
  const std::size_t s = number - offset();
  materialize(s);
  return {s, 0};
}

void PatternSequence::split(std::size_t number, std::size_t axis) {
  auto [s, r] = locate(number);
  for (auto& sq : squares_)
    for (auto& rect : sq)
      if (rect.number > number)
        ++rect.number;
  auto [lo, hi] = cantor::split_brick(squares_[s][r].brick, axis);
  auto& sq = squares_[s];
  sq.erase(sq.begin() + static_cast<std::ptrdiff_t>(r));
  sq.push_back({std::move(lo), number});
  sq.push_back({std::move(hi), number + 1});
  std::sort(sq.begin(), sq.end());
}

void PatternSequence::exchange(std::size_t number) {
  auto [s0, r0] = locate(number);
  auto [s1, r1] = locate(number + 1);
  squares_[s0][r0].number = number + 1;
  squares_[s1][r1].number = number;
}

void PatternSequence::canonicalize() {
  while (!squares_.empty()) {
    const auto& last = squares_.back();
    const std::size_t s = squares_.size() - 1;
    if (last.size() != 1 || last[0].brick.depth() != 0 || last[0].number != s + offset())
      break;
    squares_.pop_back();
  }
}

PatternSequence PatternSequence::then(Letter x) const {
  PatternSequence out = *this;
  switch (x.kind) {
  case LetterKind::V: out.split(x.index, 0); break;
  case LetterKind::H: out.split(x.index, 1); break;
  case LetterKind::S: out.exchange(x.index); break;
  }
  out.canonicalize();
  return out;
}

std::string PatternSequence::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < squares_.size(); ++s) {
    auto rects = squares_[s];
    std::sort(rects.begin(), rects.end(),
              [](const auto& a, const auto& b) { return a.number < b.number; });
    out += '[' + std::to_string(s) + ':';
    for (std::size_t r = 0; r < rects.size(); ++r) {
      if (r)
        out += '|';
      out += rects[r].brick.to_string() + '#' + std::to_string(rects[r].number);
    }
    out += "] ";
  }
  out += "tail=" + std::to_string(tail_start()) + ",offset=" + std::to_string(offset());
  return out;
}

PatternSequence PatternSequence::parse(std::string_view text) {
  PatternSequence seq;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
      ++pos;
  };
  auto read_number = [&](std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw ParseError("expected " + std::string(what) + " in pattern sequence");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  skip_ws();
  while (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::size_t s = read_number("square index");
    if (s != seq.squares_.size())
      throw ParseError("squares must be listed in order starting at 0");
    if (pos >= text.size() || text[pos] != ':')
      throw ParseError("expected ':' after square index");
    ++pos;
    auto close = text.find(']', pos);
    if (close == std::string_view::npos)
      throw ParseError("unterminated square");
    std::vector<NumberedBrick> sq;
    std::string_view body = text.substr(pos, close - pos);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto bar = body.find('|', start);
      auto item = body.substr(start, bar == std::string_view::npos ? bar : bar - start);
      auto hash = item.find('#');
      if (hash == std::string_view::npos)
        throw ParseError("rectangle needs a #number");
      std::size_t number = 0;
      auto digits = item.substr(hash + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), number);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("bad rectangle number");
      Brick b = Brick::parse(item.substr(0, hash));
      if (b.dim() != 2)
        throw ParseError("pattern sequence rectangles are 2-dimensional");
      sq.push_back({std::move(b), number});
      if (bar == std::string_view::npos)
        break;
      start = bar + 1;
    }
    std::sort(sq.begin(), sq.end());
    std::vector<Brick> bricks;
    for (const auto& r : sq)
      bricks.push_back(r.brick);
    if (!validate_partition(NumberedPattern(2, bricks)))
      throw ParseError("square " + std::to_string(s) + " is not a partition");
    seq.squares_.push_back(std::move(sq));
    pos = close + 1;
    skip_ws();
  }
  if (text.substr(pos, 5) != "tail=")
    throw ParseError("expected tail=<k>,offset=<j>");
  pos += 5;
  std::size_t tail = read_number("tail");
  if (text.substr(pos, 8) != ",offset=")
    throw ParseError("expected ,offset=<j>");
  pos += 8;
  std::size_t off = read_number("offset");
  if (tail != seq.squares_.size() || off != seq.offset())
    throw ParseError("tail/offset inconsistent with the listed squares");
  std::vector<std::size_t> numbers;
  for (const auto& sq : seq.squares_)
    for (const auto& r : sq)
      numbers.push_back(r.number);
  std::sort(numbers.begin(), numbers.end());
  for (std::size_t i = 0; i < numbers.size(); ++i)
    if (numbers[i] != i)
      throw ParseError("listed rectangles must carry the numbers 0.." +
                       std::to_string(numbers.size() - 1));
  seq.canonicalize();
  return seq;
}

PatternSequence eval_word(const MonoidWord& w) {
  PatternSequence s;
  for (const auto& x : w.letters)
    s = s.then(x);
  return s;
}

PatternSequence multiply(const PatternSequence& p, const PatternSequence& q) {
  const std::size_t off_p = p.offset();
  std::size_t count = p.tail_start();
  if (q.tail_start() > off_p)
    count = std::max(count, q.tail_start() - off_p);
  PatternSequence out;
  out.squares_.resize(count);
  for (std::size_t s = 0; s < count; ++s) {
    auto& sq = out.squares_[s];
    for (const auto& rect : p.square(s))
      for (const auto& inner : q.square(rect.number))
        sq.push_back({rect.brick + inner.brick, inner.number});
    std::sort(sq.begin(), sq.end());
  }
  out.canonicalize();
  return out;
}

bool check_monoid_relation(const MonoidWord& lhs, const MonoidWord& rhs) {
  return eval_word(lhs) == eval_word(rhs);
}

std::vector<MonoidRelation> monoid_relation_instances(std::size_t max_index) {
  std::vector<MonoidRelation> out;
  auto idx = [](std::size_t i, std::size_t j) {
    return "i=" + std::to_string(i) + ",j=" + std::to_string(j);
  };
  const std::array<LetterKind, 2> splits{LetterKind::V, LetterKind::H};
  auto word = [](std::initializer_list<Letter> l) { return MonoidWord{std::vector<Letter>(l)}; };
  auto kind_name = [](LetterKind k) { return k == LetterKind::V ? std::string("v") : std::string("h"); };

  for (std::size_t j = 0; j <= max_index; ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (auto x : splits)
        for (auto y : splits)
          out.push_back({"1", idx(i, j) + ",x=" + kind_name(x) + ",y=" + kind_name(y),
                         word({{x, j}, {y, i}}), word({{y, i}, {x, j + 1}})});

  for (std::size_t i = 0; i <= max_index; ++i)
    out.push_back({"2a", "i=" + std::to_string(i), word({Letter::s(i), Letter::s(i)}), MonoidWord{}});
  for (std::size_t j = 0; j <= max_index; ++j)
    for (std::size_t i = 0; i + 2 <= j; ++i)
      out.push_back({"2b", idx(i, j), word({Letter::s(i), Letter::s(j)}), word({Letter::s(j), Letter::s(i)})});
  for (std::size_t i = 0; i <= max_index; ++i)
    out.push_back({"2c", "i=" + std::to_string(i), word({Letter::s(i), Letter::s(i + 1), Letter::s(i)}),
                   word({Letter::s(i + 1), Letter::s(i), Letter::s(i + 1)})});

  for (std::size_t j = 0; j <= max_index; ++j)
    for (std::size_t i = 0; i <= max_index; ++i)
      for (auto x : splits) {
        MonoidWord rhs;
        if (i < j)
          rhs = word({{x, i}, Letter::s(j + 1)});
        else if (i == j)
          rhs = word({{x, j + 1}, Letter::s(j), Letter::s(j + 1)});
        else if (i == j + 1)
          rhs = word({{x, j}, Letter::s(j + 1), Letter::s(j)});
        else
          rhs = word({{x, i}, Letter::s(j)});
        out.push_back({"3", idx(i, j) + ",x=" + kind_name(x), word({Letter::s(j), {x, i}}), rhs});
      }

  for (std::size_t i = 0; i <= max_index; ++i)
    out.push_back({"4", "i=" + std::to_string(i), word({Letter::v(i), Letter::h(i + 1), Letter::h(i)}),
                   word({Letter::h(i), Letter::v(i + 1), Letter::v(i), Letter::s(i + 1)})});
  return out;
}

bool is_pq_form(const MonoidWord& w) {
  bool seen_s = false;
  for (const auto& x : w.letters) {
    if (x.is_split() && seen_s)
      return false;
    seen_s = seen_s || !x.is_split();
  }
  return true;
}

MonoidWord rewrite_to_pq(const MonoidWord& w) {
  std::vector<Letter> cur = w.letters;
  for (;;) {
    std::size_t k = 1;
    while (k < cur.size() && !(!cur[k - 1].is_split() && cur[k].is_split()))
      ++k;
    if (k >= cur.size())
      break;
    const std::size_t j = cur[k - 1].index;
    const Letter x = cur[k];
    const std::size_t i = x.index;
    std::vector<Letter> repl;
    if (i < j)
      repl = {x, Letter::s(j + 1)};
    else if (i == j)
      repl = {Letter{x.kind, j + 1}, Letter::s(j), Letter::s(j + 1)};
    else if (i == j + 1)
      repl = {Letter{x.kind, j}, Letter::s(j + 1), Letter::s(j)};
    else
      repl = {x, Letter::s(j)};
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(k - 1),
              cur.begin() + static_cast<std::ptrdiff_t>(k + 1));
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(k - 1), repl.begin(), repl.end());
  }
  return MonoidWord{std::move(cur)};
}

bool in_pi0(const PatternSequence& s) { return s.tail_start() <= 1; }

MonoidWord pattern_to_pq(const NumberedPattern& p) {
  if (p.dim() != 2)
    throw std::invalid_argument("pattern_to_pq: monoid words describe 2-dimensional patterns");
  auto g = cantor::guillotine_decompose(p);
  if (!g)
    throw std::invalid_argument("pattern_to_pq: pattern has no guillotine decomposition");
  const auto& nodes = g.tree->nodes;

  MonoidWord w;
  std::vector<std::size_t> regions{0};
  for (;;) {
    auto it = std::find_if(regions.begin(), regions.end(),
                           [&](std::size_t n) { return nodes[n].axis.has_value(); });
    if (it == regions.end())
      break;
    const auto pos = static_cast<std::size_t>(it - regions.begin());
    const auto& node = nodes[*it];
    w.letters.push_back(*node.axis == 0 ? Letter::v(pos) : Letter::h(pos));
    const std::size_t upper = node.upper;
    *it = node.lower;
    regions.insert(regions.begin() + static_cast<std::ptrdiff_t>(pos) + 1, upper);
  }

  std::vector<std::size_t> target;
  for (auto n : regions)
    target.push_back(*nodes[n].brick);
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < target.size(); ++i)
      if (target[i] > target[i + 1]) {
        std::swap(target[i], target[i + 1]);
        w.letters.push_back(Letter::s(i));
        swapped = true;
      }
  }
  return w;
}

} // namespace thompson::pi
