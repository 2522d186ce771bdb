#include "thompson/sigma.hpp"

#include <cctype>
#include <stdexcept>

namespace thompson::sigma {

using pi::Letter;
using pi::MonoidWord;

SigmaLetter A(std::size_t i) { return {Base::A, i, 1}; }
SigmaLetter B(std::size_t i) { return {Base::B, i, 1}; }
SigmaLetter C(std::size_t i) { return {Base::C, i, 1}; }
SigmaLetter Pi(std::size_t i) { return {Base::Pi, i, 1}; }
SigmaLetter PiBar(std::size_t i) { return {Base::PiBar, i, 1}; }

std::string SigmaLetter::to_string() const {
  static constexpr char names[] = {'A', 'B', 'C', 'p', 'q'};
  std::string s = names[static_cast<int>(base)] + std::to_string(index);
  if (exponent < 0)
    s += '\'';
  return s;
}

SigmaWord SigmaWord::parse(std::string_view text) {
  SigmaWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    Base base;
    switch (c) {
    case 'A': base = Base::A; break;
    case 'B': base = Base::B; break;
    case 'C': base = Base::C; break;
    case 'p': base = Base::Pi; break;
    case 'q': base = Base::PiBar; break;
    default: throw ParseError("unexpected character '" + std::string(1, c) + "' in Σ word");
    }
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("Σ letter '" + std::string(1, c) + "' needs an index");
    std::size_t index = std::stoul(std::string(text.substr(start, pos - start)));
    int exponent = 1;
    while (pos < text.size() && text[pos] == '\'') {
      exponent = -exponent;
      ++pos;
    }
    w.letters.push_back({base, index, exponent});
  }
  return w;
}

std::string SigmaWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i)
      s += ' ';
    s += letters[i].to_string();
  }
  return s;
}

SigmaWord SigmaWord::inverse() const {
  SigmaWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

SigmaWord SigmaWord::operator+(const SigmaWord& rhs) const {
  SigmaWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

namespace {

MonoidWord v0_power(std::size_t n) {
  MonoidWord w;
  w.letters.assign(n, Letter::v(0));
  return w;
}

MonoidWord with(MonoidWord w, Letter x) {
  w.letters.push_back(x);
  return w;
}

} // namespace

std::pair<MonoidWord, MonoidWord> defining_pair(Base base, std::size_t i) {
  switch (base) {
  case Base::A: return {with(v0_power(i + 1), Letter::v(1)), v0_power(i + 2)};
  case Base::B: return {with(v0_power(i + 1), Letter::h(1)), v0_power(i + 2)};
  case Base::C: return {with(v0_power(i), Letter::h(0)), v0_power(i + 1)};
  case Base::Pi: return {with(v0_power(i + 2), Letter::s(1)), v0_power(i + 2)};
  case Base::PiBar: return {with(v0_power(i + 1), Letter::s(0)), v0_power(i + 1)};
  }
  throw std::logic_error("unknown Σ base");
}

nv::Element element_of_pair(const MonoidWord& a, const MonoidWord& b) {
  auto sa = pi::eval_word(a);
  auto sb = pi::eval_word(b);
  if (!pi::in_pi0(sa) || !pi::in_pi0(sb))
    throw std::invalid_argument("element_of_pair: both words must lie in Π₀");
  return nv::make_element(sb.square_pattern(0), sa.square_pattern(0));
}

nv::Element generator(const SigmaLetter& x) {
  auto [a, b] = defining_pair(x.base, x.index);
  auto f = element_of_pair(a, b);
  return x.exponent < 0 ? nv::invert(f) : f;
}

nv::Element eval_sigma(const SigmaWord& w) {
  nv::Element acc = nv::Element::identity(2);
  for (const auto& x : w.letters)
    acc = nv::reduce(nv::compose(acc, generator(x)));
  return acc;
}

SigmaWord word_over_v0_power(const MonoidWord& w) {
  if (!pi::is_pq_form(w))
    throw std::invalid_argument("word_over_v0_power: word is not in p·q form");
  std::vector<Letter> p, q;
  for (const auto& x : w.letters)
    (x.is_split() ? p : q).push_back(x);
  const std::size_t k = p.size();
  SigmaWord out;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t m = p[j].index;
    if (m > j)
      throw std::invalid_argument("word_over_v0_power: letter " + p[j].to_string() +
                                  " at position " + std::to_string(j) + " leaves square 0");
    const bool vertical = p[j].kind == pi::LetterKind::V;
    if (m > 0)
      out.letters.push_back(vertical ? A(j - m) : B(j - m));
    else if (!vertical)
      out.letters.push_back(C(j));
  }
  for (const auto& s : q) {
    if (s.index >= k)
      throw std::invalid_argument("word_over_v0_power: " + s.to_string() +
                                  " permutes rectangles outside square 0");
    out.letters.push_back(s.index == 0 ? PiBar(k - 1) : Pi(k - 1 - s.index));
  }
  return out;
}

SigmaWord decompose(const nv::Element& f) {
  if (f.dim() != 2)
    throw std::invalid_argument("decompose: Σ words describe elements of 2V");
  auto range_word = pi::pattern_to_pq(f.range());
  auto domain_word = pi::pattern_to_pq(f.domain());
  return word_over_v0_power(range_word) + word_over_v0_power(domain_word).inverse();
}

} // namespace thompson::sigma
