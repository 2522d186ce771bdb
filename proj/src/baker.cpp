#include "thompson/baker.hpp"

#include <algorithm>
#include <stdexcept>

namespace thompson::baker {

TwoSidedPoint TwoSidedPoint::parse(std::string_view text) {
  // (λ)a.b(ρ)
  const auto fail = [&](const char* what) {
    throw ParseError("two-sided point '" + std::string(text) + "': " + what);
  };
  if (text.empty() || text.front() != '(')
    fail("must start with '('");
  const auto close = text.find(')');
  const auto dot = text.find('.');
  const auto open = text.rfind('(');
  if (close == std::string_view::npos || dot == std::string_view::npos || open == 0 || close > dot ||
      open < dot || text.back() != ')')
    fail("expected (lambda)a.b(rho)");
  const Word lambda = Word::parse(text.substr(1, close - 1));
  const Word a = Word::parse(text.substr(close + 1, dot - close - 1));
  const Word b = Word::parse(text.substr(dot + 1, open - dot - 1));
  const Word rho = Word::parse(text.substr(open + 1, text.size() - open - 2));
  if (lambda.empty() || rho.empty())
    fail("periods must be nonempty");
  return {PeriodicWord(a.reversed(), lambda.reversed()), PeriodicWord(b, rho)};
}

TwoSidedPoint TwoSidedPoint::periodic(const Word& period) {
  if (period.empty())
    throw std::invalid_argument("periodic point needs a nonempty period");
  return {PeriodicWord(Word(), period.reversed()), PeriodicWord(Word(), period)};
}

char TwoSidedPoint::at(long i) const {
  return i >= 0 ? right_.bit(static_cast<std::size_t>(i)) : left_.bit(static_cast<std::size_t>(-i - 1));
}

std::string TwoSidedPoint::to_string() const {
  return "(" + left_.period().reversed().to_string() + ")" + left_.pre().reversed().to_string() + "." +
         right_.pre().to_string() + "(" + right_.period().to_string() + ")";
}

TwoSidedPoint shift(const TwoSidedPoint& x) {
  const Word head(std::string(1, x.right().bit(0)));
  return {x.left().prepend(head), x.right().strip(head)};
}

cantor::Point to_point(const TwoSidedPoint& x) { return cantor::Point({x.right(), x.left()}); }

TwoSidedPoint from_point(const cantor::Point& p) {
  if (p.dim() != 2)
    throw std::invalid_argument("the baker's map acts on 2-dimensional points");
  return {p[1], p[0]};
}

std::optional<std::size_t> orbit_size(const TwoSidedPoint& x) {
  if (!x.left().pre().empty() || !x.right().pre().empty())
    return std::nullopt;
  if (x.left().period().reversed() != x.right().period())
    return std::nullopt;
  return x.right().period().size();
}

namespace {

bool is_least_aperiodic_rotation(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    const std::string rot = w.substr(k) + w.substr(0, k);
    if (rot <= w)
      return false; // equal means a proper period, smaller means not least
  }
  return true;
}

std::string bits_of(std::uint64_t v, std::size_t p) {
  std::string w(p, '0');
  for (std::size_t i = 0; i < p; ++i)
    if (v >> (p - 1 - i) & 1)
      w[i] = '1';
  return w;
}

void scan(std::size_t p, std::uint64_t begin, std::uint64_t end, std::vector<Word>& out) {
  for (std::uint64_t v = begin; v < end; ++v) {
    std::string w = bits_of(v, p);
    if (is_least_aperiodic_rotation(w))
      out.emplace_back(std::move(w));
  }
}

void check_length(std::size_t p) {
  if (p == 0)
    throw std::invalid_argument("orbit size must be at least 1");
  if (p > 40)
    throw std::invalid_argument("orbit enumeration is brute force; sizes above 40 are out of reach");
}

} // namespace

std::vector<Word> enumerate_periodic_orbits_serial(std::size_t p) {
  check_length(p);
  std::vector<Word> out;
  scan(p, 0, std::uint64_t{1} << p, out);
  return out;
}

std::vector<Word> enumerate_periodic_orbits(std::size_t p) {
  check_length(p);
  const std::size_t lead = std::min<std::size_t>(p, 6);
  const long long blocks = 1LL << lead;
  const std::uint64_t block_size = std::uint64_t{1} << (p - lead);
  std::vector<std::vector<Word>> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic)
  for (long long b = 0; b < blocks; ++b)
    scan(p, static_cast<std::uint64_t>(b) * block_size, static_cast<std::uint64_t>(b + 1) * block_size,
         parts[static_cast<std::size_t>(b)]);
  std::vector<Word> out;
  for (auto& part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

} // namespace thompson::baker
