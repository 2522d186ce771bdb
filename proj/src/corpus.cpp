#include "thompson/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace thompson::corpus {

namespace {

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

cantor::Word random_word(Rng& rng, std::size_t len) {
  std::string w(len, '0');
  for (auto& c : w)
    c = static_cast<char>('0' + below(rng, 2));
  return cantor::Word(w);
}

} // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("THOMPSON_NV_SEED");
  if (!s || !*s)
    return fallback;
  char* end = nullptr;
  const auto v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : fallback;
}

cantor::NumberedPattern random_split_pattern(Rng& rng, std::size_t dim, std::size_t splits) {
  auto p = cantor::NumberedPattern::trivial(dim);
  for (std::size_t k = 0; k < splits; ++k)
    p = p.split(below(rng, p.size()), below(rng, dim));
  return p;
}

cantor::NumberedPattern random_numbered_pattern(Rng& rng, std::size_t dim, std::size_t splits) {
  auto p = random_split_pattern(rng, dim, splits);
  auto bricks = p.bricks();
  std::shuffle(bricks.begin(), bricks.end(), rng);
  return cantor::NumberedPattern(dim, std::move(bricks));
}

nv::Element random_element(Rng& rng, std::size_t dim, std::size_t max_splits) {
  const std::size_t k = below(rng, max_splits + 1);
  return nv::make_element(random_split_pattern(rng, dim, k), random_numbered_pattern(rng, dim, k));
}

dyn::TreePair random_tree_pair(Rng& rng, std::size_t max_splits) {
  return dyn::from_element(random_element(rng, 1, max_splits));
}

cantor::PeriodicWord random_periodic_word(Rng& rng, std::size_t max_pre, std::size_t max_period) {
  const auto pre = random_word(rng, below(rng, max_pre + 1));
  const auto period = random_word(rng, 1 + below(rng, max_period));
  return cantor::PeriodicWord(pre, period);
}

cantor::Point random_point(Rng& rng, std::size_t dim, std::size_t max_pre, std::size_t max_period) {
  std::vector<cantor::PeriodicWord> coords;
  for (std::size_t i = 0; i < dim; ++i)
    coords.push_back(random_periodic_word(rng, max_pre, max_period));
  return cantor::Point(std::move(coords));
}

baker::TwoSidedPoint random_two_sided_point(Rng& rng, std::size_t max_pre, std::size_t max_period) {
  auto left = random_periodic_word(rng, max_pre, max_period);
  auto right = random_periodic_word(rng, max_pre, max_period);
  return {left, right};
}

pi::MonoidWord random_monoid_word(Rng& rng, std::size_t max_length, std::size_t max_index) {
  pi::MonoidWord w;
  const std::size_t len = below(rng, max_length + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto kind = static_cast<pi::LetterKind>(below(rng, 3));
    w.letters.push_back({kind, below(rng, max_index + 1)});
  }
  return w;
}

sigma::SigmaWord random_sigma_word(Rng& rng, std::size_t max_length, std::size_t max_index) {
  sigma::SigmaWord w;
  const std::size_t len = below(rng, max_length + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto base = static_cast<sigma::Base>(below(rng, 5));
    w.letters.push_back({base, below(rng, max_index + 1), below(rng, 2) ? 1 : -1});
  }
  return w;
}

} // namespace thompson::corpus
