#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "thompson/baker.hpp"
#include "thompson/corpus.hpp"
#include "thompson/sigma.hpp"

using namespace thompson;
using namespace thompson::baker;
using cantor::PeriodicWord;
using cantor::Point;
using cantor::Word;

namespace {

/// Orbit size under the 2V element, by iterating it on the cube point.
std::size_t orbit_under(const nv::Element& f, const Point& x, std::size_t cap) {
  auto y = x;
  for (std::size_t n = 1; n <= cap; ++n) {
    y = nv::apply(f, y);
    if (y == x)
      return n;
  }
  return 0;
}

} // namespace

TEST_SUITE("baker") {

TEST_CASE("text form") {
  auto x = TwoSidedPoint::parse("(0)e.1(0)");
  CHECK(x.to_string() == "(0)e.1(0)");
  CHECK(x.at(0) == '1');
  CHECK(x.at(1) == '0');
  CHECK(x.at(-1) == '0');
  auto y = TwoSidedPoint::parse("(01)1.0(110)");
  CHECK(TwoSidedPoint::parse(y.to_string()) == y);
  CHECK(y.at(-1) == '1');
  CHECK(y.at(-2) == '1');
  CHECK(y.at(-3) == '0');
  CHECK(y.at(0) == '0');
  CHECK(y.at(1) == '1');
  CHECK_THROWS_AS(TwoSidedPoint::parse("(0)e1(0)"), ParseError);
  CHECK_THROWS_AS(TwoSidedPoint::parse("()e.e(0)"), ParseError);
}

TEST_CASE("shift examples") {
  auto p01 = TwoSidedPoint::periodic(Word("01"));
  CHECK(shift(p01) != p01);
  CHECK(shift(shift(p01)) == p01);
  auto zero = TwoSidedPoint::periodic(Word("0"));
  CHECK(shift(zero) == zero);
  CHECK(shift(TwoSidedPoint::parse("(0)e.1(0)")).to_string() == "(0)1.e(0)");
}

TEST_CASE("shift moves indices by one") {
  corpus::Rng rng(601);
  for (int trial = 0; trial < 500; ++trial) {
    auto x = corpus::random_two_sided_point(rng, 5, 6);
    auto y = shift(x);
    for (long i = -40; i <= 40; ++i)
      CHECK(y.at(i) == x.at(i + 1));
    CHECK(TwoSidedPoint::parse(x.to_string()) == x);
  }
}

TEST_CASE("cube coordinates") {
  CHECK(to_point(TwoSidedPoint::periodic(Word("0"))) == Point::parse("(0);(0)"));
  CHECK(from_point(Point::parse("(0);(0)")) == TwoSidedPoint::periodic(Word("0")));
  CHECK(to_point(TwoSidedPoint::parse("(01)1.0(110)")) == Point::parse("0(110);1(10)"));
  CHECK_THROWS_AS(from_point(Point::parse("(0)")), std::invalid_argument);
  corpus::Rng rng(602);
  auto c0 = sigma::generator(sigma::C(0));
  for (int trial = 0; trial < 500; ++trial) {
    auto x = corpus::random_two_sided_point(rng, 5, 6);
    CHECK(from_point(to_point(x)) == x);
    auto p = corpus::random_point(rng, 2, 5, 6);
    CHECK(to_point(from_point(p)) == p);
    CHECK(to_point(shift(x)) == nv::apply(c0, to_point(x)));
  }
}

TEST_CASE("orbit sizes") {
  CHECK(orbit_size(TwoSidedPoint::periodic(Word("0"))) == 1u);
  CHECK(orbit_size(TwoSidedPoint::periodic(Word("01"))) == 2u);
  CHECK(orbit_size(TwoSidedPoint::periodic(Word("0011"))) == 4u);
  CHECK(orbit_size(TwoSidedPoint::periodic(Word("0101"))) == 2u);
  CHECK_FALSE(orbit_size(TwoSidedPoint::parse("(0)e.1(0)")).has_value());
  // Brute-force shift iteration agrees.
  corpus::Rng rng(603);
  for (int trial = 0; trial < 200; ++trial) {
    auto per = corpus::random_periodic_word(rng, 0, 8).period();
    auto x = TwoSidedPoint::periodic(per);
    auto y = shift(x);
    std::size_t n = 1;
    while (y != x && n < 20) {
      y = shift(y);
      ++n;
    }
    CHECK(orbit_size(x) == n);
  }
}

TEST_CASE("necklace enumeration") {
  CHECK(enumerate_periodic_orbits(1) == std::vector<Word>{Word("0"), Word("1")});
  CHECK(enumerate_periodic_orbits(2) == std::vector<Word>{Word("01")});
  CHECK(enumerate_periodic_orbits(4).size() == 3);
  CHECK_THROWS(enumerate_periodic_orbits(0));

  auto c0 = sigma::generator(sigma::C(0));
  for (unsigned p = 1; p <= 16; ++p) {
    auto reps = enumerate_periodic_orbits(p);
    CHECK(reps.size() == oracle::aperiodic_necklaces(p));
    CHECK(reps == enumerate_periodic_orbits_serial(p));
    if (p <= 12) {
      auto brute = oracle::brute_force_necklaces(p);
      std::set<std::string> got;
      for (const auto& w : reps)
        got.insert(w.bits());
      CHECK(got == brute);
    }
    for (const auto& w : reps)
      CHECK(orbit_under(c0, to_point(TwoSidedPoint::periodic(w)), p + 1) == p);
  }
}

} // TEST_SUITE
