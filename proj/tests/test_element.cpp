#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "thompson/corpus.hpp"
#include "thompson/element.hpp"

using namespace thompson;
using namespace thompson::cantor;
using nv::Element;

namespace {

Element baker_map() {
  return nv::make_element(NumberedPattern::parse("0,e|1,e"), NumberedPattern::parse("e,0|e,1"));
}

// (v0 v1, v0 v0): the thirds 00, 01, 1 go to 0, 10, 11.
Element a0() {
  return nv::make_element(NumberedPattern::parse("00,e|01,e|1,e"), NumberedPattern::parse("0,e|10,e|11,e"));
}

Element a(std::size_t i) {
  // A_i acts as A_0 on the brick 0^i, identity elsewhere.
  std::vector<Brick> dom, ran;
  std::string zeros(i, '0');
  for (std::size_t k = 0; k < i; ++k) {
    dom.push_back(Brick({Word(std::string(k, '0') + "1"), Word()}));
    ran.push_back(dom.back());
  }
  for (const char* w : {"00", "01", "1"})
    dom.push_back(Brick({Word(zeros + w), Word()}));
  for (const char* w : {"0", "10", "11"})
    ran.push_back(Brick({Word(zeros + w), Word()}));
  return nv::make_element(NumberedPattern(2, dom), NumberedPattern(2, ran));
}

/// Evaluation by scanning the domain with raw prefix tests.
Point oracle_apply(const Element& f, const Point& x) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < f.dim() && inside; ++j) {
      const auto& w = f.domain()[i][j].bits();
      inside = x[j].expand(w.size()).bits() == w;
    }
    if (!inside)
      continue;
    std::vector<PeriodicWord> coords;
    for (std::size_t j = 0; j < f.dim(); ++j)
      coords.push_back(x[j].strip(f.domain()[i][j]).prepend(f.range()[i][j]));
    return Point(coords);
  }
  FAIL("point outside every domain brick");
  return x;
}

/// The baker's map written as the two coordinate shifts.
Point oracle_baker(const Point& x) {
  Word b = x[0].expand(1);
  return Point({x[0].strip(b), x[1].prepend(b)});
}

} // namespace

TEST_SUITE("element") {

TEST_CASE("make_element examples") {
  auto id = nv::make_element(NumberedPattern::trivial(2), NumberedPattern::trivial(2));
  CHECK(nv::is_identity(id));
  CHECK_FALSE(nv::is_identity(baker_map()));
  CHECK_THROWS_AS(nv::make_element(NumberedPattern::parse("0,e|1,e"), NumberedPattern::parse("e,e")),
                  std::invalid_argument);
  CHECK_THROWS_AS(nv::make_element(NumberedPattern::parse("0,e|0,1"), NumberedPattern::parse("e,0|e,1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(nv::make_element(NumberedPattern::parse("0|1"), NumberedPattern::parse("e,0|e,1")),
                  std::invalid_argument);
}

TEST_CASE("apply examples") {
  auto x = Point::parse("01(10);(10)");
  CHECK(nv::apply(Element::identity(2), x) == x);
  CHECK(nv::apply(baker_map(), x) == Point::parse("1(10);0(10)"));
  CHECK(nv::apply(a0(), Point::parse("00(1);(0)")) == Point::parse("0(1);(0)"));
}

TEST_CASE("compose examples") {
  auto b = baker_map();
  CHECK(nv::is_identity(nv::compose(b, nv::invert(b))));
  auto b2 = nv::compose(b, b);
  corpus::Rng rng(201);
  for (int i = 0; i < 100; ++i) {
    auto x = corpus::random_point(rng, 2, 4, 5);
    CHECK(nv::apply(b2, x) == oracle_baker(oracle_baker(x)));
  }
  // X_q Y_m = Y_m X_{q+1} with X = Y = A, m = 0, q = 1.
  CHECK(nv::equals(nv::compose(a(1), a(0)), nv::compose(a(0), a(2))));
  CHECK_FALSE(nv::equals(nv::compose(a(1), a(0)), nv::compose(a(0), a(1))));
  CHECK_THROWS(nv::compose(Element::identity(1), Element::identity(2)));
}

TEST_CASE("invert examples") {
  CHECK(nv::is_identity(nv::invert(Element::identity(2))));
  auto inv = nv::invert(baker_map());
  CHECK(inv.domain() == NumberedPattern::parse("e,0|e,1"));
  CHECK(inv.range() == NumberedPattern::parse("0,e|1,e"));
  CHECK(nv::invert(inv) == baker_map());
}

TEST_CASE("is_identity and equals examples") {
  corpus::Rng rng(202);
  auto p = corpus::random_numbered_pattern(rng, 2, 7);
  CHECK(nv::is_identity(nv::make_element(p, p)));
  CHECK_FALSE(nv::is_identity(baker_map()));
  auto refined = nv::subdivide(a0(), 1, 1);
  CHECK(refined.size() == 4);
  CHECK(nv::equals(refined, a0()));
  CHECK(nv::equals(nv::subdivide(refined, 3, 0), a0()));
}

TEST_CASE("reduce examples") {
  std::vector<Brick> cube;
  for (const char* w : {"00,0", "00,1", "01,0", "01,1", "1,00", "1,01", "1,10", "1,11"})
    cube.push_back(Brick::parse(w));
  auto id8 = nv::make_element(NumberedPattern(2, cube), NumberedPattern(2, cube));
  auto r = nv::reduce(id8);
  CHECK(r.size() == 1);
  CHECK(r.domain()[0] == Brick::whole(2));

  CHECK(nv::reduce(baker_map()) == baker_map());

  auto bigger = nv::subdivide(a0(), 2, 0);
  auto r2 = nv::reduce(bigger);
  CHECK(r2.size() == 3);
  CHECK(nv::equals(r2, a0()));
}

TEST_CASE("transitivity_map examples") {
  auto halves = NumberedPattern::parse("0,e|1,e");
  std::vector<std::size_t> k0{0};
  auto U = Brick::parse("11,11");
  auto h = nv::transitivity_map(halves, k0, U);
  for (const char* corner : {"0(0);(0)", "0(0);(1)", "(01);(1)", "0(1);(0)", "0(1);(1)"}) {
    auto x = Point::parse(corner);
    REQUIRE(point_in_brick(x, halves[0]));
    CHECK(point_in_brick(nv::apply(h, x), U));
  }
  auto inside = nv::transitivity_map(NumberedPattern::parse("0,e|1,e"), k0, Brick::parse("0,e"));
  CHECK(point_in_brick(nv::apply(inside, Point::parse("01(0);(1)")), Brick::parse("0,e")));

  std::vector<std::size_t> both{0, 1};
  std::vector<std::size_t> none;
  CHECK_THROWS(nv::transitivity_map(halves, both, U));
  CHECK_THROWS(nv::transitivity_map(halves, none, U));
  CHECK_THROWS(nv::transitivity_map(halves, k0, Brick::whole(2)));
}

TEST_CASE("element file round trip") {
  corpus::Rng rng(203);
  for (int i = 0; i < 100; ++i) {
    auto f = corpus::random_element(rng, 1 + i % 2, 8);
    auto text = f.to_file();
    CHECK(Element::parse_file(text) == f);
    CHECK(Element::parse_file(text).to_file() == text);
  }
  CHECK_THROWS_AS(Element::parse_file("2V dim=2 k=1\ne,e => e,e\n"), ParseError);
  CHECK_THROWS_AS(Element::parse_file("nV dim=2 k=2\ne,e => e,e\n"), ParseError);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  corpus::Rng rng(204);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t dim = 1 + trial % 2;
    auto f = corpus::random_element(rng, dim, 10);
    auto g = corpus::random_element(rng, dim, 10);
    auto gf = nv::compose(g, f);
    for (int k = 0; k < 20; ++k) {
      auto x = corpus::random_point(rng, dim, 4, 5);
      CHECK(nv::apply(f, x) == oracle_apply(f, x));
      CHECK(nv::apply(gf, x) == oracle_apply(g, oracle_apply(f, x)));
    }
    CHECK(nv::is_identity(nv::compose(f, nv::invert(f))));
    CHECK(nv::is_identity(nv::compose(nv::invert(f), f)));
  }
}

TEST_CASE("associativity at the evaluation level") {
  corpus::Rng rng(205);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t dim = 1 + trial % 2;
    auto f = corpus::random_element(rng, dim, 6);
    auto g = corpus::random_element(rng, dim, 6);
    auto h = corpus::random_element(rng, dim, 6);
    auto left = nv::compose(nv::compose(f, g), h);
    auto right = nv::compose(f, nv::compose(g, h));
    CHECK(nv::equals(left, right));
    for (int k = 0; k < 10; ++k) {
      auto x = corpus::random_point(rng, dim, 4, 5);
      CHECK(nv::apply(left, x) == nv::apply(right, x));
    }
  }
}

TEST_CASE("equals is an equivalence invariant under refinement and reduction") {
  corpus::Rng rng(206);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t dim = 1 + trial % 2;
    auto f = corpus::random_element(rng, dim, 8);
    auto g = nv::subdivide(f, rng() % f.size(), rng() % dim);
    auto h = nv::subdivide(g, rng() % g.size(), rng() % dim);
    CHECK(nv::equals(f, f));
    CHECK(nv::equals(f, g));
    CHECK(nv::equals(g, f));
    CHECK(nv::equals(g, h));
    CHECK(nv::equals(f, h));
    auto r = nv::reduce(h);
    CHECK(r.size() <= f.size());
    CHECK(nv::equals(r, f));
    CHECK(nv::reduce(r) == r);
    auto other = corpus::random_element(rng, dim, 8);
    // Oracle for inequality: a point with different images.
    bool differ = false;
    for (int k = 0; k < 200 && !differ; ++k) {
      auto x = corpus::random_point(rng, dim, 5, 5);
      differ = oracle_apply(f, x) != oracle_apply(other, x);
    }
    if (differ)
      CHECK_FALSE(nv::equals(f, other));
  }
}

TEST_CASE("transitivity_map sends K into U") {
  corpus::Rng rng(207);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t dim = 1 + trial % 2;
    auto p = corpus::random_numbered_pattern(rng, dim, 1 + rng() % 8);
    std::vector<std::size_t> K;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (rng() % 2)
        K.push_back(i);
    if (K.empty())
      K.push_back(0);
    if (K.size() == p.size())
      K.pop_back();
    std::vector<Word> ws;
    for (std::size_t j = 0; j < dim; ++j)
      ws.push_back(Word(oracle::expand("", rng() % 2 ? "10" : "011", rng() % 4)));
    if (Brick(ws).depth() == 0)
      ws[0] = Word("1");
    Brick U(ws);
    auto h = nv::transitivity_map(p, K, U);
    for (auto k : K) {
      for (int n = 0; n < 20; ++n) {
        auto x = corpus::random_point(rng, dim, 4, 4);
        std::vector<PeriodicWord> coords;
        for (std::size_t j = 0; j < dim; ++j)
          coords.push_back(x[j].prepend(p[k][j]));
        CHECK(point_in_brick(nv::apply(h, Point(coords)), U));
      }
    }
  }
}

} // TEST_SUITE
