#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "thompson/corpus.hpp"
#include "thompson/monoid.hpp"

using namespace thompson;
using namespace thompson::pi;
using cantor::Brick;
using cantor::NumberedPattern;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(THOMPSON_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  return line;
}

/// Direct simulation: rectangle number n is entry n of a flat list of
/// (square, brick). Enough trivial squares are listed up front that no
/// rectangle of the compared squares falls off the end.
struct FlatSequence {
  std::vector<std::pair<std::size_t, Brick>> rects;

  explicit FlatSequence(std::size_t n) {
    for (std::size_t s = 0; s < n; ++s)
      rects.push_back({s, Brick::whole(2)});
  }

  void apply(const Letter& x) {
    if (x.kind == LetterKind::S) {
      std::swap(rects[x.index], rects[x.index + 1]);
      return;
    }
    auto [sq, b] = rects[x.index];
    auto [lo, hi] = cantor::split_brick(b, x.kind == LetterKind::V ? 0 : 1);
    rects[x.index] = {sq, lo};
    rects.insert(rects.begin() + static_cast<long>(x.index) + 1, {sq, hi});
  }

  std::vector<NumberedBrick> square(std::size_t s) const {
    std::vector<NumberedBrick> out;
    for (std::size_t n = 0; n < rects.size(); ++n)
      if (rects[n].first == s)
        out.push_back({rects[n].second, n});
    std::sort(out.begin(), out.end());
    return out;
  }
};

void check_against_flat(const MonoidWord& w) {
  std::size_t max_index = 0;
  for (const auto& x : w.letters)
    max_index = std::max(max_index, x.index);
  std::size_t horizon = max_index + w.size() + 2;
  FlatSequence flat(2 * horizon + 4);
  for (const auto& x : w.letters)
    flat.apply(x);
  auto seq = eval_word(w);
  for (std::size_t s = 0; s < horizon; ++s)
    CHECK(seq.square(s) == flat.square(s));
}

} // namespace

TEST_SUITE("monoid") {

TEST_CASE("eval_word examples") {
  auto v0 = eval_word(MonoidWord::parse("v0"));
  CHECK(v0.to_string() == "[0:0,e#0|1,e#1] tail=1,offset=1");
  CHECK(v0.square(3) == std::vector<NumberedBrick>{{Brick::whole(2), 4}});
  CHECK(eval_word(MonoidWord::parse("")) == PatternSequence::trivial());
  CHECK(PatternSequence::trivial().to_string() == "tail=0,offset=0");
  auto quad = eval_word(MonoidWord::parse("v0 h1 h0"));
  CHECK(quad == eval_word(MonoidWord::parse("h0 v1 v0 s1")));
  CHECK(quad.to_string() == "[0:0,0#0|0,1#1|1,0#2|1,1#3] tail=1,offset=3");
  CHECK(eval_word(MonoidWord::parse("h0 v1 v0")).to_string() == "[0:0,0#0|1,0#1|0,1#2|1,1#3] tail=1,offset=3");
}

TEST_CASE("eval_word against the flat-list simulation") {
  corpus::Rng rng(301);
  for (int trial = 0; trial < 500; ++trial)
    check_against_flat(corpus::random_monoid_word(rng, 12, 5));
}

TEST_CASE("word and sequence text round trip") {
  corpus::Rng rng(302);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = corpus::random_monoid_word(rng, 10, 6);
    CHECK(MonoidWord::parse(w.to_string()) == w);
    auto s = eval_word(w);
    CHECK(PatternSequence::parse(s.to_string()) == s);
    CHECK(PatternSequence::parse(s.to_string()).to_string() == s.to_string());
  }
  CHECK_THROWS_AS(MonoidWord::parse("v0 x1"), ParseError);
  CHECK_THROWS_AS(PatternSequence::parse("[0:0,e#0] tail=1,offset=0"), ParseError);
}

TEST_CASE("multiply: identity, homomorphism and the pasting figure") {
  corpus::Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = corpus::random_monoid_word(rng, 8, 5);
    auto v = corpus::random_monoid_word(rng, 8, 5);
    auto eu = eval_word(u);
    auto ev = eval_word(v);
    CHECK(multiply(PatternSequence::trivial(), ev) == ev);
    CHECK(multiply(eu, PatternSequence::trivial()) == eu);
    CHECK(multiply(eu, ev) == eval_word(u + v));
  }
  auto P = PatternSequence::parse(slurp("figure_p.seq"));
  auto Q = PatternSequence::parse(slurp("figure_q.seq"));
  auto PQ = PatternSequence::parse(slurp("figure_pq.seq"));
  CHECK(P.explicit_rectangles() == 6);
  CHECK(P.square(3) == std::vector<NumberedBrick>{{Brick::whole(2), 6}});
  CHECK(P.square(4) == std::vector<NumberedBrick>{{Brick::whole(2), 7}});
  CHECK(Q.square(4) == std::vector<NumberedBrick>{{Brick::whole(2), 14}});
  CHECK(PQ.square(3) == std::vector<NumberedBrick>{{Brick::whole(2), 16}});
  CHECK(PQ.square(4) == std::vector<NumberedBrick>{{Brick::whole(2), 17}});
  CHECK(multiply(P, Q) == PQ);
  CHECK(multiply(P, Q).to_string() == slurp("figure_pq.seq"));
}

TEST_CASE("check_monoid_relation examples") {
  CHECK(check_monoid_relation(MonoidWord::parse("h2 v0"), MonoidWord::parse("v0 h3")));
  CHECK(check_monoid_relation(MonoidWord::parse("s0 s0"), MonoidWord::parse("")));
  CHECK(check_monoid_relation(MonoidWord::parse("s0 v0"), MonoidWord::parse("v1 s0 s1")));
  CHECK_FALSE(check_monoid_relation(MonoidWord::parse("h2 v0"), MonoidWord::parse("v0 h2")));
  CHECK_FALSE(check_monoid_relation(MonoidWord::parse("v0 h1 h0"), MonoidWord::parse("h0 v1 v0")));
}

TEST_CASE("every relation instance with indices up to 5 holds") {
  auto rels = monoid_relation_instances(5);
  std::map<std::string, std::size_t> per_family;
  for (const auto& r : rels) {
    ++per_family[r.family];
    INFO(r.family << " " << r.indices);
    CHECK(check_monoid_relation(r.lhs, r.rhs));
  }
  // Counts by hand: 4·15 Thompson, 6 + 10 + 6 exchange, 2·36 switch, 6 cross.
  CHECK(per_family["1"] == 60);
  CHECK(per_family["2a"] == 6);
  CHECK(per_family["2b"] == 10);
  CHECK(per_family["2c"] == 6);
  CHECK(per_family["3"] == 72);
  CHECK(per_family["4"] == 6);
  // Shifting an index on one side breaks every Thompson and switch instance.
  for (const auto& r : rels) {
    if (r.family != "1" && r.family != "3")
      continue;
    auto broken = r.rhs;
    ++broken.letters.front().index;
    CHECK_FALSE(check_monoid_relation(r.lhs, broken));
  }
}

TEST_CASE("rewrite_to_pq") {
  CHECK(rewrite_to_pq(MonoidWord::parse("s0 v0")) == MonoidWord::parse("v1 s0 s1"));
  CHECK(rewrite_to_pq(MonoidWord::parse("v0 h1 s0 s2")) == MonoidWord::parse("v0 h1 s0 s2"));
  corpus::Rng rng(304);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = corpus::random_monoid_word(rng, 10, 5);
    auto r = rewrite_to_pq(w);
    CHECK(is_pq_form(r));
    CHECK(eval_word(r) == eval_word(w));
    CHECK(rewrite_to_pq(r) == r);
  }
}

TEST_CASE("pattern_to_pq") {
  CHECK(pattern_to_pq(NumberedPattern::trivial(2)).size() == 0);
  CHECK(pattern_to_pq(NumberedPattern::parse("0,e|1,e")) == MonoidWord::parse("v0"));
  CHECK(pattern_to_pq(NumberedPattern::parse("e,0|e,1")) == MonoidWord::parse("h0"));
  CHECK(pattern_to_pq(NumberedPattern::parse("1,e|0,e")) == MonoidWord::parse("v0 s0"));
  CHECK(in_pi0(eval_word(MonoidWord::parse("v0 h1 s0"))));
  CHECK_FALSE(in_pi0(eval_word(MonoidWord::parse("v2"))));
  CHECK_THROWS(pattern_to_pq(NumberedPattern::parse("0|1")));

  corpus::Rng rng(305);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = corpus::random_numbered_pattern(rng, 2, rng() % 10);
    auto w = pattern_to_pq(p);
    CHECK(is_pq_form(w));
    auto s = eval_word(w);
    CHECK(in_pi0(s));
    CHECK(s == PatternSequence::from_square0(p));
    CHECK(s.square_pattern(0) == p);
    // The j-th split letter touches only the j+1 regions of square 0.
    std::size_t splits = 0;
    for (const auto& x : w.letters) {
      if (!x.is_split())
        continue;
      CHECK(x.index <= splits);
      ++splits;
    }
  }
}

} // TEST_SUITE
