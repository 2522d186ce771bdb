#include <doctest.h>

#include <map>
#include <set>

#include "thompson/corpus.hpp"
#include "thompson/relations.hpp"

using namespace thompson;
using namespace thompson::rel;
using sigma::A;
using sigma::B;
using sigma::C;
using sigma::Pi;
using sigma::PiBar;

namespace {

nv::Element baker_map() { return sigma::generator(C(0)); }

/// Side conditions transcribed independently of the library.
bool side_condition(int family, std::size_t m, std::size_t q) {
  switch (family) {
  case 1: case 2: case 5: case 8: return m < q;
  case 4: case 10: return m > q + 1;
  case 12: return (m > q ? m - q : q - m) >= 2;
  case 14: return q >= m + 2;
  default: return true;
  }
}

/// Expected sweep size by direct counting over the parameter box.
std::size_t expected_instance_count(std::size_t max_index) {
  std::size_t total = 0;
  for (int f = 1; f <= kFamilyCount; ++f) {
    std::size_t ms = family_uses_m(f) ? max_index + 1 : 1;
    std::size_t qs = family_uses_q(f) ? max_index + 1 : 1;
    std::size_t xy = (family_uses_x(f) ? 2 : 1) * (family_uses_y(f) ? 2 : 1);
    for (std::size_t m = 0; m < ms; ++m)
      for (std::size_t q = 0; q < qs; ++q)
        if (side_condition(f, m, q))
          total += xy;
  }
  return total;
}

} // namespace

TEST_SUITE("relations") {

TEST_CASE("family examples") {
  CHECK(verify_family(16, {3, 0}));
  CHECK(verify_family(9, {0, 0}));
  CHECK(verify_family(1, {0, 1, sigma::Base::A, sigma::Base::A}));
  CHECK_FALSE(holds(SigmaWord{A(1), A(0)}, SigmaWord{A(0), A(1)}));
  CHECK_THROWS_AS(instantiate(1, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(12, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(18, {}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(0, {}), std::invalid_argument);
}

TEST_CASE("sweep at index 4 covers every admissible instance and passes") {
  auto report = sweep_families(4);
  CHECK(report.results.size() == expected_instance_count(4));
  CHECK(report.results.size() == 186);
  CHECK(report.all_pass());
  std::set<int> families;
  for (const auto& r : report.results) {
    families.insert(r.instance.family);
    CHECK(side_condition(r.instance.family, r.instance.params.m, r.instance.params.q));
  }
  CHECK(families.size() == kFamilyCount);

  auto serial = sweep_families_serial(4);
  REQUIRE(serial.results.size() == report.results.size());
  for (std::size_t i = 0; i < serial.results.size(); ++i) {
    CHECK(serial.results[i].instance.lhs == report.results[i].instance.lhs);
    CHECK(serial.results[i].pass == report.results[i].pass);
  }
}

TEST_CASE("mutation controls fail") {
  auto controls = mutation_controls();
  CHECK(controls.size() >= 5);
  for (const auto& c : controls) {
    INFO(c.lhs.to_string() << " = " << c.rhs.to_string());
    CHECK_FALSE(holds(c.lhs, c.rhs));
  }
}

TEST_CASE("the m = q+1 consequence of the shift family") {
  for (std::size_t q = 0; q <= 4; ++q)
    for (auto x : {sigma::Base::A, sigma::Base::B}) {
      auto r = derived_pi_shift(q, x);
      CHECK(holds(r.lhs, r.rhs));
    }
}

TEST_CASE("finite generation identities") {
  CHECK(holds(SigmaWord{C(2)}, conjugation_identity_rhs(sigma::Base::C, 1)));
  CHECK(holds(SigmaWord{C(2)}, SigmaWord::parse("A0' C1 A0")));
  CHECK(holds(SigmaWord{C(0)}, SigmaWord::parse("q0 B0 q1 p0 B0 p1 A0'")));
  CHECK(holds(SigmaWord{C(0)}, c_rewrite_rhs(0)));
  // Wrong sign on the conjugator.
  CHECK_FALSE(holds(SigmaWord{C(2)}, SigmaWord::parse("A0 C1 A0'")));
  CHECK_FALSE(holds(SigmaWord{C(0)}, SigmaWord::parse("q0 B0 q1 p0 B0 p1 A0")));
  auto checks = finite_generation_identities(3);
  CHECK(checks.size() == 5 * 3 + 4);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK(c.pass == holds(c.lhs, c.rhs));
  }
}

TEST_CASE("abelianization") {
  auto rels = abelianization_relations();
  for (const auto& r : rels) {
    INFO(r.name);
    CHECK(holds(r.lhs, r.rhs));
  }
  auto full = abelianization_check(rels);
  CHECK(full.trivial);
  CHECK(full.surviving.empty());
  CHECK(abelianization_check().trivial);

  auto without = rels;
  std::erase_if(without, [](const auto& r) { return r.name == cross_type_relation_name(); });
  REQUIRE(without.size() + 1 == rels.size());
  auto dropped = abelianization_check(without);
  CHECK_FALSE(dropped.trivial);
  CHECK(std::set<std::string>(dropped.surviving.begin(), dropped.surviving.end()) ==
        std::set<std::string>{"B0", "B1"});

  auto empty = abelianization_check({});
  CHECK_FALSE(empty.trivial);
  CHECK(empty.surviving.size() == 8);
}

TEST_CASE("group expressions") {
  for (const char* x : {"A0", "B2", "C1", "p0", "q3'"}) {
    auto e = GroupExpr::parse(std::string("[") + x + "," + x + "]");
    CHECK(nv::is_identity(eval_commutator(e)));
  }
  auto k = GroupExpr::parse("[A0', A1]");
  CHECK(k.kind() == GroupExpr::Kind::Commutator);
  CHECK(k.expand() == SigmaWord::parse("A0' A1 A0 A1'"));
  CHECK(GroupExpr::parse(k.to_string()).expand() == k.expand());
  auto nested = GroupExpr::parse("(A1 [p1', A0'] A1')'");
  CHECK(nested.expand() == SigmaWord::parse("A1 p1' A0' p1 A0 A1'").inverse());
  CHECK_THROWS_AS(GroupExpr::parse("[A0, A1"), ParseError);
  CHECK_THROWS_AS(GroupExpr::parse("(A0"), ParseError);
}

TEST_CASE("the baker's map as a product of commutators") {
  // The 29-factor expression evaluates to something other than C0; the
  // version without the K5 factor inside the conjugated block is C0.
  CHECK_FALSE(baker_comm_check());
  BakerCommVariant corrected{BakerCommForm::Corrected, std::nullopt, false};
  CHECK(baker_comm_check(corrected));
  CHECK(nv::equals(eval_commutator(baker_comm_expression(corrected)), baker_map()));

  auto n = baker_comm_k_occurrences(BakerCommForm::Corrected);
  CHECK(n == 28);
  CHECK(baker_comm_k_occurrences(BakerCommForm::Printed) == 29);
  for (std::size_t i = 0; i < n; ++i) {
    BakerCommVariant v{BakerCommForm::Corrected, i, false};
    INFO("dropped K occurrence " << i);
    CHECK_FALSE(baker_comm_check(v));
  }
  CHECK_FALSE(baker_comm_check({BakerCommForm::Corrected, std::nullopt, true}));

  // K_1 = [A_0^{-1}, A_1]
  CHECK(baker_k(1).expand() == SigmaWord::parse("A0' A1 A0 A1'"));
  // Every K_i is a commutator, hence vanishes in the abelianization.
  for (int i = 1; i <= 8; ++i) {
    std::map<std::string, int> sums;
    for (const auto& x : baker_k(i).expand().letters)
      sums[x.to_string().substr(0, 2)] += x.exponent;
    for (const auto& [name, s] : sums)
      CHECK(s == 0);
  }
}

} // TEST_SUITE
