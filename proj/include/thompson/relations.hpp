#pragma once

// Relations among the Σ generators of 2V: the seventeen relation families,
// the finite generation identities, the exponent-sum (abelianization)
// check, group expressions with commutators, and the expression of the
// baker's map C_0 as a product of commutators.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/sigma.hpp"

namespace thompson::rel {

using sigma::SigmaLetter;
using sigma::SigmaWord;

constexpr int kFamilyCount = 17;

/// Parameters of one relation instance. x and y select A or B for the
/// families written with the placeholders X and Y; unused fields are ignored.
struct FamilyParams {
  std::size_t m = 0;
  std::size_t q = 0;
  sigma::Base x = sigma::Base::A;
  sigma::Base y = sigma::Base::A;
};

struct RelationInstance {
  int family = 0; // 1..17
  FamilyParams params;
  SigmaWord lhs;
  SigmaWord rhs;

  /// "indices=m=..,q=.." plus X/Y choices where the family uses them.
  std::string describe_indices() const;
};

/// Display form of a family, e.g. "X_q Y_m = Y_m X_{q+1}  (m<q)".
std::string family_statement(int family);
bool family_uses_m(int family);
bool family_uses_q(int family);
bool family_uses_x(int family);
bool family_uses_y(int family);

/// Throws std::invalid_argument when the side condition fails or the family
/// id is out of range.
RelationInstance instantiate(int family, const FamilyParams& params);

bool holds(const SigmaWord& lhs, const SigmaWord& rhs);

bool verify_family(int family, const FamilyParams& params);

/// All instances with m, q <= max_index satisfying the side conditions, in a
/// fixed order (family, q, m, X, Y).
std::vector<RelationInstance> enumerate_instances(std::size_t max_index);

/// The relation π_q X_{q+1} = X_q π_{q+1} π_q, a consequence of family 3.
RelationInstance derived_pi_shift(std::size_t q, sigma::Base x);

struct InstanceResult {
  RelationInstance instance;
  bool pass = false;
};

struct SweepReport {
  std::vector<InstanceResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_pass() const { return failed == 0 && !results.empty(); }
};

/// Verifies every instance; OpenMP parallel over instances, results in
/// enumeration order.
SweepReport sweep_families(std::size_t max_index);
/// Single-threaded reference for sweep_families.
SweepReport sweep_families_serial(std::size_t max_index);

/// Relations expected to fail, used as controls.
std::vector<RelationInstance> mutation_controls();

// ---------------------------------------------------------------- finite generation

struct IdentityCheck {
  std::string name;
  SigmaWord lhs;
  SigmaWord rhs;
  bool pass = false;
};

/// Z_{q+1} = A_0^{-q} Z_1 A_0^q for Z in {A,B,C,π,π̄}, 1 <= q <= max_q.
SigmaWord conjugation_identity_rhs(sigma::Base z, std::size_t q);
/// (π̄_m B_m π̄_{m+1} π_m)(B_m π_{m+1} A_m^{-1}), which equals C_m.
SigmaWord c_rewrite_rhs(std::size_t m);

std::vector<IdentityCheck> finite_generation_identities(std::size_t max_index);

// ---------------------------------------------------------------- abelianization

struct AbelianRelation {
  std::string name;
  SigmaWord lhs;
  SigmaWord rhs;
};

/// The relation instances used to kill every generator class of the finite
/// generating set {A_i, B_i, π_i, π̄_i : i = 0, 1}, including the shift
/// relations Z_q A_0 = A_0 Z_{q+1} that identify Z_q with Z_1.
std::vector<AbelianRelation> abelianization_relations();
/// Name of the relation mixing A and B letters (A_0 B_1 B_0 = B_0 A_1 A_0 π_1).
std::string cross_type_relation_name();

struct AbelianizationResult {
  bool trivial = false;
  std::vector<std::string> classes;   // all letter classes in the system
  std::vector<std::string> surviving; // finite generators whose class is nonzero
};

/// Integer row reduction of the exponent-sum matrix; a generator class
/// vanishes when its unit vector lies in the row lattice.
AbelianizationResult abelianization_check(const std::vector<AbelianRelation>& relations);
AbelianizationResult abelianization_check();

// ---------------------------------------------------------------- group expressions

/// Expression tree over Σ letters: products, inverses and commutators
/// [x, y] = x y x⁻¹ y⁻¹.
class GroupExpr {
public:
  enum class Kind { Letter, Product, Inverse, Commutator };

  static GroupExpr letter(SigmaLetter x);
  static GroupExpr product(std::vector<GroupExpr> factors);
  static GroupExpr inverse(GroupExpr e);
  static GroupExpr commutator(GroupExpr a, GroupExpr b);

  /// Grammar: expr = term*; term = atom "'"*; atom = letter | "(" expr ")"
  /// | "[" expr "," expr "]". Letters use the Σ token syntax.
  static GroupExpr parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<GroupExpr>& children() const { return children_; }
  std::string to_string() const;
  /// Flattens to a Σ word.
  SigmaWord expand() const;

private:
  Kind kind_ = Kind::Product;
  SigmaLetter letter_{sigma::Base::A, 0, 1};
  std::vector<GroupExpr> children_;
};

nv::Element eval_commutator(const GroupExpr& e);

/// Printed: the 29-factor expression as usually stated. Corrected: the same with the
/// K_5 inside the conjugated block removed; this is the only single-factor
/// edit (deletion or substitution by any K_i^{±1}) that yields C_0.
enum class BakerCommForm { Printed, Corrected };

/// Variants of the commutator expression for C_0, for negative controls.
struct BakerCommVariant {
  BakerCommForm form = BakerCommForm::Printed;
  std::optional<std::size_t> drop_k_occurrence; // index among K-factor occurrences
  bool drop_conjugation = false;
};

/// The commutator factors K_1..K_8 (index 1..8).
GroupExpr baker_k(int i);
GroupExpr baker_comm_expression(const BakerCommVariant& variant = {});
/// Number of K-factor occurrences in the expression.
std::size_t baker_comm_k_occurrences(BakerCommForm form = BakerCommForm::Printed);
bool baker_comm_check(const BakerCommVariant& variant = {});

} // namespace thompson::rel
