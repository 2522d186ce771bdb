#include "thompson/relations.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace thompson::rel {

using sigma::A;
using sigma::B;
using sigma::Base;
using sigma::C;
using sigma::Pi;
using sigma::PiBar;

namespace {

SigmaLetter of(Base base, std::size_t i) { return {base, i, 1}; }

char base_name(Base b) { return b == Base::A ? 'A' : 'B'; }

void require(bool cond, int family, const char* condition) {
  if (!cond)
    throw std::invalid_argument("family " + std::to_string(family) + " requires " + condition);
}

} // namespace

bool family_uses_m(int family) { return family != 3; }

bool family_uses_q(int family) {
  switch (family) {
  case 1: case 2: case 3: case 4: case 5: case 8: case 10: case 12: case 14: return true;
  default: return false;
  }
}

bool family_uses_x(int family) {
  switch (family) {
  case 1: case 2: case 3: case 4: case 5: case 8: return true;
  default: return false;
  }
}

bool family_uses_y(int family) { return family == 1; }

std::string family_statement(int family) {
  switch (family) {
  case 1: return "X_q Y_m = Y_m X_{q+1}  (m<q)";
  case 2: return "p_q X_m = X_m p_{q+1}  (m<q)";
  case 3: return "p_q X_q = X_{q+1} p_q p_{q+1}  (q>=0)";
  case 4: return "p_q X_m = X_m p_q  (m>q+1)";
  case 5: return "q_q X_m = X_m q_{q+1}  (m<q)";
  case 6: return "q_m A_m = p_m q_{m+1}  (m>=0)";
  case 7: return "q_m B_m = C_{m+1} p_m q_{m+1}  (m>=0)";
  case 8: return "C_q X_m = X_m C_{q+1}  (m<q)";
  case 9: return "C_m A_m = B_m C_{m+2} p_{m+1}  (m>=0)";
  case 10: return "p_q C_m = C_m p_q  (m>q+1)";
  case 11: return "A_m B_{m+1} B_m = B_m A_{m+1} A_m p_{m+1}  (m>=0)";
  case 12: return "p_q p_m = p_m p_q  (|m-q|>=2)";
  case 13: return "p_m p_{m+1} p_m = p_{m+1} p_m p_{m+1}  (m>=0)";
  case 14: return "q_q p_m = p_m q_q  (q>=m+2)";
  case 15: return "p_m q_{m+1} p_m = q_{m+1} p_m q_{m+1}  (m>=0)";
  case 16: return "p_m p_m = 1  (m>=0)";
  case 17: return "q_m q_m = 1  (m>=0)";
  default: throw std::invalid_argument("family id must be in 1..17");
  }
}

std::string RelationInstance::describe_indices() const {
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty())
      s += ',';
    s += part;
  };
  if (family_uses_m(family))
    add("m=" + std::to_string(params.m));
  if (family_uses_q(family))
    add("q=" + std::to_string(params.q));
  if (family_uses_x(family))
    add(std::string("X=") + base_name(params.x));
  if (family_uses_y(family))
    add(std::string("Y=") + base_name(params.y));
  return s;
}

RelationInstance instantiate(int family, const FamilyParams& params) {
  const std::size_t m = params.m, q = params.q;
  if (family_uses_x(family) && params.x != Base::A && params.x != Base::B)
    throw std::invalid_argument("X must be A or B");
  if (family_uses_y(family) && params.y != Base::A && params.y != Base::B)
    throw std::invalid_argument("Y must be A or B");
  const auto X = [&](std::size_t i) { return of(params.x, i); };
  const auto Y = [&](std::size_t i) { return of(params.y, i); };
  RelationInstance r;
  r.family = family;
  r.params = params;
  switch (family) {
  case 1:
    require(m < q, 1, "m<q");
    r.lhs = {X(q), Y(m)};
    r.rhs = {Y(m), X(q + 1)};
    break;
  case 2:
    require(m < q, 2, "m<q");
    r.lhs = {Pi(q), X(m)};
    r.rhs = {X(m), Pi(q + 1)};
    break;
  case 3:
    r.lhs = {Pi(q), X(q)};
    r.rhs = {X(q + 1), Pi(q), Pi(q + 1)};
    break;
  case 4:
    require(m > q + 1, 4, "m>q+1");
    r.lhs = {Pi(q), X(m)};
    r.rhs = {X(m), Pi(q)};
    break;
  case 5:
    require(m < q, 5, "m<q");
    r.lhs = {PiBar(q), X(m)};
    r.rhs = {X(m), PiBar(q + 1)};
    break;
  case 6:
    r.lhs = {PiBar(m), A(m)};
    r.rhs = {Pi(m), PiBar(m + 1)};
    break;
  case 7:
    r.lhs = {PiBar(m), B(m)};
    r.rhs = {C(m + 1), Pi(m), PiBar(m + 1)};
    break;
  case 8:
    require(m < q, 8, "m<q");
    r.lhs = {C(q), X(m)};
    r.rhs = {X(m), C(q + 1)};
    break;
  case 9:
    r.lhs = {C(m), A(m)};
    r.rhs = {B(m), C(m + 2), Pi(m + 1)};
    break;
  case 10:
    require(m > q + 1, 10, "m>q+1");
    r.lhs = {Pi(q), C(m)};
    r.rhs = {C(m), Pi(q)};
    break;
  case 11:
    r.lhs = {A(m), B(m + 1), B(m)};
    r.rhs = {B(m), A(m + 1), A(m), Pi(m + 1)};
    break;
  case 12:
    require((m > q ? m - q : q - m) >= 2, 12, "|m-q|>=2");
    r.lhs = {Pi(q), Pi(m)};
    r.rhs = {Pi(m), Pi(q)};
    break;
  case 13:
    r.lhs = {Pi(m), Pi(m + 1), Pi(m)};
    r.rhs = {Pi(m + 1), Pi(m), Pi(m + 1)};
    break;
  case 14:
    require(q >= m + 2, 14, "q>=m+2");
    r.lhs = {PiBar(q), Pi(m)};
    r.rhs = {Pi(m), PiBar(q)};
    break;
  case 15:
    r.lhs = {Pi(m), PiBar(m + 1), Pi(m)};
    r.rhs = {PiBar(m + 1), Pi(m), PiBar(m + 1)};
    break;
  case 16:
    r.lhs = {Pi(m), Pi(m)};
    r.rhs = {};
    break;
  case 17:
    r.lhs = {PiBar(m), PiBar(m)};
    r.rhs = {};
    break;
  default:
    throw std::invalid_argument("family id must be in 1..17");
  }
  return r;
}

bool holds(const SigmaWord& lhs, const SigmaWord& rhs) {
  return nv::equals(sigma::eval_sigma(lhs), sigma::eval_sigma(rhs));
}

bool verify_family(int family, const FamilyParams& params) {
  auto r = instantiate(family, params);
  return holds(r.lhs, r.rhs);
}

std::vector<RelationInstance> enumerate_instances(std::size_t max_index) {
  std::vector<RelationInstance> out;
  const Base ab[] = {Base::A, Base::B};
  for (int family = 1; family <= kFamilyCount; ++family) {
    const std::size_t q_hi = family_uses_q(family) ? max_index : 0;
    const std::size_t m_hi = family_uses_m(family) ? max_index : 0;
    const int nx = family_uses_x(family) ? 2 : 1;
    const int ny = family_uses_y(family) ? 2 : 1;
    for (std::size_t q = 0; q <= q_hi; ++q)
      for (std::size_t m = 0; m <= m_hi; ++m)
        for (int xi = 0; xi < nx; ++xi)
          for (int yi = 0; yi < ny; ++yi) {
            FamilyParams p{m, q, ab[xi], ab[yi]};
            try {
              out.push_back(instantiate(family, p));
            } catch (const std::invalid_argument&) {
              // side condition fails for this index choice
            }
          }
  }
  return out;
}

RelationInstance derived_pi_shift(std::size_t q, Base x) {
  RelationInstance r;
  r.family = 0;
  r.params = {q + 1, q, x, x};
  r.lhs = {Pi(q), of(x, q + 1)};
  r.rhs = {of(x, q), Pi(q + 1), Pi(q)};
  return r;
}

namespace {

SweepReport tally(std::vector<RelationInstance> instances, const std::vector<char>& pass) {
  SweepReport report;
  report.results.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    report.results.push_back({std::move(instances[i]), pass[i] != 0});
    (pass[i] ? report.passed : report.failed)++;
  }
  return report;
}

} // namespace

SweepReport sweep_families(std::size_t max_index) {
  auto instances = enumerate_instances(max_index);
  std::vector<char> pass(instances.size(), 0);
  const auto n = static_cast<long long>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i)
    pass[i] = holds(instances[i].lhs, instances[i].rhs);
  return tally(std::move(instances), pass);
}

SweepReport sweep_families_serial(std::size_t max_index) {
  auto instances = enumerate_instances(max_index);
  std::vector<char> pass(instances.size(), 0);
  for (std::size_t i = 0; i < instances.size(); ++i)
    pass[i] = holds(instances[i].lhs, instances[i].rhs);
  return tally(std::move(instances), pass);
}

std::vector<RelationInstance> mutation_controls() {
  // family is the id of the relation each control corrupts
  auto make = [](int family, SigmaWord lhs, SigmaWord rhs) {
    RelationInstance r;
    r.family = family;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
  };
  return {
      make(1, {A(1), A(0)}, {A(0), A(1)}),
      make(3, {Pi(0), A(0)}, {A(1), Pi(1), Pi(0)}),
      make(7, {PiBar(0), B(0)}, {C(0), Pi(0), PiBar(1)}),
      make(9, {C(0), A(0)}, {B(0), C(1), Pi(1)}),
      make(11, {A(0), B(1), B(0)}, {B(0), A(1), A(0)}),
      make(12, {Pi(0), Pi(1)}, {Pi(1), Pi(0)}),
      make(14, {PiBar(1), Pi(0)}, {Pi(0), PiBar(1)}),
  };
}

// ---------------------------------------------------------------- finite generation

SigmaWord conjugation_identity_rhs(Base z, std::size_t q) {
  SigmaWord w;
  for (std::size_t i = 0; i < q; ++i)
    w.letters.push_back(A(0).inverse());
  w.letters.push_back(of(z, 1));
  for (std::size_t i = 0; i < q; ++i)
    w.letters.push_back(A(0));
  return w;
}

SigmaWord c_rewrite_rhs(std::size_t m) {
  return {PiBar(m), B(m), PiBar(m + 1), Pi(m), B(m), Pi(m + 1), A(m).inverse()};
}

std::vector<IdentityCheck> finite_generation_identities(std::size_t max_index) {
  std::vector<IdentityCheck> out;
  for (Base z : {Base::A, Base::B, Base::C, Base::Pi, Base::PiBar})
    for (std::size_t q = 1; q <= max_index; ++q) {
      SigmaWord lhs{of(z, q + 1)};
      out.push_back({"conj " + lhs.to_string() + " q=" + std::to_string(q), lhs,
                     conjugation_identity_rhs(z, q), false});
    }
  for (std::size_t m = 0; m <= max_index; ++m)
    out.push_back({"c-rewrite m=" + std::to_string(m), SigmaWord{C(m)}, c_rewrite_rhs(m), false});

  const auto n = static_cast<long long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i)
    out[i].pass = holds(out[i].lhs, out[i].rhs);
  return out;
}

// ---------------------------------------------------------------- abelianization

std::string cross_type_relation_name() { return "A0 B1 B0 = B0 A1 A0 p1"; }

std::vector<AbelianRelation> abelianization_relations() {
  std::vector<AbelianRelation> out;
  auto add = [&](SigmaWord lhs, SigmaWord rhs) {
    out.push_back({lhs.to_string() + " = " + rhs.to_string(), std::move(lhs), std::move(rhs)});
  };
  // Z_1 A_0 = A_0 Z_2 identifies the class of Z_2 with that of Z_1
  for (Base z : {Base::A, Base::B, Base::Pi, Base::PiBar})
    add({of(z, 1), A(0)}, {A(0), of(z, 2)});
  add({Pi(0), A(0)}, {A(1), Pi(0), Pi(1)});
  add({Pi(0), B(0)}, {B(1), Pi(0), Pi(1)});
  add({Pi(1), A(1)}, {A(2), Pi(1), Pi(2)});
  add({Pi(0), Pi(1), Pi(0)}, {Pi(1), Pi(0), Pi(1)});
  add({PiBar(1), A(1)}, {Pi(1), PiBar(2)});
  add({PiBar(0), A(0)}, {Pi(0), PiBar(1)});
  add({Pi(0), PiBar(1), Pi(0)}, {PiBar(1), Pi(0), PiBar(1)});
  add({A(0), B(1), B(0)}, {B(0), A(1), A(0), Pi(1)});
  return out;
}

namespace {

using Vec = std::vector<long long>;

/// Integer row echelon form by Euclid's algorithm on each column.
std::vector<Vec> echelon(std::vector<Vec> rows, std::size_t cols) {
  std::vector<Vec> done;
  for (std::size_t c = 0; c < cols && !rows.empty(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
          best = r;
      if (best == rows.size())
        break;
      bool reduced_all = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][c] == 0)
          continue;
        const long long f = rows[r][c] / rows[best][c];
        for (std::size_t k = 0; k < cols; ++k)
          rows[r][k] -= f * rows[best][k];
        if (rows[r][c] != 0)
          reduced_all = false;
      }
      if (reduced_all) {
        done.push_back(rows[best]);
        rows.erase(rows.begin() + static_cast<long>(best));
        break;
      }
    }
    std::erase_if(rows, [](const Vec& v) { return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }); });
  }
  return done;
}

bool in_lattice(const std::vector<Vec>& ech, Vec target) {
  for (const auto& row : ech) {
    std::size_t pivot = 0;
    while (row[pivot] == 0)
      ++pivot;
    for (std::size_t c = 0; c < pivot; ++c)
      if (target[c] != 0)
        return false;
    if (target[pivot] % row[pivot] != 0)
      return false;
    const long long f = target[pivot] / row[pivot];
    for (std::size_t k = 0; k < target.size(); ++k)
      target[k] -= f * row[k];
  }
  return std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; });
}

std::string class_name(const SigmaLetter& x) { return SigmaLetter{x.base, x.index, 1}.to_string(); }

} // namespace

AbelianizationResult abelianization_check(const std::vector<AbelianRelation>& relations) {
  const std::vector<SigmaLetter> finite = {A(0), A(1), B(0), B(1), Pi(0), Pi(1), PiBar(0), PiBar(1)};
  std::map<std::string, std::size_t> column;
  for (const auto& g : finite)
    column.emplace(class_name(g), 0);
  for (const auto& r : relations)
    for (const auto* w : {&r.lhs, &r.rhs})
      for (const auto& x : w->letters)
        column.emplace(class_name(x), 0);
  AbelianizationResult result;
  for (auto& [name, idx] : column) {
    idx = result.classes.size();
    result.classes.push_back(name);
  }
  const std::size_t cols = column.size();

  std::vector<Vec> rows;
  for (const auto& r : relations) {
    Vec v(cols, 0);
    for (const auto& x : r.lhs.letters)
      v[column.at(class_name(x))] += x.exponent;
    for (const auto& x : r.rhs.letters)
      v[column.at(class_name(x))] -= x.exponent;
    rows.push_back(std::move(v));
  }
  auto ech = echelon(std::move(rows), cols);
  for (const auto& g : finite) {
    Vec e(cols, 0);
    e[column.at(class_name(g))] = 1;
    if (!in_lattice(ech, e))
      result.surviving.push_back(class_name(g));
  }
  result.trivial = result.surviving.empty();
  return result;
}

AbelianizationResult abelianization_check() { return abelianization_check(abelianization_relations()); }

// ---------------------------------------------------------------- group expressions

GroupExpr GroupExpr::letter(SigmaLetter x) {
  GroupExpr e;
  e.kind_ = Kind::Letter;
  e.letter_ = x;
  return e;
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  GroupExpr e;
  e.kind_ = Kind::Product;
  e.children_ = std::move(factors);
  return e;
}

GroupExpr GroupExpr::inverse(GroupExpr inner) {
  GroupExpr e;
  e.kind_ = Kind::Inverse;
  e.children_.push_back(std::move(inner));
  return e;
}

GroupExpr GroupExpr::commutator(GroupExpr a, GroupExpr b) {
  GroupExpr e;
  e.kind_ = Kind::Commutator;
  e.children_.push_back(std::move(a));
  e.children_.push_back(std::move(b));
  return e;
}

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse_all() {
    auto e = expr();
    skip();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("group expression at offset " + std::to_string(pos_) + ": " + what);
  }

  bool at_atom_start() {
    skip();
    if (pos_ >= text_.size())
      return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || c == 'A' || c == 'B' || c == 'C' || c == 'p' || c == 'q';
  }

  GroupExpr expr() {
    std::vector<GroupExpr> terms;
    while (at_atom_start())
      terms.push_back(term());
    if (terms.size() == 1)
      return std::move(terms.front());
    return GroupExpr::product(std::move(terms));
  }

  GroupExpr term() {
    auto a = atom();
    skip();
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      a = GroupExpr::inverse(std::move(a));
      skip();
    }
    return a;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupExpr atom() {
    skip();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return GroupExpr::product({std::move(e)});
    }
    if (c == '[') {
      ++pos_;
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(']');
      return GroupExpr::commutator(std::move(a), std::move(b));
    }
    std::size_t start = pos_++;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start + 1)
      fail("letter without index");
    auto w = SigmaWord::parse(text_.substr(start, pos_ - start));
    return GroupExpr::letter(w.letters.front());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

GroupExpr GroupExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

std::string GroupExpr::to_string() const {
  switch (kind_) {
  case Kind::Letter: return letter_.to_string();
  case Kind::Inverse: {
    const auto& c = children_.front();
    if (c.kind_ == Kind::Letter || c.kind_ == Kind::Commutator)
      return c.to_string() + "'";
    return "(" + c.to_string() + ")'";
  }
  case Kind::Commutator:
    return "[" + children_[0].to_string() + ", " + children_[1].to_string() + "]";
  case Kind::Product: {
    std::string s;
    for (const auto& c : children_) {
      if (!s.empty())
        s += ' ';
      s += c.kind_ == Kind::Product && c.children_.size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
    }
    return s;
  }
  }
  return {};
}

SigmaWord GroupExpr::expand() const {
  switch (kind_) {
  case Kind::Letter: return SigmaWord{letter_};
  case Kind::Inverse: return children_.front().expand().inverse();
  case Kind::Commutator: {
    auto a = children_[0].expand();
    auto b = children_[1].expand();
    return a + b + a.inverse() + b.inverse();
  }
  case Kind::Product: {
    SigmaWord w;
    for (const auto& c : children_)
      w = w + c.expand();
    return w;
  }
  }
  return {};
}

nv::Element eval_commutator(const GroupExpr& e) { return sigma::eval_sigma(e.expand()); }

GroupExpr baker_k(int i) {
  switch (i) {
  case 1: return GroupExpr::parse("[A0', A1]");
  case 2: return GroupExpr::parse("A1 [p1', A0'] A1'");
  case 3: return GroupExpr::parse("[p1', q1']");
  case 4: return GroupExpr::parse("[q1', A0']");
  case 5: return GroupExpr::parse("[A1', p0']");
  case 6: return GroupExpr::parse("[A0', C1']");
  case 7: return GroupExpr::parse("[B1', p0']");
  case 8: return GroupExpr::parse("[p1', A0']");
  default: throw std::invalid_argument("commutator factor index must be in 1..8");
  }
}

namespace {

// Signed K indices of the three blocks; negative means inverse.
const std::vector<int> kConjugated = {6, 1, 2, 3, 4, 5, 1, 2, 8, -4};
const std::vector<int> kConjugatedCorrected = {6, 1, 2, 3, 4, 1, 2, 8, -4};
const std::vector<int> kMiddle = {-2, -1, 6, 6, 1, 2, 3, 4, 1, 2, 8, 7};
const std::vector<int> kInverted = {1, 2, 3, 4, 5, 1, 2};

const std::vector<int>& conjugated_block(BakerCommForm form) {
  return form == BakerCommForm::Printed ? kConjugated : kConjugatedCorrected;
}

} // namespace

std::size_t baker_comm_k_occurrences(BakerCommForm form) {
  return conjugated_block(form).size() + kMiddle.size() + kInverted.size();
}

GroupExpr baker_comm_expression(const BakerCommVariant& variant) {
  std::size_t occurrence = 0;
  auto block = [&](const std::vector<int>& ks) {
    std::vector<GroupExpr> factors;
    for (int k : ks) {
      const bool dropped = variant.drop_k_occurrence && *variant.drop_k_occurrence == occurrence;
      ++occurrence;
      if (dropped)
        continue;
      auto f = baker_k(std::abs(k));
      factors.push_back(k < 0 ? GroupExpr::inverse(std::move(f)) : std::move(f));
    }
    return GroupExpr::product(std::move(factors));
  };
  auto conjugated = block(conjugated_block(variant.form));
  auto middle = block(kMiddle);
  auto inverted = block(kInverted);

  std::vector<GroupExpr> top;
  if (variant.drop_conjugation) {
    top.push_back(std::move(conjugated));
  } else {
    const auto qbar1 = GroupExpr::letter(PiBar(1));
    top.push_back(qbar1);
    top.push_back(std::move(conjugated));
    top.push_back(GroupExpr::inverse(qbar1));
  }
  top.push_back(std::move(middle));
  top.push_back(GroupExpr::inverse(std::move(inverted)));
  return GroupExpr::product(std::move(top));
}

bool baker_comm_check(const BakerCommVariant& variant) {
  return nv::equals(eval_commutator(baker_comm_expression(variant)), sigma::generator(C(0)));
}

} // namespace thompson::rel
