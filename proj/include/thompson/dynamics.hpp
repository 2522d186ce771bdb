#pragma once

// Tree pairs for V = 1V, augmentations, revealed representatives and the
// periodic orbit report, plus the constructive pieces of the simplicity
// argument for V (factoring into permutations, extracting a transposition).

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/cantor.hpp"
#include "thompson/element.hpp"

namespace thompson::dyn {

using cantor::PeriodicWord;
using cantor::Word;

/// A triple (D, σ, R) held as the list of pairs (d, σ(d)) over the leaves d
/// of D, sorted by d. The leaf sets of D and R are complete prefix codes.
class TreePair {
public:
  TreePair() : pairs_{{Word(), Word()}} {}

  /// Throws std::invalid_argument unless both sides are complete prefix codes
  /// without repeated leaves.
  explicit TreePair(std::vector<std::pair<Word, Word>> pairs);

  static TreePair identity() { return {}; }
  /// ".tp" form: "D: <leaves> | R: <leaves> | sigma: d->r ...".
  static TreePair parse(std::string_view text);
  std::string to_string() const;

  const std::vector<std::pair<Word, Word>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  std::vector<Word> domain_leaves() const;
  /// Sorted.
  std::vector<Word> range_leaves() const;

  /// D and R have the same leaves.
  bool is_permutation() const;

  PeriodicWord apply(const PeriodicWord& x) const;

  bool operator==(const TreePair&) const = default;

private:
  std::vector<std::pair<Word, Word>> pairs_;
};

/// Whitespace separated leaf words of a finite tree, e.g. "0 1" for a caret
/// and "e" for the trivial tree.
std::vector<Word> tree_leaves_from_text(std::string_view text);

nv::Element to_element(const TreePair& t);
/// Throws std::invalid_argument when f.dim() != 1.
TreePair from_element(const nv::Element& f);

TreePair compose(const TreePair& g, const TreePair& f);
TreePair invert(const TreePair& t);
bool equals(const TreePair& a, const TreePair& b);
bool is_identity(const TreePair& t);

/// Attaches the tree with leaf set `tree` at the domain leaf u and at σ(u).
/// Throws std::invalid_argument when u is not a domain leaf or `tree` is not
/// a complete prefix code.
TreePair augment(const TreePair& t, const Word& u, const std::vector<Word>& tree);

/// Augments at every u_i of a chain with u_{i+1} = σ(u_i) and σ(u_n) not in
/// the chain.
TreePair iterated_augment(const TreePair& t, const std::vector<Word>& chain,
                          const std::vector<Word>& tree);

// ---------------------------------------------------------------- reveal

enum class RevealOrder { Lexicographic, ReverseLexicographic };

enum class DomainLeafKind { Neutral, Repeller, Source, DomainOfAttraction };
enum class RangeLeafKind { Neutral, Attractor, Sink, RangeOfRepulsion };

std::string to_string(DomainLeafKind k);
std::string to_string(RangeLeafKind k);

/// A component of D−R (or R−D) in a revealed pair: root r, the leaves of
/// the component, the distinguished leaf λ and the number of steps of the
/// orbit path from λ to r (resp. r to λ).
struct Component {
  Word root;
  std::vector<Word> leaves;
  Word lambda;
  std::size_t chain_length = 0;
};

struct RevealStep {
  int type = 0; // 1, 2 or 3
  std::vector<Word> chain;
  std::vector<Word> tree;
};

struct RevealedPair {
  TreePair pair;
  std::vector<Component> domain_components; // D−R
  std::vector<Component> range_components;  // R−D
  std::vector<std::vector<Word>> neutral_cycles;
  std::map<Word, DomainLeafKind> domain_kinds;
  std::map<Word, RangeLeafKind> range_kinds;
  std::size_t imbalance = 0;
  std::size_t sources = 0;
  std::size_t sinks = 0;
  std::vector<RevealStep> steps;
};

/// Carets of D not in R.
std::size_t imbalance(const TreePair& t);

/// Applies type 1, 2 and 3 iterated augmentations until none applies. Each
/// step strictly decreases (imbalance, #components of D−R, #components of
/// R−D); a violation throws std::logic_error.
RevealedPair reveal(const TreePair& t, RevealOrder order = RevealOrder::Lexicographic);

// ---------------------------------------------------------------- orbit report

enum class PeriodicKind { Repelling, Attracting, NeutralInterval };

std::string to_string(PeriodicKind k);

/// A point of an isolated periodic orbit (every point of the orbit is
/// listed), or for NeutralInterval the interval named by `interval`, every
/// point of which has the given period.
struct PeriodicRecord {
  PeriodicKind kind;
  std::size_t period = 0;
  PeriodicWord point;
  Word interval;

  std::string location() const;
  auto operator<=>(const PeriodicRecord&) const = default;
};

/// Every finite orbit of f meets one of the records; n_f bounds their sizes.
struct DynamicsReport {
  std::vector<PeriodicRecord> records; // sorted
  std::size_t n_f = 0;

  std::string to_text() const;
  bool operator==(const DynamicsReport&) const = default;
};

/// Neutral cycles are coarsened by merging cycle pairs that are the two
/// halves of a single cycle, so the report does not depend on the revealed
/// representative.
DynamicsReport dynamics_report(const TreePair& t, RevealOrder order = RevealOrder::Lexicographic);

/// Whether the report predicts x to be periodic, and with which period.
std::size_t predicted_period(const DynamicsReport& r, const PeriodicWord& x);

/// Minimal period of x under t, or 0 when x does not return within cap steps.
std::size_t orbit_period(const TreePair& t, const PeriodicWord& x, std::size_t cap);

// ---------------------------------------------------------------- census

/// All canonical points pre(period) with |pre| <= max_pre, |period| <= max_period.
std::vector<PeriodicWord> census_window(std::size_t max_pre, std::size_t max_period);

struct CensusResult {
  std::size_t window_points = 0;
  std::map<PeriodicWord, std::size_t> periodic; // window points with finite orbit
  std::size_t max_period = 0;
};

/// Brute-force orbit simulation of every window point, up to cap steps.
/// OpenMP parallel over window points.
CensusResult census(const TreePair& t, std::size_t max_pre, std::size_t max_period,
                    std::size_t cap = 128);
CensusResult census_serial(const TreePair& t, std::size_t max_pre, std::size_t max_period,
                           std::size_t cap = 128);

// ---------------------------------------------------------------- simplicity

/// Smallest tree pair swapping the disjoint intervals u and v affinely.
TreePair transposition(const Word& u, const Word& v);

/// Permutation tree pairs P_1, ..., P_k with P_1∘...∘P_k = t.
std::vector<TreePair> permutation_factor(const TreePair& t);

struct TranspositionCertificate {
  Word u;
  Word v;
  TreePair g; // swaps u0 and u1
  TreePair j; // swaps u0 and v0
};

struct ExtractedTransposition {
  TreePair k; // [j, [g, f]], equal to the swap of u and v
  TranspositionCertificate certificate;
};

/// [a, b] = a b a⁻¹ b⁻¹.
TreePair commutator(const TreePair& a, const TreePair& b);

/// Throws std::invalid_argument when f is the identity; throws
/// std::logic_error if the commutator does not come out as the swap of u, v.
ExtractedTransposition extract_proper_transposition(const TreePair& f);

} // namespace thompson::dyn
