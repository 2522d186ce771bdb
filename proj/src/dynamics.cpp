#include "thompson/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <omp.h>

namespace thompson::dyn {

using cantor::Brick;
using cantor::NumberedPattern;

namespace {

bool is_complete_prefix_code(const std::vector<Word>& leaves) {
  std::vector<Brick> bricks;
  bricks.reserve(leaves.size());
  for (const auto& w : leaves)
    bricks.emplace_back(std::vector<Word>{w});
  return cantor::validate_partition(NumberedPattern(1, std::move(bricks))).valid;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start)
      out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::string_view strip_label(std::string_view section, std::string_view label) {
  std::size_t pos = section.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos || section.substr(pos, label.size()) != label)
    throw ParseError("tree pair: expected section '" + std::string(label) + "'");
  return section.substr(pos + label.size());
}

} // namespace

TreePair::TreePair(std::vector<std::pair<Word, Word>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  if (pairs_.empty())
    throw std::invalid_argument("tree pair needs at least one leaf");
  if (!is_complete_prefix_code(domain_leaves()))
    throw std::invalid_argument("tree pair: domain leaves are not the leaves of a finite tree");
  if (!is_complete_prefix_code(range_leaves()))
    throw std::invalid_argument("tree pair: range leaves are not the leaves of a finite tree");
}

std::vector<Word> TreePair::domain_leaves() const {
  std::vector<Word> out;
  for (const auto& [d, r] : pairs_)
    out.push_back(d);
  return out;
}

std::vector<Word> TreePair::range_leaves() const {
  std::vector<Word> out;
  for (const auto& [d, r] : pairs_)
    out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

bool TreePair::is_permutation() const { return domain_leaves() == range_leaves(); }

PeriodicWord TreePair::apply(const PeriodicWord& x) const {
  for (const auto& [d, r] : pairs_)
    if (x.has_prefix(d))
      return x.strip(d).prepend(r);
  throw std::logic_error("tree pair: no leaf contains the point");
}

TreePair TreePair::parse(std::string_view text) {
  std::vector<std::string_view> sections;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == '|') {
      sections.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (sections.size() != 3)
    throw ParseError("tree pair: expected 'D: ... | R: ... | sigma: ...'");
  auto words = [](std::string_view body) {
    std::vector<Word> out;
    for (auto tok : split_ws(body))
      out.push_back(Word::parse(tok));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto dleaves = words(strip_label(sections[0], "D:"));
  auto rleaves = words(strip_label(sections[1], "R:"));
  std::vector<std::pair<Word, Word>> pairs;
  for (auto tok : split_ws(strip_label(sections[2], "sigma:"))) {
    auto arrow = tok.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("tree pair: sigma entry '" + std::string(tok) + "' lacks '->'");
    pairs.emplace_back(Word::parse(tok.substr(0, arrow)), Word::parse(tok.substr(arrow + 2)));
  }
  std::vector<Word> sd, sr;
  for (const auto& [d, r] : pairs) {
    sd.push_back(d);
    sr.push_back(r);
  }
  std::sort(sd.begin(), sd.end());
  std::sort(sr.begin(), sr.end());
  if (sd != dleaves)
    throw ParseError("tree pair: sigma domain does not match the leaves of D");
  if (sr != rleaves)
    throw ParseError("tree pair: sigma image does not match the leaves of R");
  try {
    return TreePair(std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string TreePair::to_string() const {
  std::string s = "D:";
  for (const auto& d : domain_leaves())
    s += ' ' + d.to_string();
  s += " | R:";
  for (const auto& r : range_leaves())
    s += ' ' + r.to_string();
  s += " | sigma:";
  for (const auto& [d, r] : pairs_)
    s += ' ' + d.to_string() + "->" + r.to_string();
  return s;
}

std::vector<Word> tree_leaves_from_text(std::string_view text) {
  std::vector<Word> out;
  for (auto tok : split_ws(text))
    out.push_back(Word::parse(tok));
  if (!is_complete_prefix_code(out))
    throw ParseError("leaf list is not the leaf set of a finite tree");
  return out;
}

nv::Element to_element(const TreePair& t) {
  std::vector<Brick> dom, ran;
  for (const auto& [d, r] : t.pairs()) {
    dom.emplace_back(std::vector<Word>{d});
    ran.emplace_back(std::vector<Word>{r});
  }
  return nv::Element::unchecked(NumberedPattern(1, std::move(dom)), NumberedPattern(1, std::move(ran)));
}

TreePair from_element(const nv::Element& f) {
  if (f.dim() != 1)
    throw std::invalid_argument("tree pairs describe 1-dimensional elements");
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < f.size(); ++i)
    pairs.emplace_back(f.domain().bricks()[i][0], f.range().bricks()[i][0]);
  return TreePair(std::move(pairs));
}

TreePair compose(const TreePair& g, const TreePair& f) {
  return from_element(nv::reduce(nv::compose(to_element(g), to_element(f))));
}

TreePair invert(const TreePair& t) {
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& [d, r] : t.pairs())
    pairs.emplace_back(r, d);
  return TreePair(std::move(pairs));
}

bool equals(const TreePair& a, const TreePair& b) { return nv::equals(to_element(a), to_element(b)); }

bool is_identity(const TreePair& t) {
  return std::all_of(t.pairs().begin(), t.pairs().end(), [](const auto& p) { return p.first == p.second; });
}

namespace {

std::vector<std::pair<Word, Word>> augmented_pairs(const TreePair& t, const std::set<Word>& at,
                                                   const std::vector<Word>& tree) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& [d, r] : t.pairs()) {
    if (!at.count(d)) {
      out.emplace_back(d, r);
      continue;
    }
    for (const auto& l : tree)
      out.emplace_back(d + l, r + l);
  }
  return out;
}

} // namespace

TreePair augment(const TreePair& t, const Word& u, const std::vector<Word>& tree) {
  auto leaves = t.domain_leaves();
  if (!std::binary_search(leaves.begin(), leaves.end(), u))
    throw std::invalid_argument("augment: " + u.to_string() + " is not a leaf of D");
  if (!is_complete_prefix_code(tree))
    throw std::invalid_argument("augment: attached tree is not given by its leaves");
  return TreePair(augmented_pairs(t, {u}, tree));
}

TreePair iterated_augment(const TreePair& t, const std::vector<Word>& chain,
                          const std::vector<Word>& tree) {
  if (chain.empty())
    throw std::invalid_argument("iterated_augment: empty chain");
  if (!is_complete_prefix_code(tree))
    throw std::invalid_argument("iterated_augment: attached tree is not given by its leaves");
  std::map<Word, Word> sigma(t.pairs().begin(), t.pairs().end());
  std::set<Word> members(chain.begin(), chain.end());
  if (members.size() != chain.size())
    throw std::invalid_argument("iterated_augment: chain repeats a leaf");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto it = sigma.find(chain[i]);
    if (it == sigma.end())
      throw std::invalid_argument("iterated_augment: " + chain[i].to_string() + " is not a leaf of D");
    if (i + 1 < chain.size() && it->second != chain[i + 1])
      throw std::invalid_argument("iterated_augment: chain does not follow sigma at " +
                                  chain[i].to_string());
  }
  if (members.count(sigma.at(chain.back())))
    throw std::invalid_argument("iterated_augment: chain closes into a cycle");
  return TreePair(augmented_pairs(t, members, tree));
}

// ---------------------------------------------------------------- reveal

std::string to_string(DomainLeafKind k) {
  switch (k) {
  case DomainLeafKind::Neutral: return "neutral";
  case DomainLeafKind::Repeller: return "repeller";
  case DomainLeafKind::Source: return "source";
  case DomainLeafKind::DomainOfAttraction: return "domain-of-attraction";
  }
  return {};
}

std::string to_string(RangeLeafKind k) {
  switch (k) {
  case RangeLeafKind::Neutral: return "neutral";
  case RangeLeafKind::Attractor: return "attractor";
  case RangeLeafKind::Sink: return "sink";
  case RangeLeafKind::RangeOfRepulsion: return "range-of-repulsion";
  }
  return {};
}

namespace {

std::set<Word> interior_nodes(const std::vector<Word>& leaves) {
  std::set<Word> out;
  for (const auto& w : leaves)
    for (std::size_t k = 0; k < w.size(); ++k)
      out.insert(w.prefix(k));
  return out;
}

/// Derived structure of a tree pair used by the reveal loop.
struct View {
  std::map<Word, Word> sigma, sigma_inv;
  std::set<Word> dleaves, rleaves, dint, rint;
  std::vector<Word> dr_roots; // leaves of R interior to D
  std::vector<Word> rd_roots; // leaves of D interior to R

  explicit View(const TreePair& t) {
    for (const auto& [d, r] : t.pairs()) {
      sigma.emplace(d, r);
      sigma_inv.emplace(r, d);
      dleaves.insert(d);
      rleaves.insert(r);
    }
    dint = interior_nodes(t.domain_leaves());
    rint = interior_nodes(t.range_leaves());
    for (const auto& r : rleaves)
      if (dint.count(r))
        dr_roots.push_back(r);
    for (const auto& d : dleaves)
      if (rint.count(d))
        rd_roots.push_back(d);
  }

  std::size_t imbalance() const {
    return static_cast<std::size_t>(
        std::count_if(dint.begin(), dint.end(), [&](const Word& w) { return !rint.count(w); }));
  }

  /// The proper prefix of x lying in `leaves`, if any.
  static std::optional<Word> owner(const Word& x, const std::set<Word>& leaves) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (leaves.count(x.prefix(k)))
        return x.prefix(k);
    return std::nullopt;
  }

  static std::vector<Word> below(const Word& root, const std::set<Word>& leaves) {
    std::vector<Word> out;
    for (const auto& w : leaves)
      if (w.size() > root.size() && root.is_prefix_of(w))
        out.push_back(w);
    return out;
  }

  static std::vector<Word> relative(const Word& root, const std::vector<Word>& leaves) {
    std::vector<Word> out;
    for (const auto& w : leaves)
      out.push_back(w.suffix_from(root.size()));
    return out;
  }

  auto measure() const { return std::make_tuple(imbalance(), dr_roots.size(), rd_roots.size()); }
};

enum class TraceEnd { Lambda, Type1, Type2, Type3 };

struct Trace {
  TraceEnd end;
  std::vector<Word> chain; // domain leaves, in the order σ carries them
  Word last;               // λ, or the node where the trace stopped
};

/// From a root ρ of D−R, follow σ⁻¹ through neutral leaves.
Trace trace_back(const View& v, const Word& rho) {
  std::vector<Word> seen;
  Word x = v.sigma_inv.at(rho);
  while (true) {
    if (v.rleaves.count(x)) {
      seen.push_back(x);
      x = v.sigma_inv.at(x);
      continue;
    }
    seen.push_back(x);
    std::reverse(seen.begin(), seen.end());
    if (v.rint.count(x))
      return {TraceEnd::Type1, seen, x};
    auto root = View::owner(x, v.rleaves);
    return {*root == rho ? TraceEnd::Lambda : TraceEnd::Type2, seen, x};
  }
}

/// From a root r of R−D, follow σ through neutral leaves.
Trace trace_forward(const View& v, const Word& r) {
  std::vector<Word> chain{r};
  Word y = v.sigma.at(r);
  while (v.dleaves.count(y)) {
    chain.push_back(y);
    y = v.sigma.at(y);
  }
  if (v.dint.count(y))
    return {TraceEnd::Type1, chain, y};
  auto root = View::owner(y, v.dleaves);
  return {*root == r ? TraceEnd::Lambda : TraceEnd::Type3, chain, y};
}

std::vector<Word> ordered(std::vector<Word> roots, RevealOrder order) {
  std::sort(roots.begin(), roots.end());
  if (order == RevealOrder::ReverseLexicographic)
    std::reverse(roots.begin(), roots.end());
  return roots;
}

const std::vector<Word> kCaret = {Word("0"), Word("1")};

/// Finds the next augmentation, or returns false at a revealed pair.
bool next_step(const View& v, RevealOrder order, RevealStep& step) {
  const auto dr = ordered(v.dr_roots, order);
  const auto rd = ordered(v.rd_roots, order);
  for (const auto& rho : dr) {
    auto tr = trace_back(v, rho);
    if (tr.end == TraceEnd::Type1) {
      step = {1, tr.chain, kCaret};
      return true;
    }
  }
  for (const auto& r : rd) {
    auto tr = trace_forward(v, r);
    if (tr.end == TraceEnd::Type1) {
      step = {1, tr.chain, kCaret};
      return true;
    }
  }
  for (const auto& rho : dr) {
    auto tr = trace_back(v, rho);
    if (tr.end == TraceEnd::Type2) {
      step = {2, tr.chain, View::relative(rho, View::below(rho, v.dleaves))};
      return true;
    }
  }
  for (const auto& r : rd) {
    auto tr = trace_forward(v, r);
    if (tr.end == TraceEnd::Type3) {
      step = {3, tr.chain, View::relative(r, View::below(r, v.rleaves))};
      return true;
    }
  }
  return false;
}

} // namespace

std::size_t imbalance(const TreePair& t) { return View(t).imbalance(); }

RevealedPair reveal(const TreePair& t, RevealOrder order) {
  RevealedPair out;
  TreePair cur = t;
  while (true) {
    View v(cur);
    RevealStep step;
    if (!next_step(v, order, step))
      break;
    TreePair next = iterated_augment(cur, step.chain, step.tree);
    if (!(View(next).measure() < v.measure()))
      throw std::logic_error("reveal: augmentation of type " + std::to_string(step.type) +
                             " did not decrease the measure");
    out.steps.push_back(std::move(step));
    cur = std::move(next);
  }

  View v(cur);
  out.pair = cur;
  out.imbalance = v.imbalance();
  for (const auto& rho : v.dr_roots) {
    auto tr = trace_back(v, rho);
    if (tr.end != TraceEnd::Lambda)
      throw std::logic_error("reveal: component without a distinguished leaf");
    Component c{rho, View::below(rho, v.dleaves), tr.last, tr.chain.size()};
    for (const auto& leaf : c.leaves) {
      out.domain_kinds[leaf] = leaf == c.lambda ? DomainLeafKind::Repeller : DomainLeafKind::Source;
      if (leaf != c.lambda)
        ++out.sources;
    }
    out.range_kinds[rho] = RangeLeafKind::RangeOfRepulsion;
    out.domain_components.push_back(std::move(c));
  }
  for (const auto& r : v.rd_roots) {
    auto tr = trace_forward(v, r);
    if (tr.end != TraceEnd::Lambda)
      throw std::logic_error("reveal: component without a distinguished leaf");
    Component c{r, View::below(r, v.rleaves), tr.last, tr.chain.size()};
    for (const auto& leaf : c.leaves) {
      out.range_kinds[leaf] = leaf == c.lambda ? RangeLeafKind::Attractor : RangeLeafKind::Sink;
      if (leaf != c.lambda)
        ++out.sinks;
    }
    out.domain_kinds[r] = DomainLeafKind::DomainOfAttraction;
    out.range_components.push_back(std::move(c));
  }
  for (const auto& d : v.dleaves)
    if (v.rleaves.count(d)) {
      out.domain_kinds[d] = DomainLeafKind::Neutral;
      out.range_kinds[d] = RangeLeafKind::Neutral;
    }

  std::set<Word> on_cycle;
  for (const auto& start : v.dleaves) {
    if (!v.rleaves.count(start) || on_cycle.count(start))
      continue;
    std::vector<Word> cycle{start};
    Word y = v.sigma.at(start);
    while (y != start && v.dleaves.count(y) && v.rleaves.count(y) && cycle.size() <= v.dleaves.size()) {
      cycle.push_back(y);
      y = v.sigma.at(y);
    }
    if (y == start) {
      on_cycle.insert(cycle.begin(), cycle.end());
      out.neutral_cycles.push_back(std::move(cycle));
    }
  }
  return out;
}

// ---------------------------------------------------------------- orbit report

std::string to_string(PeriodicKind k) {
  switch (k) {
  case PeriodicKind::Repelling: return "repelling";
  case PeriodicKind::Attracting: return "attracting";
  case PeriodicKind::NeutralInterval: return "neutral-interval";
  }
  return {};
}

std::string PeriodicRecord::location() const {
  return kind == PeriodicKind::NeutralInterval ? interval.to_string() : point.to_string();
}

std::string DynamicsReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : records)
    os << to_string(r.kind) << ' ' << (r.kind == PeriodicKind::NeutralInterval ? "interval=" : "point=")
       << r.location() << " period=" << r.period << '\n';
  os << "n_f=" << n_f << '\n';
  os << "no other finite orbits\n";
  return os.str();
}

namespace {

/// Cycle starting at its least interval.
std::vector<Word> rotate_to_least(std::vector<Word> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

/// Replaces pairs of cycles (w_1 0, ..., w_c 0), (w_1 1, ..., w_c 1) by
/// (w_1, ..., w_c) until no such pair remains.
std::vector<std::vector<Word>> coarsen_cycles(std::vector<std::vector<Word>> cycles) {
  bool merged = true;
  while (merged) {
    merged = false;
    std::map<Word, std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t p = 0; p < cycles[i].size(); ++p)
        where[cycles[i][p]] = {i, p};
    for (std::size_t i = 0; i < cycles.size() && !merged; ++i) {
      const auto& c = cycles[i];
      if (c.front().empty() || c.front()[c.front().size() - 1] != '0')
        continue;
      auto it = where.find(c.front().with_last_flipped());
      if (it == where.end() || it->second.first == i)
        continue;
      const auto& other = cycles[it->second.first];
      if (other.size() != c.size())
        continue;
      const std::size_t shift = it->second.second;
      bool aligned = true;
      for (std::size_t k = 0; k < c.size() && aligned; ++k) {
        const Word& a = c[k];
        aligned = !a.empty() && a[a.size() - 1] == '0' && other[(shift + k) % c.size()] == a.with_last_flipped();
      }
      if (!aligned)
        continue;
      std::vector<Word> parent;
      for (const auto& a : c)
        parent.push_back(a.prefix(a.size() - 1));
      const std::size_t j = it->second.first;
      cycles[i] = std::move(parent);
      cycles.erase(cycles.begin() + static_cast<long>(j));
      merged = true;
    }
  }
  for (auto& c : cycles)
    c = rotate_to_least(std::move(c));
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

} // namespace

DynamicsReport dynamics_report(const TreePair& t, RevealOrder order) {
  auto rp = reveal(t, order);
  DynamicsReport rep;
  // every point of the orbit through r·s^inf, where λ = r·s
  auto add_orbit = [&](PeriodicKind kind, const Component& c) {
    const PeriodicWord start(c.root, c.lambda.suffix_from(c.root.size()));
    PeriodicWord y = start;
    for (std::size_t k = 0; k < c.chain_length; ++k) {
      rep.records.push_back({kind, c.chain_length, y, Word()});
      y = t.apply(y);
    }
    if (y != start)
      throw std::logic_error("dynamics_report: orbit of " + start.to_string() + " does not close");
  };
  for (const auto& c : rp.domain_components)
    add_orbit(PeriodicKind::Repelling, c);
  for (const auto& c : rp.range_components)
    add_orbit(PeriodicKind::Attracting, c);
  for (const auto& cycle : coarsen_cycles(rp.neutral_cycles))
    for (const auto& w : cycle)
      rep.records.push_back({PeriodicKind::NeutralInterval, cycle.size(), PeriodicWord(), w});
  std::sort(rep.records.begin(), rep.records.end());
  for (const auto& r : rep.records)
    rep.n_f = std::max(rep.n_f, r.period);
  return rep;
}

std::size_t predicted_period(const DynamicsReport& r, const PeriodicWord& x) {
  for (const auto& rec : r.records) {
    if (rec.kind == PeriodicKind::NeutralInterval ? x.has_prefix(rec.interval) : x == rec.point)
      return rec.period;
  }
  return 0;
}

std::size_t orbit_period(const TreePair& t, const PeriodicWord& x, std::size_t cap) {
  PeriodicWord y = x;
  for (std::size_t k = 1; k <= cap; ++k) {
    y = t.apply(y);
    if (y == x)
      return k;
  }
  return 0;
}

// ---------------------------------------------------------------- census

namespace {

bool is_primitive(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0 && w.substr(d) + w.substr(0, d) == w)
      return false;
  return true;
}

std::vector<std::string> all_words(std::size_t len) {
  std::vector<std::string> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
    std::string w(len, '0');
    for (std::size_t i = 0; i < len; ++i)
      if (bits >> (len - 1 - i) & 1)
        w[i] = '1';
    out.push_back(std::move(w));
  }
  return out;
}

/// Orbit simulation of the window points in [begin, end). A trace stops early
/// when it meets a window point already known not to return within cap steps.
void census_range(const TreePair& t, const std::vector<PeriodicWord>& window,
                  const std::set<PeriodicWord>& in_window, std::size_t begin, std::size_t end,
                  std::size_t cap, std::map<PeriodicWord, std::size_t>& periodic) {
  std::set<PeriodicWord> escaped;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& x = window[i];
    if (periodic.count(x) || escaped.count(x))
      continue;
    std::vector<PeriodicWord> visited{x}; // window points on the trace
    PeriodicWord y = x;
    std::size_t period = 0;
    for (std::size_t k = 1; k <= cap; ++k) {
      y = t.apply(y);
      if (y == x) {
        period = k;
        break;
      }
      if (in_window.count(y)) {
        if (escaped.count(y))
          break;
        visited.push_back(y);
      }
    }
    for (const auto& p : visited) {
      if (period)
        periodic[p] = period;
      else
        escaped.insert(p);
    }
  }
}

CensusResult finish(std::size_t window_points, std::map<PeriodicWord, std::size_t> periodic) {
  CensusResult r;
  r.window_points = window_points;
  r.periodic = std::move(periodic);
  for (const auto& [p, n] : r.periodic)
    r.max_period = std::max(r.max_period, n);
  return r;
}

} // namespace

std::vector<PeriodicWord> census_window(std::size_t max_pre, std::size_t max_period) {
  std::set<PeriodicWord> points;
  for (std::size_t plen = 1; plen <= max_period; ++plen)
    for (const auto& per : all_words(plen)) {
      if (!is_primitive(per))
        continue;
      for (std::size_t len = 0; len <= max_pre; ++len)
        for (const auto& pre : all_words(len))
          points.insert(PeriodicWord(Word(pre), Word(per)));
    }
  return {points.begin(), points.end()};
}

CensusResult census_serial(const TreePair& t, std::size_t max_pre, std::size_t max_period,
                           std::size_t cap) {
  auto window = census_window(max_pre, max_period);
  std::set<PeriodicWord> in_window(window.begin(), window.end());
  std::map<PeriodicWord, std::size_t> periodic;
  census_range(t, window, in_window, 0, window.size(), cap, periodic);
  return finish(window.size(), std::move(periodic));
}

CensusResult census(const TreePair& t, std::size_t max_pre, std::size_t max_period, std::size_t cap) {
  auto window = census_window(max_pre, max_period);
  std::set<PeriodicWord> in_window(window.begin(), window.end());
  std::map<PeriodicWord, std::size_t> periodic;
  // One contiguous block per thread: the escape and orbit memo is per block,
  // so finer chunking repeats most of the orbit walks.
  const auto chunks = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  const auto n = static_cast<long long>(chunks);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < n; ++c) {
    const std::size_t begin = window.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t end = window.size() * static_cast<std::size_t>(c + 1) / chunks;
    std::map<PeriodicWord, std::size_t> local;
    census_range(t, window, in_window, begin, end, cap, local);
#pragma omp critical
    periodic.insert(local.begin(), local.end());
  }
  return finish(window.size(), std::move(periodic));
}

// ---------------------------------------------------------------- simplicity

TreePair transposition(const Word& u, const Word& v) {
  if (!u.disjoint_from(v))
    throw std::invalid_argument("transposition: " + u.to_string() + " and " + v.to_string() +
                                " are nested");
  std::vector<Word> leaves{Word()};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const Word l = leaves[i];
      if ((l.is_prefix_of(u) && l != u) || (l.is_prefix_of(v) && l != v)) {
        leaves[i] = l + '0';
        leaves.insert(leaves.begin() + static_cast<long>(i) + 1, l + '1');
        changed = true;
        break;
      }
    }
  }
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& l : leaves)
    pairs.emplace_back(l, l == u ? v : l == v ? u : l);
  return TreePair(std::move(pairs));
}

std::vector<TreePair> permutation_factor(const TreePair& t) {
  std::vector<TreePair> factors;
  TreePair cur = t;
  while (!cur.is_permutation()) {
    View v(cur);
    auto exposed = [](const std::set<Word>& leaves) {
      std::optional<Word> best;
      for (const auto& w : leaves)
        if (!w.empty() && w[w.size() - 1] == '0' && leaves.count(w.with_last_flipped())) {
          Word parent = w.prefix(w.size() - 1);
          if (!best || parent < *best)
            best = parent;
        }
      return *best;
    };
    const Word u = exposed(v.dleaves);
    const Word w = exposed(v.rleaves);
    const Word a = v.sigma.at(u + '0');
    const Word b = v.sigma.at(u + '1');

    // π on the leaves of R: a -> w0, b -> w1, the rest in order.
    std::map<Word, Word> pi{{a, w + '0'}, {b, w + '1'}};
    std::vector<Word> rest_from, rest_to;
    for (const auto& r : v.rleaves) {
      if (r != a && r != b)
        rest_from.push_back(r);
      if (r != w + '0' && r != w + '1')
        rest_to.push_back(r);
    }
    for (std::size_t i = 0; i < rest_from.size(); ++i)
      pi[rest_from[i]] = rest_to[i];

    std::vector<std::pair<Word, Word>> p_inverse, shorter;
    for (const auto& [from, to] : pi)
      p_inverse.emplace_back(to, from);
    for (const auto& [d, r] : cur.pairs())
      if (d != u + '0' && d != u + '1')
        shorter.emplace_back(d, pi.at(r));
    shorter.emplace_back(u, w);
    factors.emplace_back(std::move(p_inverse));
    cur = TreePair(std::move(shorter));
  }
  factors.push_back(cur);
  return factors;
}

TreePair commutator(const TreePair& a, const TreePair& b) {
  return compose(a, compose(b, compose(invert(a), invert(b))));
}

ExtractedTransposition extract_proper_transposition(const TreePair& f) {
  const TreePair small = from_element(nv::reduce(to_element(f)));
  const std::pair<Word, Word>* moved = nullptr;
  for (const auto& p : small.pairs())
    if (p.first != p.second) {
      moved = &p;
      break;
    }
  if (!moved)
    throw std::invalid_argument("extract_proper_transposition: f is the identity");
  const Word& d = moved->first;
  const Word& e = moved->second;

  // f carries d·s onto e·s; pick s so that the two are not nested
  std::string s;
  if (d.is_prefix_of(e))
    s = e[d.size()] == '0' ? "1" : "0";
  else if (e.is_prefix_of(d))
    s = d[e.size()] == '0' ? "1" : "0";
  while (d.size() + s.size() < 3 || e.size() + s.size() < 3)
    s += '0';
  const Word u = d + Word(s);
  const Word v = e + Word(s);

  TranspositionCertificate cert{u, v, transposition(u + '0', u + '1'), transposition(u + '0', v + '0')};
  const TreePair h = commutator(cert.g, f);
  const TreePair k = commutator(cert.j, h);
  const TreePair direct = transposition(u, v);
  if (!equals(k, direct))
    throw std::logic_error("extract_proper_transposition: [j, [g, f]] is not the swap of " +
                           u.to_string() + " and " + v.to_string());
  return {direct, std::move(cert)};
}

} // namespace thompson::dyn
