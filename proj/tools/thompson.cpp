// thompson: command line front end for the nV toolkit.
//
// Exit status: 0 success or verified true, 1 verified false, 2 usage or
// parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thompson/baker.hpp"
#include "thompson/cantor.hpp"
#include "thompson/corpus.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/element.hpp"
#include "thompson/monoid.hpp"
#include "thompson/relations.hpp"
#include "thompson/sigma.hpp"

using namespace thompson;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

bool g_json = false;
std::string g_output;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A file path if such a file exists, otherwise the literal text.
std::string file_or_text(const std::string& arg) {
  if (arg == "-" || std::filesystem::is_regular_file(arg))
    return read_file(arg);
  return arg;
}

std::string first_line(const std::string& text) {
  auto end = text.find('\n');
  std::string line = text.substr(0, end);
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  return line;
}

/// The primary artifact goes to --output when given, else to stdout.
void emit_artifact(const std::string& text) {
  if (g_output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g_output);
  if (!out)
    throw ParseError("cannot write " + g_output);
  out << text;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

nv::Element load_element(const std::string& path) { return nv::Element::parse_file(read_file(path)); }

dyn::TreePair load_tree_pair(const std::string& arg) {
  return dyn::TreePair::parse(first_line(file_or_text(arg)));
}

pi::PatternSequence load_sequence(const std::string& arg) {
  return pi::PatternSequence::parse(first_line(file_or_text(arg)));
}

std::string verdict_word(bool v) { return v ? "true" : "false"; }

int report_verdict(bool v, const std::string& what) {
  if (g_json)
    emit_json({{"check", what}, {"result", v}});
  else
    std::cout << what << ": " << verdict_word(v) << '\n';
  return v ? kOk : kFalse;
}

json element_json(const nv::Element& f) {
  json pairs = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    pairs.push_back({{"domain", f.domain()[i].to_string()}, {"range", f.range()[i].to_string()}});
  return {{"dim", f.dim()}, {"pairs", pairs}};
}

int emit_element(const nv::Element& f) {
  if (g_json && g_output.empty())
    emit_json(element_json(f));
  else
    emit_artifact(f.to_file());
  return kOk;
}

std::string words_text(const std::vector<cantor::Word>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i)
    s += (i ? " " : "") + ws[i].to_string();
  return s;
}

json words_json(const std::vector<cantor::Word>& ws) {
  json a = json::array();
  for (const auto& w : ws)
    a.push_back(w.to_string());
  return a;
}

sigma::Base parse_base(const std::string& s) {
  if (s == "A")
    return sigma::Base::A;
  if (s == "B")
    return sigma::Base::B;
  throw ParseError("X and Y take A or B, got \"" + s + "\"");
}

std::string relation_line(const rel::InstanceResult& r) {
  return "family=" + std::to_string(r.instance.family) + " indices=" + r.instance.describe_indices() +
         (r.pass ? " pass" : " fail");
}

json relation_json(const rel::InstanceResult& r) {
  return {{"family", r.instance.family},
          {"indices", r.instance.describe_indices()},
          {"lhs", r.instance.lhs.to_string()},
          {"rhs", r.instance.rhs.to_string()},
          {"pass", r.pass}};
}

json report_json(const dyn::DynamicsReport& r) {
  json recs = json::array();
  for (const auto& p : r.records) {
    json j{{"kind", dyn::to_string(p.kind)}, {"period", p.period}};
    if (p.kind == dyn::PeriodicKind::NeutralInterval)
      j["interval"] = p.interval.to_string();
    else
      j["point"] = p.point.to_string();
    recs.push_back(j);
  }
  return {{"records", recs}, {"n_f", r.n_f}, {"no_other_finite_orbits", true}};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the higher dimensional Thompson groups nV"};
  app.require_subcommand(1);
  // Subcommands inherit this, so --json and -o may follow the verb.
  app.fallthrough();
  app.add_flag("--json", g_json, "Machine readable output");
  app.add_option("-o,--output", g_output, "Write the produced file here instead of stdout");

  std::function<int()> action;
  auto bind = [&](CLI::App* cmd, std::function<int()> f) {
    cmd->callback([&action, f] { action = f; });
  };

  // ------------------------------------------------------------ el
  auto* el = app.add_subcommand("el", "Elements of nV in the .el format");
  el->require_subcommand(1);
  std::string el_a, el_b, el_point;

  auto* el_compose = el->add_subcommand("compose", "g∘f, f applied first");
  el_compose->add_option("g", el_a)->required();
  el_compose->add_option("f", el_b)->required();
  bind(el_compose, [&] { return emit_element(nv::compose(load_element(el_a), load_element(el_b))); });

  auto* el_inverse = el->add_subcommand("inverse", "Inverse element");
  el_inverse->add_option("f", el_a)->required();
  bind(el_inverse, [&] { return emit_element(nv::invert(load_element(el_a))); });

  auto* el_equal = el->add_subcommand("equal", "Group equality of two elements");
  el_equal->add_option("a", el_a)->required();
  el_equal->add_option("b", el_b)->required();
  bind(el_equal, [&] { return report_verdict(nv::equals(load_element(el_a), load_element(el_b)), "equal"); });

  auto* el_identity = el->add_subcommand("identity", "Whether the element is the identity");
  el_identity->add_option("f", el_a)->required();
  bind(el_identity, [&] { return report_verdict(nv::is_identity(load_element(el_a)), "identity"); });

  auto* el_reduce = el->add_subcommand("reduce", "Merge paired sibling bricks");
  el_reduce->add_option("f", el_a)->required();
  bind(el_reduce, [&] { return emit_element(nv::reduce(load_element(el_a))); });

  auto* el_apply = el->add_subcommand("apply", "Image of a point, e.g. \"01(10);(10)\"");
  el_apply->add_option("f", el_a)->required();
  el_apply->add_option("point", el_point)->required();
  bind(el_apply, [&] {
    auto f = load_element(el_a);
    auto x = cantor::Point::parse(el_point);
    if (x.dim() != f.dim())
      throw ParseError("point dimension does not match the element");
    auto y = nv::apply(f, x);
    if (g_json)
      emit_json({{"point", x.to_string()}, {"image", y.to_string()}});
    else
      std::cout << y.to_string() << '\n';
    return kOk;
  });

  // ------------------------------------------------------------ word
  auto* word = app.add_subcommand("word", "Words over the generators A B C p q of 2V");
  word->require_subcommand(1);
  std::string word_arg;

  auto* word_eval = word->add_subcommand("eval", "Element of a word such as \"C0 A1' p0\"");
  word_eval->add_option("word", word_arg)->required();
  bind(word_eval, [&] { return emit_element(sigma::eval_sigma(sigma::SigmaWord::parse(word_arg))); });

  auto* word_decompose = word->add_subcommand("decompose", "Word for a 2-dimensional element");
  word_decompose->add_option("f", word_arg)->required();
  bind(word_decompose, [&] {
    auto w = sigma::decompose(load_element(word_arg));
    if (g_json)
      emit_json({{"word", w.to_string()}, {"length", w.size()}});
    else
      emit_artifact(w.to_string() + '\n');
    return kOk;
  });

  // ------------------------------------------------------------ monoid
  auto* monoid = app.add_subcommand("monoid", "The positive monoid of pattern sequences");
  monoid->require_subcommand(1);
  std::string mon_a, mon_b;

  auto emit_sequence = [](const pi::PatternSequence& s) {
    if (g_json && g_output.empty())
      emit_json({{"sequence", s.to_string()}, {"in_pi0", pi::in_pi0(s)}});
    else
      emit_artifact(s.to_string() + '\n');
    return kOk;
  };

  auto* mon_eval = monoid->add_subcommand("eval", "Pattern sequence of a word such as \"v0 h1 s0\"");
  mon_eval->add_option("word", mon_a)->required();
  bind(mon_eval, [&] { return emit_sequence(pi::eval_word(pi::MonoidWord::parse(mon_a))); });

  auto* mon_mul = monoid->add_subcommand("multiply", "Paste Q into P (files or literal sequences)");
  mon_mul->add_option("P", mon_a)->required();
  mon_mul->add_option("Q", mon_b)->required();
  bind(mon_mul, [&] { return emit_sequence(pi::multiply(load_sequence(mon_a), load_sequence(mon_b))); });

  auto* mon_pq = monoid->add_subcommand("pq", "Rewrite a word so that all splits precede all exchanges");
  mon_pq->add_option("word", mon_a)->required();
  bind(mon_pq, [&] {
    auto w = pi::rewrite_to_pq(pi::MonoidWord::parse(mon_a));
    if (g_json)
      emit_json({{"word", w.to_string()}});
    else
      emit_artifact(w.to_string() + '\n');
    return kOk;
  });

  auto* mon_check = monoid->add_subcommand("check", "Whether two words evaluate equally");
  mon_check->add_option("lhs", mon_a)->required();
  mon_check->add_option("rhs", mon_b)->required();
  bind(mon_check, [&] {
    return report_verdict(
        pi::check_monoid_relation(pi::MonoidWord::parse(mon_a), pi::MonoidWord::parse(mon_b)), "relation");
  });

  // ------------------------------------------------------------ relations
  auto* rels = app.add_subcommand("relations", "Relations among the generators of 2V");
  rels->require_subcommand(1);
  std::size_t max_index = 4;
  int family_id = 0;
  std::size_t fam_m = 0, fam_q = 0;
  std::string fam_x = "A", fam_y = "A";
  bool corrected = false;
  bool drop_cross = false;

  auto* rel_sweep = rels->add_subcommand("sweep", "Every family instance with indices up to a bound");
  rel_sweep->add_option("--max-index", max_index)->capture_default_str();
  bind(rel_sweep, [&] {
    auto report = rel::sweep_families(max_index);
    if (g_json) {
      json lines = json::array();
      for (const auto& r : report.results)
        lines.push_back(relation_json(r));
      emit_json({{"instances", lines}, {"passed", report.passed}, {"failed", report.failed}});
    } else {
      for (const auto& r : report.results)
        std::cout << relation_line(r) << '\n';
      std::cout << report.passed << " of " << report.results.size() << " instances hold\n";
      std::cout << (report.all_pass() ? "all families pass" : "some families fail") << '\n';
    }
    return report.all_pass() ? kOk : kFalse;
  });

  auto* rel_family = rels->add_subcommand("family", "One instance of one family");
  rel_family->add_option("id", family_id)->required()->check(CLI::Range(1, rel::kFamilyCount));
  rel_family->add_option("--m", fam_m);
  rel_family->add_option("--q", fam_q);
  rel_family->add_option("--x", fam_x)->check(CLI::IsMember({"A", "B"}));
  rel_family->add_option("--y", fam_y)->check(CLI::IsMember({"A", "B"}));
  bind(rel_family, [&] {
    rel::RelationInstance inst;
    try {
      inst = rel::instantiate(family_id, {fam_m, fam_q, parse_base(fam_x), parse_base(fam_y)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    rel::InstanceResult r{inst, rel::holds(inst.lhs, inst.rhs)};
    if (g_json)
      emit_json(relation_json(r));
    else
      std::cout << relation_line(r) << "  " << inst.lhs.to_string() << " = " << inst.rhs.to_string() << '\n';
    return r.pass ? kOk : kFalse;
  });

  auto* rel_baker = rels->add_subcommand("baker-comm", "The baker's map as a product of commutators");
  rel_baker->add_flag("--corrected", corrected, "Use the expression without the extra K5 factor");
  bind(rel_baker, [&] {
    rel::BakerCommVariant v;
    v.form = corrected ? rel::BakerCommForm::Corrected : rel::BakerCommForm::Printed;
    bool ok = rel::baker_comm_check(v);
    std::string expr = rel::baker_comm_expression(v).to_string();
    if (g_json)
      emit_json({{"form", corrected ? "corrected" : "printed"}, {"expression", expr}, {"equals_C0", ok}});
    else
      std::cout << "C0 = " << expr << "\n" << (corrected ? "corrected" : "printed")
                << " form: " << (ok ? "holds" : "does not hold") << '\n';
    return ok ? kOk : kFalse;
  });

  auto* rel_abel = rels->add_subcommand("abelianization", "Exponent-sum check that 2V is perfect");
  rel_abel->add_flag("--drop-cross-type", drop_cross, "Remove the relation mixing A and B letters");
  bind(rel_abel, [&] {
    auto relations = rel::abelianization_relations();
    if (drop_cross)
      std::erase_if(relations, [](const auto& r) { return r.name == rel::cross_type_relation_name(); });
    auto res = rel::abelianization_check(relations);
    if (g_json) {
      emit_json({{"relations", relations.size()}, {"trivial", res.trivial}, {"surviving", res.surviving}});
    } else {
      for (const auto& r : relations)
        std::cout << "relation " << r.name << '\n';
      if (res.trivial) {
        std::cout << "every generator class vanishes\n";
      } else {
        std::cout << "surviving classes:";
        for (const auto& s : res.surviving)
          std::cout << ' ' << s;
        std::cout << '\n';
      }
    }
    return res.trivial ? kOk : kFalse;
  });

  auto* rel_fg = rels->add_subcommand("finite-gen", "Rewrites behind finite generation");
  std::size_t fg_max = 3;
  rel_fg->add_option("--max-index", fg_max)->capture_default_str();
  bind(rel_fg, [&] {
    auto checks = rel::finite_generation_identities(fg_max);
    bool all = !checks.empty();
    json lines = json::array();
    for (const auto& c : checks) {
      all = all && c.pass;
      if (g_json)
        lines.push_back({{"name", c.name}, {"pass", c.pass}});
      else
        std::cout << c.name << (c.pass ? " pass" : " fail") << '\n';
    }
    if (g_json)
      emit_json({{"identities", lines}, {"all_pass", all}});
    return all ? kOk : kFalse;
  });

  // ------------------------------------------------------------ dyn
  auto* dynamics = app.add_subcommand("dyn", "Dynamics of elements of V given as .tp tree pairs");
  dynamics->require_subcommand(1);
  std::string tp_arg;
  bool reverse_order = false;
  auto order = [&] {
    return reverse_order ? dyn::RevealOrder::ReverseLexicographic : dyn::RevealOrder::Lexicographic;
  };

  auto* dyn_reveal = dynamics->add_subcommand("reveal", "Revealed representative and leaf classes");
  dyn_reveal->add_option("tp", tp_arg)->required();
  dyn_reveal->add_flag("--reverse", reverse_order, "Process components in reverse lexicographic order");
  bind(dyn_reveal, [&] {
    auto r = dyn::reveal(load_tree_pair(tp_arg), order());
    if (!g_output.empty())
      emit_artifact(r.pair.to_string() + '\n');
    if (g_json) {
      json comps = json::array();
      auto add = [&](const std::vector<dyn::Component>& cs, const char* side) {
        for (const auto& c : cs)
          comps.push_back({{"side", side},
                           {"root", c.root.to_string()},
                           {"lambda", c.lambda.to_string()},
                           {"chain_length", c.chain_length},
                           {"leaves", words_json(c.leaves)}});
      };
      add(r.domain_components, "D-R");
      add(r.range_components, "R-D");
      json cycles = json::array();
      for (const auto& c : r.neutral_cycles)
        cycles.push_back(words_json(c));
      json dk = json::object(), rk = json::object();
      for (const auto& [w, k] : r.domain_kinds)
        dk[w.to_string()] = dyn::to_string(k);
      for (const auto& [w, k] : r.range_kinds)
        rk[w.to_string()] = dyn::to_string(k);
      emit_json({{"pair", r.pair.to_string()},
                 {"imbalance", r.imbalance},
                 {"sources", r.sources},
                 {"sinks", r.sinks},
                 {"steps", r.steps.size()},
                 {"components", comps},
                 {"neutral_cycles", cycles},
                 {"domain_leaves", dk},
                 {"range_leaves", rk}});
      return kOk;
    }
    std::cout << r.pair.to_string() << '\n';
    std::cout << "imbalance=" << r.imbalance << " sources=" << r.sources << " sinks=" << r.sinks
              << " steps=" << r.steps.size() << '\n';
    for (const auto& s : r.steps)
      std::cout << "step type=" << s.type << " chain=" << words_text(s.chain) << " tree=" << words_text(s.tree)
                << '\n';
    for (const auto& c : r.domain_components)
      std::cout << "D-R root=" << c.root.to_string() << " lambda=" << c.lambda.to_string()
                << " chain_length=" << c.chain_length << " leaves=" << words_text(c.leaves) << '\n';
    for (const auto& c : r.range_components)
      std::cout << "R-D root=" << c.root.to_string() << " lambda=" << c.lambda.to_string()
                << " chain_length=" << c.chain_length << " leaves=" << words_text(c.leaves) << '\n';
    for (const auto& c : r.neutral_cycles)
      std::cout << "neutral cycle " << words_text(c) << '\n';
    for (const auto& [w, k] : r.domain_kinds)
      std::cout << "domain leaf " << w.to_string() << ' ' << dyn::to_string(k) << '\n';
    for (const auto& [w, k] : r.range_kinds)
      std::cout << "range leaf " << w.to_string() << ' ' << dyn::to_string(k) << '\n';
    return kOk;
  });

  auto* dyn_report = dynamics->add_subcommand("report", "Periodic orbits and the orbit bound n_f");
  dyn_report->add_option("tp", tp_arg)->required();
  dyn_report->add_flag("--reverse", reverse_order, "Process components in reverse lexicographic order");
  bind(dyn_report, [&] {
    auto r = dyn::dynamics_report(load_tree_pair(tp_arg), order());
    if (g_json && g_output.empty())
      emit_json(report_json(r));
    else
      emit_artifact(r.to_text());
    return kOk;
  });

  auto* dyn_factor = dynamics->add_subcommand("factor", "Factor into permutation tree pairs");
  dyn_factor->add_option("tp", tp_arg)->required();
  bind(dyn_factor, [&] {
    auto t = load_tree_pair(tp_arg);
    auto factors = dyn::permutation_factor(t);
    if (g_json && g_output.empty()) {
      json a = json::array();
      for (const auto& f : factors)
        a.push_back(f.to_string());
      emit_json({{"factors", a}});
    } else {
      std::string text;
      for (const auto& f : factors)
        text += f.to_string() + '\n';
      emit_artifact(text);
    }
    return kOk;
  });

  auto* dyn_trans = dynamics->add_subcommand("transposition", "Proper transposition in the normal closure");
  dyn_trans->add_option("tp", tp_arg)->required();
  bind(dyn_trans, [&] {
    auto t = load_tree_pair(tp_arg);
    if (dyn::is_identity(t))
      throw ParseError("the identity has trivial normal closure");
    auto e = dyn::extract_proper_transposition(t);
    const auto& c = e.certificate;
    if (!g_output.empty())
      emit_artifact(e.k.to_string() + '\n');
    if (g_json) {
      emit_json({{"k", e.k.to_string()},
                 {"u", c.u.to_string()},
                 {"v", c.v.to_string()},
                 {"g", c.g.to_string()},
                 {"j", c.j.to_string()}});
    } else {
      std::cout << e.k.to_string() << '\n'
                << "u=" << c.u.to_string() << " v=" << c.v.to_string() << '\n'
                << "g: " << c.g.to_string() << '\n'
                << "j: " << c.j.to_string() << '\n';
    }
    return kOk;
  });

  // ------------------------------------------------------------ baker
  auto* bk = app.add_subcommand("baker", "The baker's map as the two-sided shift");
  bk->require_subcommand(1);
  std::string bk_point;
  std::size_t bk_p = 1;
  std::size_t bk_count = 1000;

  auto* bk_orbit = bk->add_subcommand("orbit", "Orbit size of a point \"(λ)a.b(ρ)\" or a period word");
  bk_orbit->add_option("point", bk_point)->required();
  bind(bk_orbit, [&] {
    auto x = bk_point.find('.') == std::string::npos ? baker::TwoSidedPoint::periodic(cantor::Word::parse(bk_point))
                                                     : baker::TwoSidedPoint::parse(bk_point);
    auto n = baker::orbit_size(x);
    if (g_json) {
      json j{{"point", x.to_string()}};
      j["orbit_size"] = n ? json(*n) : json("infinite");
      emit_json(j);
    } else if (n) {
      std::cout << *n << '\n';
    } else {
      std::cout << "infinite orbit\n";
    }
    return kOk;
  });

  auto* bk_enum = bk->add_subcommand("enumerate", "Representatives of the orbits of size exactly p");
  bk_enum->add_option("p", bk_p)->required()->check(CLI::Range(1, 40));
  bind(bk_enum, [&] {
    auto reps = baker::enumerate_periodic_orbits(bk_p);
    if (g_json && g_output.empty()) {
      emit_json({{"p", bk_p}, {"count", reps.size()}, {"orbits", words_json(reps)}});
    } else {
      std::string text;
      for (const auto& w : reps)
        text += w.to_string() + '\n';
      emit_artifact(text);
    }
    return kOk;
  });

  auto* bk_verify = bk->add_subcommand("verify-shift", "Check the shift against C0 on random points");
  bk_verify->add_option("--count", bk_count)->capture_default_str();
  bind(bk_verify, [&] {
    auto seed = corpus::seed_from_env(20260101);
    corpus::Rng rng(seed);
    auto c0 = sigma::generator(sigma::C(0));
    std::size_t bad = 0;
    std::optional<std::string> witness;
    for (std::size_t i = 0; i < bk_count; ++i) {
      auto x = corpus::random_two_sided_point(rng, 6, 6);
      if (baker::to_point(baker::shift(x)) != nv::apply(c0, baker::to_point(x))) {
        ++bad;
        if (!witness)
          witness = x.to_string();
      }
    }
    if (g_json) {
      json j{{"seed", seed}, {"points", bk_count}, {"mismatches", bad}};
      if (witness)
        j["witness"] = *witness;
      emit_json(j);
    } else {
      std::cout << "seed=" << seed << " points=" << bk_count << " mismatches=" << bad << '\n';
      if (witness)
        std::cout << "witness " << *witness << '\n';
    }
    return bad == 0 ? kOk : kFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
