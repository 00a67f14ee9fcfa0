// Command-line front end: list generators, evaluate class expressions, move
// classes along the morphisms, and machine-check the identity families.
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hassett/errors.hpp"
#include "hassett/expression.hpp"
#include "hassett/grid.hpp"
#include "hassett/lcm_models.hpp"
#include "hassett/morphisms.hpp"
#include "hassett/report_json.hpp"
#include "hassett/verify_runner.hpp"

namespace {

using namespace hassett;

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("HASSETTDIV_SEED");
  if (!raw || !*raw) return kDefaultSeed;
  std::string s(raw);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("HASSETTDIV_SEED must be an unsigned integer, got '" + s + "'");
    }
  }
  return std::strtoull(s.c_str(), nullptr, 10);
}

ModuliSpace make_space_arg(int genus, const std::string& weights) {
  return ModuliSpace(genus, WeightDatum::parse(weights));
}

ordered_json class_document(const DivisorClass& c) {
  ordered_json j;
  j["genus"] = c.space().genus();
  ordered_json weights = ordered_json::array();
  for (const Rational& w : c.space().weights().weights()) weights.push_back(w.str());
  j["weights"] = weights;
  j["class"] = class_to_json(c);
  j["expression"] = c.str();
  return j;
}

void print_class(const DivisorClass& c, bool json) {
  if (json) {
    std::cout << class_document(c).dump(2) << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
}

void print_pair(const PairClass& pair, bool json) {
  if (json) {
    ordered_json j;
    j["left"] = class_document(pair.left);
    j["right"] = class_document(pair.right);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "left  [" << pair.left.space().str() << "]: " << pair.left.str() << "\n";
    std::cout << "right [" << pair.right.space().str() << "]: " << pair.right.str() << "\n";
  }
}

void print_suite_text(const SuiteResult& suite) {
  int failed = 0;
  for (const VerificationReport& r : suite.reports) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.identity << " on " << r.space.str();
    for (const auto& [key, value] : r.params) std::cout << " " << key << "=" << value;
    std::cout << "\n";
    if (!r.passed) {
      ++failed;
      std::cout << "      difference: " << r.difference.str() << "\n";
      if (r.difference_right) {
        std::cout << "      difference (right): " << r.difference_right->str() << "\n";
      }
    }
  }
  std::cout << suite.reports.size() << " checks, " << failed << " failed\n";
}

struct CliState {
  bool verify_failed = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisor-class calculus on moduli spaces of weighted pointed curves"};
  app.require_subcommand(1);
  CliState state;

  std::uint64_t seed = 0;  // resolved after parsing env + flags
  bool json_out = false;
  int genus = 0;
  std::string weights, to_weights, class_expr, part;
  int side_genus = 0;
  std::string tau_text;

  auto add_space_opts = [&](CLI::App* cmd, bool need_class) {
    cmd->add_option("--g", genus, "genus")->required();
    cmd->add_option("--weights", weights, "comma-separated weights, e.g. 1,1/2");
    if (need_class) {
      cmd->add_option("--class", class_expr, "class expression, e.g. 13*lambda - 2*Dnod + psi")
          ->required();
    }
    cmd->add_flag("--json", json_out, "emit JSON");
  };

  // ---- generators ------------------------------------------------------
  auto* cmd_generators = app.add_subcommand("generators", "list the generators of a space");
  add_space_opts(cmd_generators, false);
  cmd_generators->callback([&] {
    ModuliSpace space = make_space_arg(genus, weights);
    if (json_out) {
      ordered_json arr = ordered_json::array();
      for (const Generator& gen : enumerate_generators(space)) arr.push_back(gen.str());
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const Generator& gen : enumerate_generators(space)) std::cout << gen.str() << "\n";
    }
  });

  // ---- eval ------------------------------------------------------------
  bool to_normal_form = false;
  auto* cmd_eval = app.add_subcommand("eval", "parse a class expression on a space");
  add_space_opts(cmd_eval, true);
  cmd_eval->add_flag("--normal", to_normal_form, "rewrite kappa away first");
  cmd_eval->callback([&] {
    ModuliSpace space = make_space_arg(genus, weights);
    DivisorClass c = parse_class_expression(space, class_expr);
    print_class(to_normal_form ? normal_form(c) : c, json_out);
  });

  // ---- map -------------------------------------------------------------
  auto* cmd_map = app.add_subcommand("map", "move a class along a morphism");
  cmd_map->require_subcommand(1);

  auto* m_push = cmd_map->add_subcommand("reduce-push", "pushforward along a weight reduction");
  add_space_opts(m_push, true);
  m_push->add_option("--to", to_weights, "target weights")->required();
  m_push->callback([&] {
    ModuliSpace source = make_space_arg(genus, weights);
    ModuliSpace target = make_space_arg(genus, to_weights);
    ReductionMap map(source, target);
    print_class(map.pushforward(parse_class_expression(source, class_expr)), json_out);
  });

  auto* m_pull = cmd_map->add_subcommand("reduce-pull", "pullback along a weight reduction");
  add_space_opts(m_pull, true);
  m_pull->add_option("--to", to_weights, "target weights (the class lives there)")->required();
  m_pull->callback([&] {
    ModuliSpace source = make_space_arg(genus, weights);
    ModuliSpace target = make_space_arg(genus, to_weights);
    ReductionMap map(source, target);
    print_class(map.pullback(parse_class_expression(target, class_expr)), json_out);
  });

  auto* m_forget = cmd_map->add_subcommand(
      "forget-pull", "pullback along forgetting the last section of --weights");
  add_space_opts(m_forget, true);
  m_forget->callback([&] {
    ModuliSpace source = make_space_arg(genus, weights);
    if (source.marks() < 1) throw InvalidMorphismError("no section to forget");
    std::vector<Rational> kept = source.weights().weights();
    kept.pop_back();
    ModuliSpace target(genus, WeightDatum(std::move(kept)));
    print_class(forgetful_pullback(source, parse_class_expression(target, class_expr)),
                json_out);
  });

  auto* m_nodal = cmd_map->add_subcommand("nodal-restrict",
                                          "restrict to a separating boundary divisor");
  add_space_opts(m_nodal, true);
  m_nodal->add_option("--side-genus", side_genus, "genus of the left side")->required();
  m_nodal->add_option("--part", part, "marks of the left side, e.g. {1,3}");
  m_nodal->callback([&] {
    ModuliSpace space = make_space_arg(genus, weights);
    NodalBoundaryMap map(space, side_genus, MarkSet::parse(part));
    print_pair(map.restrict(parse_class_expression(space, class_expr)), json_out);
  });

  auto* m_irr = cmd_map->add_subcommand("irr-restrict",
                                        "restrict to the non-separating boundary divisor");
  add_space_opts(m_irr, true);
  m_irr->callback([&] {
    ModuliSpace space = make_space_arg(genus, weights);
    print_class(irr_restriction(parse_class_expression(space, class_expr)), json_out);
  });

  auto* m_coin = cmd_map->add_subcommand("coincident-restrict",
                                         "restrict to a coincident-section locus");
  add_space_opts(m_coin, true);
  m_coin->add_option("--part", part, "sections forced to coincide, e.g. {1,2}")->required();
  m_coin->callback([&] {
    ModuliSpace space = make_space_arg(genus, weights);
    CoincidentMap map(space, MarkSet::parse(part));
    print_class(map.restrict(parse_class_expression(space, class_expr)), json_out);
  });

  // ---- delta -----------------------------------------------------------
  auto* cmd_delta = app.add_subcommand(
      "delta", "closed form of the pushed-forward delta class of a space");
  add_space_opts(cmd_delta, false);
  cmd_delta->callback([&] {
    ModuliSpace space = make_space_arg(genus, weights);
    print_class(delta_pushforward(space), json_out);
  });

  // ---- verify ----------------------------------------------------------
  std::string family;
  auto* cmd_verify = app.add_subcommand("verify", "check identity families");
  cmd_verify->add_option("family", family, "identity family name, or 'all'")->required();
  cmd_verify->add_option("--g", genus, "genus (with --weights: verify on one space only)");
  cmd_verify->add_option("--weights", weights, "weights of the single space");
  cmd_verify->add_option("--seed", seed, "sampling seed (default: HASSETTDIV_SEED or 1729)");
  cmd_verify->add_option("--tau", tau_text, "constant target weight for the constant-weight-pullback family");
  cmd_verify->add_option("--side-genus", side_genus, "single separating stratum: side genus");
  cmd_verify->add_option("--part", part, "single stratum / coincident subset marks");
  cmd_verify->add_flag("--json", json_out, "emit the full JSON report");
  cmd_verify->callback([&] {
    if (family != "all" && !is_identity_name(family)) {
      throw ParseError("unknown identity family '" + family + "'");
    }
    const bool genus_given = cmd_verify->count("--g") > 0;
    std::uint64_t use_seed = cmd_verify->count("--seed") > 0 ? seed : seed_from_env();
    SuiteResult suite;
    if (genus_given) {
      ModuliSpace space = make_space_arg(genus, weights);
      if (family == "all") {
        for (const std::string& name : identity_names()) {
          SuiteResult part_suite = run_identity_on_space(name, space, use_seed);
          for (VerificationReport& r : part_suite.reports) {
            suite.passed = suite.passed && r.passed;
            suite.reports.push_back(std::move(r));
          }
        }
      } else if (family == "constant-weight-pullback" && !tau_text.empty()) {
        VerificationReport r = verify_constant_weight_pullback(space, Rational::parse(tau_text));
        suite.passed = r.passed;
        suite.reports.push_back(std::move(r));
      } else if (family == "nodal-restriction" && !part.empty()) {
        VerificationReport r = verify_nodal_restriction(space, side_genus, MarkSet::parse(part));
        suite.passed = r.passed;
        suite.reports.push_back(std::move(r));
      } else if (family == "coincident-restriction" && !part.empty()) {
        VerificationReport r = verify_coincident_restriction(space, MarkSet::parse(part));
        suite.passed = r.passed;
        suite.reports.push_back(std::move(r));
      } else {
        suite = run_identity_on_space(family, space, use_seed);
      }
    } else {
      GridOptions options;
      options.seed = use_seed;
      if (family == "all") {
        suite = run_grid_suite(options);
      } else {
        for (const ModuliSpace& space : grid_spaces(options)) {
          SuiteResult part_suite = run_identity_on_space(family, space, options.seed);
          for (VerificationReport& r : part_suite.reports) {
            suite.passed = suite.passed && r.passed;
            suite.reports.push_back(std::move(r));
          }
        }
      }
    }
    if (json_out) {
      std::cout << suite_to_json(suite, use_seed).dump(2) << "\n";
    } else {
      print_suite_text(suite);
    }
    state.verify_failed = !suite.passed;
  });

  // ---- grid ------------------------------------------------------------
  auto* cmd_grid = app.add_subcommand("grid", "list the sampled verification grid");
  cmd_grid->add_option("--seed", seed, "sampling seed (default: HASSETTDIV_SEED or 1729)");
  cmd_grid->add_flag("--json", json_out, "emit JSON");
  cmd_grid->callback([&] {
    GridOptions options;
    options.seed = cmd_grid->count("--seed") > 0 ? seed : seed_from_env();
    std::vector<ModuliSpace> spaces = grid_spaces(options);
    if (json_out) {
      ordered_json arr = ordered_json::array();
      for (const ModuliSpace& s : spaces) {
        ordered_json w = ordered_json::array();
        for (const Rational& x : s.weights().weights()) w.push_back(x.str());
        arr.push_back(ordered_json{{"genus", s.genus()}, {"weights", w}});
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const ModuliSpace& s : spaces) std::cout << s.str() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return state.verify_failed ? 1 : 0;
}
