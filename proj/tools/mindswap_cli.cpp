// mindswap: solve, verify and search mind-swap machine plans.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse/usage error,
// 3 unsolvable, 4 search budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mindswap/infinite_machine.hpp"
#include "mindswap/plan_document.hpp"
#include "mindswap/plan_oracle.hpp"

namespace {

using namespace mindswap;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kUnsolvable = 3, kBudget = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(std::ostream& os, const VerificationSummary& v, std::size_t steps) {
  os << "steps: " << steps << "\n"
     << "product_ok: " << (v.product_ok ? "yes" : "no") << "\n"
     << "supports_distinct: " << (v.supports_distinct ? "yes" : "no") << "\n"
     << "outsider_in_every_move: " << (v.outsider_in_every_move ? "yes" : "no") << "\n";
  for (const auto& viol : v.violations)
    os << "violation at move " << viol.move_index << ": " << to_string(viol.kind) << " (" << viol.detail << ")\n";
  os << (v.clean() ? "clean" : "NOT clean") << "\n";
}

struct SolveArgs {
  std::string target;
  int m = 2;
  std::string solver = "auto";
  std::string out;
};

int run_solve(const SolveArgs& a) {
  const auto doc = solve_document(parse_cycles(a.target), a.m, a.solver);
  const auto text = to_json(doc);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(a.out, std::ios::binary) << text;
    print_report(std::cout, *doc.verification, doc.moves.size());
  }
  return doc.verification->clean() ? kOk : kVerifyFailed;
}

struct VerifyArgs {
  std::string plan;
  std::string target;
  bool json = false;
  bool allow_repeat = false;
};

int run_verify(const VerifyArgs& a) {
  auto doc = parse_document(read_file(a.plan));
  if (!a.target.empty()) doc.target = parse_cycles(a.target);
  auto rules = doc.rules();
  rules.require_distinct_supports = !a.allow_repeat;
  const auto summary = summarize(verify_plan(doc.target, doc.moves, rules));
  if (a.json) {
    doc.verification = summary;
    std::cout << to_json(doc);
  } else {
    std::cout << "target: " << doc.target.format() << "\n";
    print_report(std::cout, summary, doc.moves.size());
  }
  return summary.clean() ? kOk : kVerifyFailed;
}

struct OracleArgs {
  std::string target;
  int m = 3;
  std::size_t d = 1;
  std::size_t max_steps = 8;
  std::uint64_t budget = kDefaultNodeBudget;
};

int run_oracle(const OracleArgs& a) {
  const auto target = parse_cycles(a.target);
  SearchStats stats;
  const auto plan = search_min_plan(target, RuleSet::with_outsiders(a.m, a.d), a.max_steps, a.budget, &stats);
  std::cout << "target: " << target.format() << "\n"
            << "machine_size: " << a.m << ", outsiders: " << a.d << "\n";
  if (!plan) {
    std::cout << "none within bound " << a.max_steps << "\n";
  } else {
    std::cout << "minimal length: " << plan->size() << "\n"
              << "plan: " << (plan->empty() ? "(empty)" : format_plan(*plan)) << "\n";
  }
  std::cout << "nodes: " << stats.nodes << "\n";
  return kOk;
}

struct InfiniteArgs {
  std::size_t streams = 1;
  std::size_t k = 2;
  std::string sigma;
  std::uint64_t horizon = 8;
};

int print_swaps(const std::vector<TailMap>& swaps, const TailMap& target, std::uint64_t horizon) {
  const auto report = verify_infinite_plan(target, swaps);
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    std::cout << "Step " << i + 1 << " (" << to_string(report.kinds[i]) << "): " << swaps[i].render(horizon)
              << "\n";
    for (const auto& line : swaps[i].step_table(horizon)) std::cout << "  " << line << "\n";
    std::cout << "  domain: " << report.domains[i].render() << "\n"
              << "  participants: " << report.participants[i].render() << "\n";
  }
  std::cout << "composite: " << report.composite.render(horizon) << "\n"
            << "expected:  " << target.render(horizon) << "\n"
            << "participants distinct: " << (report.participants_distinct ? "yes" : "no") << "\n"
            << "equal: " << (report.composition_ok ? "yes" : "no") << "\n";
  return report.composition_ok && report.participants_distinct ? kOk : kVerifyFailed;
}

int run_shift3(const InfiniteArgs& a) {
  const auto z = CarrierPoint::named("z");
  std::vector<std::uint32_t> streams;
  for (std::uint32_t s = 0; s < a.streams; ++s) streams.push_back(s);
  const auto swaps = invert_multi_shift(streams, z);
  return print_swaps(swaps, forward_shift(streams).inverse().with_fixed(z), a.horizon);
}

int run_star(const InfiniteArgs& a) {
  if (a.k < 2) throw std::invalid_argument("--k must be at least 2");
  const auto z = CarrierPoint::named("z");
  std::vector<Element> els;
  for (std::size_t i = 1; i <= a.k; ++i) els.push_back(Element::insider(i));
  const Cycle c(els);
  std::cout << "sigma: " << Permutation::from_cycle(c).format() << "\n";
  const auto target = TailMap::stream_extension(Permutation::from_cycle(c).inverse()).with_fixed(z);
  return print_swaps(sigma_star(c, z), target, a.horizon);
}

int run_finitary2(const InfiniteArgs& a) {
  const auto sigma = parse_cycles(a.sigma);
  const auto z = CarrierPoint::named("z");
  std::cout << "sigma: " << sigma.format() << "\n";
  const auto target = TailMap::stream_extension(sigma.inverse()).with_fixed(z);
  return print_swaps(invert_finitary_two_step(sigma, z), target, a.horizon);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve, verify and search mind-swap machine plans"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Build a plan that undoes a target permutation");
  cmd_solve->add_option("--target,-t", solve.target, "Target in cycle notation, e.g. \"(1 2)(3 4 5)\"")->required();
  cmd_solve->add_option("--m", solve.m, "Machine size")->capture_default_str();
  cmd_solve->add_option("--solver", solve.solver, "auto, keeler2, general_m or optimal3")
      ->check(CLI::IsMember({"auto", "keeler2", "general_m", "optimal3"}))
      ->capture_default_str();
  cmd_solve->add_option("--out,-o", solve.out, "Write the plan document here instead of stdout");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check a plan document against the machine rules");
  cmd_verify->add_option("plan", verify.plan, "Plan document (JSON)")->required();
  cmd_verify->add_option("--target,-t", verify.target, "Override the document's target");
  cmd_verify->add_flag("--json", verify.json, "Print the document with a fresh verification block");
  cmd_verify->add_flag("--allow-repeat-supports", verify.allow_repeat, "Do not require distinct seat sets");

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "Exhaustive shortest-plan search on small targets");
  cmd_oracle->add_option("--target,-t", oracle.target, "Target in cycle notation")->required();
  cmd_oracle->add_option("--m", oracle.m, "Machine size")->capture_default_str();
  cmd_oracle->add_option("--d", oracle.d, "Number of outsiders")->capture_default_str();
  cmd_oracle->add_option("--max-steps", oracle.max_steps, "Longest plan to consider")->capture_default_str();
  cmd_oracle->add_option("--budget", oracle.budget, "Node budget")->capture_default_str();

  InfiniteArgs inf;
  auto* cmd_inf = app.add_subcommand("infinite", "Infinite machine constructions");
  cmd_inf->add_option("--horizon", inf.horizon, "Print stream points up to this index")->capture_default_str();
  cmd_inf->require_subcommand(1);
  auto* cmd_shift3 = cmd_inf->add_subcommand("shift3", "Undo the shift n -> n+1 in three uses per stream");
  cmd_shift3->add_option("--streams", inf.streams, "Number of shifted streams")->capture_default_str();
  auto* cmd_star = cmd_inf->add_subcommand("star", "Undo the cycle (a1 ... ak) in two uses");
  cmd_star->add_option("--k", inf.k, "Cycle length")->capture_default_str();
  auto* cmd_fin = cmd_inf->add_subcommand("finitary2", "Undo a finitary permutation in two uses");
  cmd_fin->add_option("--sigma,-s", inf.sigma, "Permutation of a1, a2, ...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_oracle) return run_oracle(oracle);
    if (*cmd_shift3) return run_shift3(inf);
    if (*cmd_star) return run_star(inf);
    if (*cmd_fin) return run_finitary2(inf);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsolvableError& e) {
    std::cerr << "unsolvable: " << e.what() << "\n";
    return kUnsolvable;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedComposition& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
