#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "coalrank/fixtures.hpp"
#include "coalrank/io.hpp"
#include "coalrank/oracles.hpp"

namespace coalrank::cli {

namespace {

constexpr std::string_view kUsage =
    "usage: coalrank <command> [args]\n"
    "\n"
    "commands:\n"
    "  scores <file> --solution <id>          score table, one individual per line\n"
    "  rank <file> --solution <id>            tier string, or pairwise matrix when intransitive\n"
    "  compare <file> <x> <y> (--solution <id> | --all)\n"
    "                                         pair verdict under one or all parameter-free solutions\n"
    "  banzhaf <file> --t <1|2|3>             Banzhaf values, induced ranking, agreement check\n"
    "  oracle-verify <file>                   swap-count formula vs breadth-first search, per individual\n"
    "  fuzz <solution> <axiom> [--seed N] [--iters M]\n"
    "       [--expect-pass|--expect-fail] [--witness-out FILE]\n"
    "                                         randomized axiom check with replayable witnesses\n"
    "  suite                                  fixed counterexample and worked-example suite\n"
    "\n"
    "solutions: b1 b2 b3 bi tilde-b1 ab:<alpha>,<beta> nwl const\n"
    "           b1-tb:<ids> b1-colon:<ids> b1-colon-const b1-colon-nwl\n"
    "axioms:    nt econ ipp dcont dcont-star cu can mon\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string verdict_symbol(PairVerdict v) {
  switch (v) {
    case PairVerdict::FirstStrict:
      return ">";
    case PairVerdict::SecondStrict:
      return "<";
    case PairVerdict::Indifferent:
      return "=";
  }
  return "?";
}

std::string tier_string(const TiersResult& result) {
  std::string s;
  for (std::size_t i = 0; i < result.tiers.size(); ++i) {
    if (i > 0) s += " > ";
    for (std::size_t j = 0; j < result.tiers[i].size(); ++j) {
      if (j > 0) s += " = ";
      s += result.tiers[i][j].id();
    }
  }
  return s;
}

void print_relation(std::ostream& out, const PairwiseRelation& rel) {
  const TiersResult result = tiers(rel);
  if (result.transitive()) {
    out << tier_string(result) << "\n";
    return;
  }
  const auto& [a, b, c] = *result.witness;
  out << "intransitive: witness " << a.id() << "," << b.id() << "," << c.id()
      << "\n";
  const auto& ground = rel.ground();
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = i + 1; j < ground.size(); ++j) {
      out << ground[i].id() << " " << ground[j].id() << " "
          << verdict_symbol(rel.verdict(ground[i], ground[j])) << "\n";
    }
  }
}

std::int64_t parse_int_arg(const std::string& text, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

/// Splits args into positionals and --flag value pairs.
struct ParsedArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
  std::set<std::string> switches;
};

ParsedArgs parse_args(const std::vector<std::string>& args, std::size_t from,
                      const std::set<std::string>& value_flags,
                      const std::set<std::string>& switch_flags) {
  ParsedArgs parsed;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (switch_flags.contains(arg)) {
      parsed.switches.insert(arg);
    } else if (value_flags.contains(arg)) {
      if (i + 1 >= args.size()) {
        throw UsageError("flag " + arg + " needs a value");
      }
      parsed.flags[arg] = args[++i];
    } else if (arg.starts_with("--")) {
      throw UsageError("unknown flag " + arg);
    } else {
      parsed.positional.push_back(arg);
    }
  }
  return parsed;
}

bool has_scalar_score(const SolutionId& id) {
  switch (id.kind()) {
    case SolutionId::Kind::B1:
    case SolutionId::Kind::B2:
    case SolutionId::Kind::B3:
    case SolutionId::Kind::Bi:
    case SolutionId::Kind::TildeB1:
    case SolutionId::Kind::AlphaBeta:
      return true;
    default:
      return false;
  }
}

ScoreMap scores_for(const SolutionId& id, const CoalitionalRanking& r) {
  switch (id.kind()) {
    case SolutionId::Kind::B1:
      return score_b1(r);
    case SolutionId::Kind::B2:
      return score_b2(r);
    case SolutionId::Kind::B3:
      return score_b3(r);
    case SolutionId::Kind::Bi:
      return inversion_score(r);
    case SolutionId::Kind::TildeB1:
      return score_tilde_b1(r);
    case SolutionId::Kind::AlphaBeta:
      return score_alpha_beta(r, id.alpha(), id.beta());
    default:
      throw UsageError("solution '" + id.str() + "' has no scalar score");
  }
}

int banzhaf_cap() {
  const char* env = std::getenv("COALRANK_MAX_UNIVERSE");
  if (env == nullptr) return kBanzhafDefaultMaxUniverse;
  int cap = 0;
  const std::string text(env);
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap < 1) {
    throw UsageError("COALRANK_MAX_UNIVERSE must be a positive integer");
  }
  return cap;
}

int cmd_scores(const ParsedArgs& args, std::ostream& out) {
  if (args.positional.size() != 1 || !args.flags.contains("--solution")) {
    throw UsageError("scores needs a file and --solution");
  }
  const CoalitionalRanking r = load_ranking_file(args.positional[0]);
  const SolutionId id = SolutionId::parse(args.flags.at("--solution"));
  const ScoreMap scores = scores_for(id, r);
  for (const auto& [x, value] : scores.values()) {
    out << x.id() << " " << value.str() << "\n";
  }
  return 0;
}

int cmd_rank(const ParsedArgs& args, std::ostream& out) {
  if (args.positional.size() != 1 || !args.flags.contains("--solution")) {
    throw UsageError("rank needs a file and --solution");
  }
  const CoalitionalRanking r = load_ranking_file(args.positional[0]);
  const SolutionId id = SolutionId::parse(args.flags.at("--solution"));
  print_relation(out, evaluate(id, r));
  return 0;
}

int cmd_compare(const ParsedArgs& args, std::ostream& out) {
  if (args.positional.size() != 3) {
    throw UsageError("compare needs a file and two individuals");
  }
  const bool all = args.switches.contains("--all");
  if (all == args.flags.contains("--solution")) {
    throw UsageError("compare needs exactly one of --solution or --all");
  }
  const CoalitionalRanking r = load_ranking_file(args.positional[0]);
  const Individual x(args.positional[1]);
  const Individual y(args.positional[2]);
  std::vector<SolutionId> ids;
  if (all) {
    // The parameter-free catalog; order- and parameter-bearing solutions
    // need an explicit --solution.
    ids = {SolutionId::b1(),
           SolutionId::b2(),
           SolutionId::b3(),
           SolutionId::bi(),
           SolutionId::tilde_b1(),
           SolutionId::nwl(),
           SolutionId::constant(),
           SolutionId::b1_colon_const(),
           SolutionId::b1_colon_nwl()};
  } else {
    ids.push_back(SolutionId::parse(args.flags.at("--solution")));
  }
  for (const SolutionId& id : ids) {
    const PairVerdict v = evaluate(id, r).verdict(x, y);
    out << id.str() << ": " << x.id() << " " << verdict_symbol(v) << " "
        << y.id() << "\n";
  }
  return 0;
}

int cmd_banzhaf(const ParsedArgs& args, std::ostream& out) {
  if (args.positional.size() != 1 || !args.flags.contains("--t")) {
    throw UsageError("banzhaf needs a file and --t <1|2|3>");
  }
  const int t = static_cast<int>(parse_int_arg(args.flags.at("--t"), "--t"));
  if (t < 1 || t > 3) throw UsageError("--t must be 1, 2 or 3");
  const CoalitionalRanking r = load_ranking_file(args.positional[0]);
  const int cap = banzhaf_cap();
  for (const auto& x : r.universe()) {
    out << x.id() << " " << banzhaf(r, t, x, cap).str() << "\n";
  }
  const PairwiseRelation by_banzhaf = rank_by_banzhaf(r, t, cap);
  out << "ranking: " << tier_string(tiers(by_banzhaf)) << "\n";
  const SolutionId direct = t == 1   ? SolutionId::b1()
                            : t == 2 ? SolutionId::b2()
                                     : SolutionId::b3();
  const bool agree = by_banzhaf == evaluate(direct, r);
  out << "agreement: " << (agree ? "yes" : "no") << "\n";
  return agree ? 0 : 1;
}

int cmd_oracle_verify(const ParsedArgs& args, std::ostream& out) {
  if (args.positional.size() != 1) throw UsageError("oracle-verify needs a file");
  const CoalitionalRanking r = load_ranking_file(args.positional[0]);
  if (!is_linear(r)) {
    throw domain_error("oracle-verify needs a linear ranking");
  }
  const ScoreMap by_formula = inversion_score(r);
  bool all_ok = true;
  for (const auto& x : r.universe()) {
    const std::int64_t formula = by_formula.at(x).num();
    const std::int64_t oracle = swap_distance_oracle(r, x);
    const bool ok = formula == oracle;
    all_ok &= ok;
    out << x.id() << ": formula=" << formula << " oracle=" << oracle << " "
        << (ok ? "ok" : "MISMATCH") << "\n";
  }
  return all_ok ? 0 : 1;
}

std::string default_witness_path(const SolutionId& id, AxiomId axiom,
                                 std::uint64_t seed) {
  std::string name = "witness_" + id.str() + "_" +
                     std::string(axiom_name(axiom)) + "_seed" +
                     std::to_string(seed) + ".json";
  for (char& ch : name) {
    if (ch == ':' || ch == ',' || ch == '/') ch = '-';
  }
  return name;
}

int cmd_fuzz(const ParsedArgs& args, std::ostream& out) {
  if (args.positional.size() != 2) {
    throw UsageError("fuzz needs a solution and an axiom");
  }
  if (args.switches.contains("--expect-pass") &&
      args.switches.contains("--expect-fail")) {
    throw UsageError("--expect-pass and --expect-fail are exclusive");
  }
  const SolutionId id = SolutionId::parse(args.positional[0]);
  const AxiomId axiom = parse_axiom(args.positional[1]);
  GenParams params;
  if (args.flags.contains("--seed")) {
    params.seed =
        static_cast<std::uint64_t>(parse_int_arg(args.flags.at("--seed"), "--seed"));
  }
  std::uint64_t iters = 1000;
  if (args.flags.contains("--iters")) {
    const std::int64_t n = parse_int_arg(args.flags.at("--iters"), "--iters");
    if (n < 1) throw UsageError("--iters must be positive");
    iters = static_cast<std::uint64_t>(n);
  }
  const FuzzReport report = fuzz(id, axiom, params, iters);
  out << "fuzz solution=" << id.str() << " axiom=" << axiom_name(axiom)
      << " seed=" << params.seed << " iters=" << iters << "\n";
  out << "pass=" << report.passes << " fail=" << report.failures;
  if (report.first_failure_iteration.has_value()) {
    out << " first_fail_iter=" << *report.first_failure_iteration;
  }
  out << "\n";
  if (report.first_witness.has_value()) {
    const std::string path = args.flags.contains("--witness-out")
                                 ? args.flags.at("--witness-out")
                                 : default_witness_path(id, axiom, params.seed);
    save_witness_file(*report.first_witness, path);
    out << "witness: " << path << "\n";
  }
  const bool found = report.failures > 0;
  if (args.switches.contains("--expect-fail")) return found ? 0 : 1;
  return found ? 1 : 0;
}

int cmd_suite(std::ostream& out) {
  const FixtureReport report = run_fixture_suite();
  std::size_t ok_count = 0;
  for (const auto& fixture : report.fixtures) {
    out << fixture.id << " " << (fixture.ok ? "ok" : "UNEXPECTED") << " "
        << fixture.expected << " " << fixture.actual << "\n";
    if (!fixture.note.empty()) {
      out << "note " << fixture.id << ": " << fixture.note << "\n";
    }
    if (fixture.ok) ++ok_count;
  }
  out << "suite " << ok_count << "/" << report.fixtures.size() << " "
      << (report.all_ok() ? "ok" : "FAILED") << "\n";
  return report.all_ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& command = args[0];
    const std::set<std::string> no_switches;
    if (command == "scores") {
      return cmd_scores(parse_args(args, 1, {"--solution"}, no_switches), out);
    }
    if (command == "rank") {
      return cmd_rank(parse_args(args, 1, {"--solution"}, no_switches), out);
    }
    if (command == "compare") {
      return cmd_compare(parse_args(args, 1, {"--solution"}, {"--all"}), out);
    }
    if (command == "banzhaf") {
      return cmd_banzhaf(parse_args(args, 1, {"--t"}, no_switches), out);
    }
    if (command == "oracle-verify") {
      return cmd_oracle_verify(parse_args(args, 1, {}, no_switches), out);
    }
    if (command == "fuzz") {
      return cmd_fuzz(
          parse_args(args, 1, {"--seed", "--iters", "--witness-out"},
                     {"--expect-pass", "--expect-fail"}),
          out);
    }
    if (command == "suite") {
      if (args.size() != 1) throw UsageError("suite takes no arguments");
      return cmd_suite(out);
    }
    err << "unknown command '" << command << "'\n" << kUsage;
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coalrank::cli
