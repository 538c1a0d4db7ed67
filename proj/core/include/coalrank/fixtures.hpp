#pragma once

#include <string>
#include <vector>

#include "coalrank/axioms.hpp"

namespace coalrank {

/// The three-journal ranking with individuals A, B, C.
CoalitionalRanking example1_ranking();
/// The three-individual ranking used by the alpha/beta comparisons.
CoalitionalRanking discussion_ranking();

/// Counterexample instances CE-1 .. CE-9; each is expected to fail its
/// axiom checker.
AxiomInstance fixture_ce(int number);

struct FixtureOutcome {
  std::string id;
  std::string title;
  std::string expected;  // "pass" or "fail"
  std::string actual;
  bool ok = false;
  std::string note;
};

struct FixtureReport {
  std::vector<FixtureOutcome> fixtures;
  bool all_ok() const;
};

/// Runs CE-1 .. CE-12: the nine counterexamples plus the worked-example
/// score assertions, the alpha/beta ordering assertions, and the linear
/// symmetric agreement sample.
FixtureReport run_fixture_suite();

}  // namespace coalrank
