#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "svt/twist.hpp"

namespace svt {

/// Parameters of one verification run. Unset fields fall back to per-suite
/// defaults chosen so that each suite covers its full reference grid.
struct SuiteSpec {
  std::string suite_id = "all";
  std::vector<long> m_values;             // empty -> suite default
  std::optional<long> i_min, i_max;       // L-index bounds
  std::optional<long> k2_min, k2_max;     // doubled G-index bounds
  std::optional<int> order;               // t-truncation order
  std::vector<Rational> a_values;         // shift grid; empty -> suite default
  int max_order = 5;
  /// Test-only hook: perturbs the relations suite's expected structure
  /// constants so that failure reporting is observable.
  bool corrupt_structure_constant = false;
};

struct Failure {
  std::string params;
  std::string left;
  std::string right;
};

/// Outcome of a suite: exhaustive (never fail-fast) and deterministic apart
/// from wall_ms.
struct Report {
  std::string suite_id;
  long cases_run = 0;
  std::vector<Failure> failures;
  double wall_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Runs the named suite over the Cartesian product of its parameters, each
/// case computing both sides by independent routes and comparing canonical
/// forms exactly. Throws UnknownSuite / OrderTooLarge on bad specs.
Report run_suite(const SuiteSpec& spec);

/// (id, one-line description) for every suite run_suite accepts.
std::vector<std::pair<std::string, std::string>> list_suites();

nlohmann::json to_json(const Report& r);

/// Structured difference x - y with the first nonzero term singled out.
struct Diff {
  bool empty = true;
  std::string first;       // first nonzero term of the difference
  std::string difference;  // full difference, canonical form
};

Diff diff_report(const UeaElement& x, const UeaElement& y);
Diff diff_report(const TensorElement& x, const TensorElement& y);
Diff diff_report(const TSeries<UeaElement>& x, const TSeries<UeaElement>& y);
Diff diff_report(const TSeries<TensorElement>& x, const TSeries<TensorElement>& y);

}  // namespace svt
