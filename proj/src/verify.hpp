#pragma once

#include "jsonio.hpp"

namespace fgf {

// What to run and with which knobs.  Non-positive tolerance or trials mean
// "use the registry default for each check".
struct CheckSpec {
  std::vector<std::string> check_ids;  // empty selects every registered check
  std::vector<std::string> groups;     // empty selects the check's roster
  std::uint64_t seed = 7;
  double tolerance = -1.0;
  int trials = -1;
  int max_level = 3;
  SolverConfig solver{};
};

struct GroupCheckResult {
  std::string group;
  double deviation = 0.0;
  bool pass = false;
  bool errored = false;
  std::string note;
  std::vector<SolverReport> certificates;
};

struct CheckReport {
  std::string check_id;
  std::string description;
  double tolerance = 0.0;
  int trials = 0;
  int max_level = 0;
  bool solver_backed = false;
  std::uint64_t seed = 0;
  double worst_deviation = 0.0;
  bool pass = false;
  double wall_ms = 0.0;  // informational only, excluded from reproducibility
  std::vector<GroupCheckResult> groups;
};

struct CheckInfo {
  std::string id;
  std::string description;
  double default_tolerance;
  int default_trials;
  bool solver_backed;
};

const std::vector<CheckInfo>& check_registry();
bool is_known_check(const std::string& id);

// Throws std::invalid_argument for an unknown id.
CheckReport run_check(const std::string& id, const CheckSpec& spec);

// Runs spec.check_ids, or the whole registry when empty.
std::vector<CheckReport> run_checks(const CheckSpec& spec);

Json reports_to_json(const std::vector<CheckReport>& reports,
                     const CheckSpec& spec);

bool all_pass(const std::vector<CheckReport>& reports);

// True when some failing check carries a non-converged solver certificate,
// i.e. the failure may be a solver artifact rather than a disproof.
bool any_failure_nonconverged(const std::vector<CheckReport>& reports);

}  // namespace fgf
