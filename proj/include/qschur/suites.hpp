#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qschur {

struct Report {
  std::string id;
  std::string ref;  // the statement being replayed
  long checks = 0;
  long failed = 0;
  std::vector<std::string> failures;  // the first few, by name
  std::vector<std::string> notes;
  double seconds = 0;
  bool pass() const { return failed == 0 && failures.empty() && checks > 0; }
  void check(bool ok, const std::string& what);
};

struct SuiteDef {
  std::string id;
  std::string ref;
  std::function<void(Report&)> run;
};

/// In declaration order; ids match the acceptance criteria one to one.
const std::vector<SuiteDef>& suite_defs();
/// Throws std::out_of_range for an unknown id. Exceptions inside a suite
/// are recorded as failures.
Report run_suite(const std::string& id);

}  // namespace qschur
