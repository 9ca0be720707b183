#pragma once

#include "thagq/serialize.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thagq {

/// Bad command-line input (unknown suite, range over its cap). Exit code 2.
class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct FailureRecord {
  std::string check;
  std::map<std::string, long long> inputs;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite_name;
  std::map<std::string, long long> parameters;
  long long checks_run = 0;
  std::vector<FailureRecord> failures;
  /// Extra observations (minimal slack per k, clamped ranges, ...).
  std::map<std::string, std::string> notes;

  bool ok() const { return failures.empty(); }
};

struct SuiteLimits {
  int default_max_n;
  int cap;
};

/// Default and largest accepted max_n per suite; nullopt for unknown names.
std::optional<SuiteLimits> suite_limits(const std::string& suite);

/// The suite names accepted by run_verify, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite. UsageError on an unknown suite or an explicit
/// max_n above the suite cap; "all" clamps each member suite to its cap.
SuiteReport run_verify(const std::string& suite, std::optional<int> max_n = std::nullopt,
                       std::optional<int> max_k = std::nullopt);

/// {"suite", "range", "failures", "checked"} plus "notes" when present.
Json report_to_json(const SuiteReport& r);

}  // namespace thagq
