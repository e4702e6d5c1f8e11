#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fsb/kl.hpp"

namespace fsb::verify {

/// kInfo lines are reports that never affect the verdict.
enum class Status { kPass, kFail, kInsufficient, kInfo };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

struct Report {
  std::string id;     // "criterion-3", "osb", ...
  std::string title;
  Status status = Status::kPass;
  std::vector<Check> checks;
  double seconds = 0;
};

/// FAIL if any check failed, else INSUFFICIENT if any was, else PASS.
Status combine(const std::vector<Check>& checks);

struct Options {
  /// Overrides the default size range where a check has one.
  int max_n = -1;
  /// Restricts b-small to one d.
  int d = -1;
  /// Shared KL engine; a private one is made when null.
  kl::KLEngine* engine = nullptr;
  /// Progress messages (the CLI sends them to stderr).
  std::function<void(const std::string&)> progress;
};

constexpr int kNumCriteria = 9;
Report run_criterion(int k, const Options& options = {});

/// b-small, klb, osb, groebner. Throws std::invalid_argument for other names.
std::vector<Report> run_suite(const std::string& suite, const Options& options = {});
std::vector<std::string> suite_names();

}  // namespace fsb::verify
