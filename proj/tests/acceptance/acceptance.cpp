// One line per acceptance criterion. All comparisons are exact (rational
// arithmetic), so the pinned tolerance is zero everywhere.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fsb/verify.hpp"

namespace {

constexpr double kTolerance = 0.0;

void print(const fsb::verify::Report& r, bool verbose) {
  std::printf("%-12s %-12s %-40s %8.2fs\n", r.id.c_str(), fsb::verify::to_string(r.status).c_str(), r.title.c_str(), r.seconds);
  for (const auto& c : r.checks) {
    if (!verbose && c.status != fsb::verify::Status::kFail) continue;
    std::printf("    %-12s %s%s%s\n", fsb::verify::to_string(c.status).c_str(), c.name.c_str(), c.detail.empty() ? "" : ": ",
                c.detail.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int criterion = 0;
  bool verbose = false;
  app.add_option("--criterion", criterion, "run one criterion (1..9); default all")
      ->check(CLI::Range(0, fsb::verify::kNumCriteria));
  app.add_flag("-v,--verbose", verbose, "print every check, not only failures");
  CLI11_PARSE(app, argc, argv);

  std::printf("tolerance: %g (exact rational comparison)\n", kTolerance);
  fsb::kl::KLEngine engine;
  fsb::verify::Options options;
  options.engine = &engine;
  bool ok = true;
  for (int k = 1; k <= fsb::verify::kNumCriteria; ++k) {
    if (criterion && k != criterion) continue;
    const auto r = fsb::verify::run_criterion(k, options);
    print(r, verbose);
    std::fflush(stdout);
    ok = ok && r.status == fsb::verify::Status::kPass;
  }
  return ok ? 0 : 1;
}
