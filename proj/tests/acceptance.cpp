// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Failing checks are listed below their criterion line. Exit status is 0
// only if every criterion passes.

#include <cstdio>
#include <string>

#include "glf/verify.hpp"

int main(int argc, char** argv) {
  const std::string budget = argc > 1 ? argv[1] : "default";
  const auto b = glf::verify::budget_preset(budget);
  int failed = 0;
  for (const auto& info : glf::verify::suites()) {
    if (info.criterion == 0) continue;
    const auto res = glf::verify::run_suite(info.name, b);
    const bool ok = res.pass();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %2d  %-22s %3zu checks, worst residual %.3e, %.1f s\n", ok ? "PASS" : "FAIL",
                info.criterion, info.name.c_str(), res.checks.size(), res.max_residual(), res.seconds);
    for (const auto& c : res.checks)
      if (!c.pass)
        std::printf("    failed: %s | %s | residual %.3e > %.3e %s\n", c.theorem.c_str(), c.test.c_str(), c.residual,
                    c.tolerance, c.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", failed == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failed == 0 ? 0 : 1;
}
