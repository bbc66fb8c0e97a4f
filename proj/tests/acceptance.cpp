// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <cstdio>

#include <hybridspec/verify.hpp>

int main() {
  int failed = 0;
  for (const auto& r : hybridspec::verify::verify_suite()) {
    std::printf("criterion %2d  %-4s  %-18s %-48s %8.3f s\n", r.number, r.passed ? "PASS" : "FAIL", r.tag.c_str(), r.title.c_str(),
                r.runtime_seconds);
    for (const auto& c : r.checks)
      if (!c.passed)
        std::printf("               failed: %s (observed %.10g, expected %.10g, tolerance %.1e%s)\n", c.name.c_str(), c.observed,
                    c.expected, c.tolerance, c.relative ? " relative" : "");
    if (!r.error.empty()) std::printf("               error: %s\n", r.error.c_str());
    if (r.runtime_limit > 0 && r.runtime_seconds > r.runtime_limit)
      std::printf("               runtime above %.1f s\n", r.runtime_limit);
    failed += !r.passed;
  }
  std::printf("%d of 14 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
