// Acceptance battery runner: one line per criterion, nonzero exit on any
// failure.  Optional arguments select individual criteria by index (1..11).

#include <dtgap/suite.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
  using dtgap::AcceptanceResult;
  std::vector<AcceptanceResult> results;
  try {
    if (argc > 1) {
      for (int i = 1; i < argc; ++i)
        results.push_back(dtgap::run_acceptance_criterion(std::atoi(argv[i])));
    } else {
      results = dtgap::run_acceptance();
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance battery aborted: %s\n", e.what());
    return 1;
  }

  bool all_pass = true;
  double total = 0.0;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    total += r.seconds;
    std::printf("criterion %2d  %-26s  %s  (%7.2fs)%s%s\n", r.index, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds, r.detail.empty() ? "" : "  ",
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed in %.2fs\n",
              static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                [](const AcceptanceResult& r) { return r.pass; })),
              results.size(), total);
  return all_pass ? 0 : 1;
}
