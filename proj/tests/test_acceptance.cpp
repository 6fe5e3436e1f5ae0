#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "ovg/verify.hpp"

using namespace ovg;

// Full verification suite; prints one pass/fail line per criterion.
TEST_CASE("acceptance criteria") {
  AcceptanceOptions opt;
  opt.seed = 20240817;
  auto results = run_acceptance(opt);
  REQUIRE(results.size() == 12);
  for (const CriterionResult& r : results) {
    std::printf("%s\n", format_criterion_line(r).c_str());
    std::fflush(stdout);
    INFO(r.title, ": ", r.detail);
    CHECK(r.pass);
  }
}
