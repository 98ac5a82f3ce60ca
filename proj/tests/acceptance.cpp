// One line per acceptance criterion: the bounded check that backs it, its
// time limit, and PASS or FAIL.  Exit status is the number of failures.

#include <chrono>    // for milliseconds
#include <cstdio>    // for printf
#include <optional>  // for optional
#include <string>    // for string

#include "waning/waning.hpp"

namespace {

  struct Criterion {
    int                       id;
    char const*               title;
    char const*               suite;
    waning::SuiteOptions      options;
    std::chrono::milliseconds limit;
  };

  using namespace std::chrono_literals;
  using waning::SuiteOptions;

  Criterion const kCriteria[] = {
      {1, "census 2^c for c = 0..10", "census", SuiteOptions{{}, 1, 10, 1}, 1s},
      {2, "closure laws, prefix length <= 4", "closure", SuiteOptions{{}, 1, 4, 1}, 10s},
      {3, "neighbourhood basis on I_5, 200 cases", "basis", SuiteOptions{5, 1, 200, 1}, 60s},
      {4, "much_wan equality and T_f' refinements on I_5, 100 cases", "much-wan",
       SuiteOptions{5, 1, 100, 1}, 60s},
      {5, "continuity on I_5, 100 triples from I_3", "continuity", SuiteOptions{5, 1, 100, 0},
       300s},
      {6, "order dichotomy on the 50-function sample", "order", SuiteOptions{5, 1, 50, 1}, 10s},
      {7, "poset embedding on all 219 labelled posets with <= 4 elements", "embed",
       SuiteOptions{{}, 1, 4, 1}, 30s},
      {8, "chains 0..100 and 20 seeded enumerations", "chains", SuiteOptions{{}, 1, 20, 1}, 10s},
      {9, "wany identities on I_5", "remark", SuiteOptions{5, 1, {}, 1}, 10s},
      {10, "non-compactness witnesses, 20 cases", "compactness", SuiteOptions{{}, 1, 20, 1}, 5s},
      {11, "d_g homomorphism and injectivity on I_4, n <= 2", "d-map", SuiteOptions{4, 1, {}, 1},
       30s},
      {12, "dual symmetry on I_4, 50 descriptors", "dual", SuiteOptions{4, 1, 50, 1}, 10s},
  };

}  // namespace

int main() {
  int failures = 0;
  for (auto const& c : kCriteria) {
    std::string detail;
    bool        ok = false;
    try {
      auto const report = waning::run_suite(c.suite, c.options);
      ok = report.passed() && report.elapsed <= c.limit;
      if (c.id == 7) {
        auto const n4 = waning::detail::all_posets(4).size();
        ok            = ok && n4 == 219;
        detail        = ", " + std::to_string(n4) + " posets on 4 elements";
      }
      detail = std::to_string(report.cases) + " cases, "
               + std::to_string(report.counterexamples.size()) + " counterexamples" + detail + ", "
               + std::to_string(report.elapsed.count()) + " ms of "
               + std::to_string(c.limit.count()) + " ms";
      if (!report.passed()) {
        std::printf("%s", report.to_text().c_str());
      }
    } catch (std::exception const& e) {
      detail = std::string("threw: ") + e.what();
    }
    failures += ok ? 0 : 1;
    std::printf("criterion %2d  %-4s  %s (%s)\n", c.id, ok ? "PASS" : "FAIL", c.title, detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failures,
              std::size(kCriteria));
  return failures;
}
