#include <set>     // for set
#include <string>  // for string

#include "catch_amalgamated.hpp"

#include "waning/suites.hpp"

using waning::run_suite;
using waning::SuiteOptions;

TEST_CASE("fixed function samples", "[suites]") {
  auto const family = waning::waning_family();
  REQUIRE(family.size() == 29);
  REQUIRE(family[0] == waning::WaningFn::const_omega());
  auto const sample = waning::waning_sample(50);
  REQUIRE(sample.size() == 50);
  REQUIRE(std::set<waning::WaningFn>(sample.begin(), sample.end()).size() == 50);
  for (size_t i = 0; i < family.size(); ++i) {
    REQUIRE(sample[i] == family[i]);
  }
}

TEST_CASE("suite examples", "[suites]") {
  REQUIRE(run_suite("census").passed());
  REQUIRE(run_suite("order", SuiteOptions{{}, 1, 50, 1}).passed());
  REQUIRE(run_suite("basis", SuiteOptions{5, 1, 200, 1}).passed());
  REQUIRE_THROWS_AS(run_suite("nonsense"), waning::UnknownSuite);
}

TEST_CASE("every suite passes on small settings", "[suites]") {
  for (auto const& name : waning::suite_names()) {
    INFO(name);
    // For embed and closure the sample is a size, so keep their defaults.
    bool const sized  = name == "embed" || name == "closure";
    auto const report = run_suite(name, SuiteOptions{4, 3, sized ? std::nullopt : std::optional<waning::Nat>(10), 1});
    REQUIRE(report.passed());
    REQUIRE(report.cases > 0);
  }
}

TEST_CASE("reports are deterministic in the worker count", "[suites][property]") {
  for (std::string const name : {"continuity", "basis", "dual"}) {
    auto const one  = run_suite(name, SuiteOptions{4, 7, 20, 1});
    auto const many = run_suite(name, SuiteOptions{4, 7, 20, 4});
    REQUIRE(one.to_json(false).dump() == many.to_json(false).dump());
    REQUIRE(one.to_text(false) == many.to_text(false));
  }
}

TEST_CASE("different seeds draw different cases", "[suites]") {
  auto const a = run_suite("dual", SuiteOptions{4, 1, 20, 1});
  auto const b = run_suite("dual", SuiteOptions{4, 2, 20, 1});
  REQUIRE(a.passed());
  REQUIRE(b.passed());
  REQUIRE(a.name == "dual");
}

TEST_CASE("closure oracle", "[suites]") {
  waning::GenFn const f{{5, waning::omega, 1}, 0, 0};
  REQUIRE(waning::detail::closure_closed_form(f, 0) == waning::ExtNat(5));
  REQUIRE(waning::detail::closure_closed_form(f, 1) == waning::ExtNat(4));
  REQUIRE(waning::detail::closure_closed_form(f, 2) == waning::ExtNat(1));
  REQUIRE(waning::detail::closure_closed_form(f, 3) == waning::ExtNat(0));
}

TEST_CASE("size limits", "[suites]") {
  REQUIRE_THROWS_AS(run_suite("embed", SuiteOptions{{}, 1, 6, 1}), waning::BoundTooLarge);
  REQUIRE_THROWS_AS(run_suite("closure", SuiteOptions{{}, 1, 7, 1}), waning::BoundTooLarge);
}

TEST_CASE("labelled posets", "[suites]") {
  REQUIRE(waning::detail::all_posets(1).size() == 1);
  REQUIRE(waning::detail::all_posets(2).size() == 3);
  REQUIRE(waning::detail::all_posets(3).size() == 19);
  REQUIRE(waning::detail::all_posets(4).size() == 219);
}
