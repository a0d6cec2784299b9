#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "braidforge/errors.hpp"
#include "braidforge/verify.hpp"

using namespace braidforge;

TEST_CASE("scenario registry") {
  auto infos = list_scenarios();
  CHECK(infos.size() >= 60);
  for (std::size_t i = 0; i + 1 < infos.size(); ++i)
    CHECK(infos[i].id < infos[i + 1].id);
  for (const ScenarioInfo& s : infos) {
    CHECK(!s.anchor.empty());
    CHECK(!s.summary.empty());
  }
  CHECK_THROWS_AS(run_scenario("nope"), Error);
}

TEST_CASE("filters") {
  auto flat = run_all("lemma-3");
  CHECK(!flat.empty());
  for (const Report& r : flat) CHECK(r.scenario.rfind("lemma-3", 0) == 0);
  CHECK(run_all("nonexistent").empty());
}

TEST_CASE("single scenario runs and reports") {
  Report r = run_scenario("sec-2.2-abelianization-wb3");
  CHECK(r.passed());
  CHECK(r.anchor == "section 2.2");
  std::string text = report_text(r);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("invariants") != std::string::npos);
  std::string colored = report_text(r, true);
  CHECK(colored.find("\033[32m") != std::string::npos);
}

TEST_CASE("full suite passes and is deterministic") {
  std::vector<Report> a = run_all("");
  for (const Report& r : a) {
    INFO(r.scenario);
    CHECK(r.passed());
  }
  std::vector<Report> b = run_all("");
  auto scrub = [](std::vector<Report> rs) {
    for (Report& r : rs) r.wall_ms = 0;
    return reports_json(rs);
  };
  CHECK(scrub(a) == scrub(b));
  CHECK(scrub(a).find("\"all_pass\": true") != std::string::npos);
}
