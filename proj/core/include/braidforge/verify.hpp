#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidforge/rewriting.hpp"

namespace braidforge {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string scenario;
  std::string anchor;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> values;
  double wall_ms = 0.0;

  bool passed() const;
  void check(const std::string& name, bool ok, const std::string& detail = "");
  void value(const std::string& key, const std::string& val);
};

struct ScenarioInfo {
  std::string id;
  std::string anchor;
  std::string summary;
};

std::vector<ScenarioInfo> list_scenarios();
Report run_scenario(const std::string& id);
/// Runs every scenario whose id starts with the filter (all when empty),
/// in id order. Deterministic up to the timing fields.
std::vector<Report> run_all(const std::string& filter = "");

std::string report_text(const Report& r, bool color = false);
std::string reports_json(const std::vector<Report>& reports);

/// How a printed relation-family instance was located among the derived
/// relators: literally, through involution-flips of rho-type factors,
/// group-level only (certified by the free-group action oracle), or through
/// a corrected variant when the oracle refutes the printed form.
struct FamilyOutcome {
  int family = 0;
  std::size_t exact = 0;
  std::size_t flip_variant = 0;
  std::size_t group_only = 0;
  std::size_t corrected = 0;
  std::vector<std::string> missing;
  std::vector<std::string> notes;
};

struct Lemma22Result {
  std::vector<FamilyOutcome> families;
  bool trivializations_ok = false;
  std::vector<std::string> trivialization_notes;
  bool complete() const;
};

/// Matches the printed graded relation families (interior window) against a
/// windowed derived presentation of a welded commutator subgroup.
Lemma22Result match_lemma22(const DerivedPresentation& dp);

/// Abelianization of the windowed derived presentation, reported per
/// interior generator (|k| <= K-2): does its image die in the cokernel of
/// the relation matrix? Window-interior evidence only, by construction.
struct WindowedAbelianization {
  std::vector<std::string> killed;
  std::vector<std::string> survivors;
};
WindowedAbelianization windowed_interior_abelianization(
    const DerivedPresentation& dp);

/// Verifies the telescoping identity for every derived relator: expanding
/// the Schreier labels of tau(lambda r lambda^-1) freely reduces back to
/// the originating conjugate.
bool check_telescoping(const DerivedPresentation& dp, std::string* first_bad);

/// Printed relator lists of the index-4 flat derivations (words over the
/// a..h labels, with the freely-trivial a1/b1/f1 erased).
std::vector<Word> flat_expected_relators(int n, bool welded);

/// Printed expansion words of the index-4 Schreier generators, keyed by
/// label (e.g. c2 -> r1 s2 r1 s1).
std::vector<std::pair<std::string, Word>> flat_expected_expansions(int n);

}  // namespace braidforge
