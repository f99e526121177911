#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

// Verification suites shared by the command-line tool and the acceptance
// tests. Every group returns one result per claim; a failure carries the
// offending datum in `data`.
namespace eislat::suites {

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::fail;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

using Checks = std::vector<CheckResult>;
bool all_pass(const Checks& cs);  // skipped checks do not fail a group

struct Params {
  long bound = 3;
  std::uint64_t seed = 42;
};

Checks relations_checks();
Checks gram_checks();
Checks heisenberg_checks(std::uint64_t seed, std::size_t pairs = 10000);
Checks f3_checks();
Checks reduction_checks(std::uint64_t seed, std::size_t count = 1000, std::size_t max_len = 30);
Checks arrangement_scan_checks(long bound);
Checks arrangement_structure_checks();
Checks torsion_checks(std::uint64_t seed);
Checks milnor_checks();
Checks classification_checks();
Checks orbit_checks(std::uint64_t seed);

struct SuiteResult {
  std::string name;
  Checks checks;
  bool pass() const { return all_pass(checks); }
};

/// relations, translations, f3, reduction, arrangement, milnor, classify.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);  // also accepts "all"
/// Runs one suite, or all of them in manifest order for "all".
std::vector<SuiteResult> run(const std::string& name, const Params& p);

inline constexpr const char* kSchema = "eislat.report/1";
nlohmann::json report_json(const std::string& name, const Params& p, const std::vector<SuiteResult>& results);

}  // namespace eislat::suites
