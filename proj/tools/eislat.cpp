#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eislat/classify.hpp"
#include "eislat/io.hpp"
#include "eislat/suites.hpp"

using namespace eislat;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

int emit(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "eislat: cannot write " << path << "\n";
    return kFail;
  }
  out << text;
  return kOk;
}

int cmd_verify(const std::string& suite, const suites::Params& p, const std::string& json_path) {
  if (!suites::is_suite(suite)) {
    std::cerr << "eislat: unknown suite '" << suite << "'\n";
    return kUsage;
  }
  std::vector<suites::SuiteResult> results;
  const auto names = suite == "all" ? suites::suite_names() : std::vector<std::string>{suite};
  for (const auto& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = suites::run(name, p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& s : r) {
      std::size_t failed = 0;
      for (const auto& c : s.checks) failed += c.status == suites::Status::fail;
      std::cerr << (s.pass() ? "PASS " : "FAIL ") << s.name << ": " << s.checks.size() - failed << "/" << s.checks.size()
                << " checks (" << secs << " s)\n";
      for (const auto& c : s.checks)
        if (c.status == suites::Status::fail) std::cerr << "  failed: " << c.name << " " << c.detail << "\n";
    }
    results.insert(results.end(), r.begin(), r.end());
  }
  const json report = suites::report_json(suite, p, results);
  if (int rc = emit(report, json_path); rc != kOk) return rc;
  return report["status"] == "pass" ? kOk : kFail;
}

int cmd_reduce_null(const std::vector<std::string>& coords, const std::string& json_path) {
  const EVec v = io::parse_vector(coords);
  if (v.size() != 5) throw io::ParseError("expected 5 coordinates");
  const auto cert = gamma::reduce_null(v);
  std::string why;
  const bool ok = gamma::verify(cert, &why);
  json j = {{"schema", suites::kSchema}, {"certificate", io::to_json(cert)}, {"verified", ok}};
  if (!ok) j["why"] = why;
  if (int rc = emit(j, json_path); rc != kOk) return rc;
  return ok ? kOk : kFail;
}

int cmd_classify(const std::vector<std::string>& coords, const std::string& json_path) {
  const EVec v = io::parse_vector(coords);
  if (v.size() != 5) throw io::ParseError("expected 5 coordinates");
  const auto p = classify::classify_point(v);
  auto disc = [](const DiscGroup& g) {
    auto norms = json::array();
    for (const auto& x : g.norm_multiset()) norms.push_back(x.get_str());
    return json{{"order", g.cardinality.get_str()}, {"determinant", g.determinant.get_str()}, {"norms", norms}};
  };
  json j = {{"schema", suites::kSchema},
            {"vector", io::to_json(v)},
            {"norm", p.norm.get_si()},
            {"orthogonal_short_roots", p.orthogonal_short_roots},
            {"gluing",
             {{"complement", disc(p.gluing.complement)},
              {"line", disc(p.gluing.line)},
              {"orders_match", p.gluing.orders_match},
              {"complementary", p.gluing.complementary},
              {"glue_integral", p.gluing.glue_integral}}},
            {"name", p.name.empty() ? json(nullptr) : json(p.name)}};
  return emit(j, json_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Eisenstein-lattice computations.\n"
               "Coordinates are written like 3, -1+2w, 2-wb (w = omega, wb = its conjugate),\n"
               "either as separate arguments after -- or as one comma-separated list."};
  app.require_subcommand(1);

  suites::Params params;
  std::string suite = "all", json_path;
  std::string positional_suite;
  auto* verify = app.add_subcommand("verify", "run verification suites (relations, translations, f3, reduction, "
                                              "arrangement, milnor, classify, all)");
  verify->add_option("name", positional_suite, "suite name (same as --suite)");
  verify->add_option("--suite", suite, "suite name")->capture_default_str();
  verify->add_option("--bound", params.bound, "arrangement bound B on norm(r0)")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", params.seed, "random seed")->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report here instead of stdout");

  std::vector<std::string> coords;
  auto* reduce = app.add_subcommand("reduce-null", "reduce a primitive null vector (hyperbolic frame) to a unit times rho");
  reduce->add_option("coords", coords, "five coordinates (l1, l2, l3; mu, nu)")->required();
  reduce->add_option("--json", json_path, "write the certificate here instead of stdout");

  auto* cls = app.add_subcommand("classify", "classify a negative-norm vector of the diagonal frame");
  cls->add_option("coords", coords, "five coordinates (v0, v1, v2, v3, v4)")->required();
  cls->add_option("--json", json_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(positional_suite.empty() ? suite : positional_suite, params, json_path);
    if (*reduce) return cmd_reduce_null(coords, json_path);
    if (*cls) return cmd_classify(coords, json_path);
  } catch (const io::ParseError& e) {
    std::cerr << "eislat: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    std::cerr << "eislat: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
