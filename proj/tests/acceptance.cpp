// Acceptance runner: one pass/fail line per criterion.
//
// Usage: acceptance <path-to-hosc-cli> [work-dir]
// Criteria 1-9 run the check groups in-process at the quick grid (which is the
// acceptance grid); criterion 10 drives the CLI validate command end to end.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hosc/validation.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Line {
  int criterion;
  bool pass;
  std::string summary;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Proc {
  int exit_code = -1;
  std::string out;
};

Proc run(const std::string& cmd) {
  Proc r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* criterion_name(int c) {
  static const char* names[] = {"",
                                "moments",
                                "heisenberg",
                                "fisher",
                                "shannon",
                                "renyi/disequilibrium",
                                "hermite entropy",
                                "rydberg asymptotics",
                                "high-dimensional asymptotics",
                                "uncertainty suite",
                                "cli validate"};
  return names[c];
}

Line group_line(int criterion, const hosc::CheckGroup& group, double budget_s) {
  const auto t0 = Clock::now();
  std::vector<hosc::CheckResult> results;
  std::string error;
  try {
    results = group(hosc::ValidationOptions{});
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed = seconds_since(t0);
  int pass = 0, notes = 0;
  std::vector<std::string> failed;
  for (const auto& r : results) {
    if (r.status == hosc::CheckStatus::Pass) ++pass;
    if (r.status == hosc::CheckStatus::Note) ++notes;
    if (r.status == hosc::CheckStatus::Fail) failed.push_back(r.id + " (dev " + hosc::detail::fmt(r.max_deviation, 3) +
                                                              " > tol " + hosc::detail::fmt(r.tolerance, 3) + ")");
  }
  bool ok = error.empty() && failed.empty() && !results.empty();
  std::ostringstream s;
  s << pass << " checks pass";
  if (notes) s << ", " << notes << " note";
  if (criterion == 8) {
    const bool noted = std::any_of(results.begin(), results.end(), [](const auto& r) {
      return r.id == "highdim.shannon_scaling_adjudication" && r.status == hosc::CheckStatus::Note && !r.detail.empty();
    });
    if (!noted) {
      ok = false;
      s << "; Shannon-scaling adjudication report missing";
    }
  }
  char t[64];
  std::snprintf(t, sizeof t, "; %.2f s", elapsed);
  s << t;
  if (budget_s > 0) {
    std::snprintf(t, sizeof t, " (budget %.0f s)", budget_s);
    s << t;
    if (elapsed >= budget_s) ok = false;
  }
  if (!error.empty()) s << "; error: " << error;
  for (const auto& f : failed) s << "; FAIL " << f;
  return {criterion, ok, s.str()};
}

Line cli_line(const std::string& cli, const fs::path& work) {
  fs::create_directories(work);
  const fs::path r1 = work / "report_1.json", r2 = work / "report_2.json";
  auto validate = [&](const fs::path& report) {
    return run("'" + cli + "' validate --quick --report '" + report.string() + "' 2>&1");
  };
  const auto t0 = Clock::now();
  const Proc first = validate(r1);
  const double elapsed = seconds_since(t0);
  const Proc second = validate(r2);

  std::ostringstream s;
  bool ok = true;
  auto fail = [&](const std::string& why) {
    ok = false;
    s << "; " << why;
  };
  char t[64];
  std::snprintf(t, sizeof t, "quick preset %.2f s (budget 60 s)", elapsed);
  s << t;
  if (elapsed >= 60.0) fail("over budget");
  if (first.exit_code != 0) fail("exit code " + std::to_string(first.exit_code));
  const std::string b1 = read_file(r1), b2 = read_file(r2);
  if (b1.empty() || b1 != b2 || first.out != second.out) fail("re-run not byte-identical");
  else s << "; re-run byte-identical";

  static const std::set<std::string> errata = {
      "errata.alpha_prime_convention", "errata.hermite_entropy_domain",
      "errata.radial_ground_disequilibrium_constant", "errata.swave_angular_disequilibrium"};
  try {
    const auto report = nlohmann::json::parse(b1);
    std::set<std::string> discrepancies;
    int notes = 0, fails = 0;
    bool scaling_note = false;
    for (const auto& c : report.at("checks")) {
      for (const char* key : {"id", "status", "max_deviation", "tolerance"})
        if (!c.contains(key)) fail(std::string("check entry lacks ") + key);
      const std::string status = c.at("status");
      if (status == "paper_discrepancy") discrepancies.insert(c.at("id").get<std::string>());
      if (status == "note") {
        ++notes;
        scaling_note = scaling_note || c.at("id") == "highdim.shannon_scaling_adjudication";
      }
      if (status == "fail") ++fails;
    }
    s << "; " << discrepancies.size() << " paper_discrepancy, " << notes << " note, " << fails << " fail";
    if (discrepancies != errata) fail("paper_discrepancy set differs from the four documented errata");
    if (notes != 1 || !scaling_note) fail("expected exactly the Shannon-scaling note");
    if (fails) fail("validate reports failures");
  } catch (const std::exception& e) {
    fail(std::string("report unreadable: ") + e.what());
  }
  return {10, ok, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-hosc-cli> [work-dir]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "hosc_acceptance";

  const auto& groups = hosc::check_groups();
  std::vector<Line> lines;
  for (int c = 1; c <= 9; ++c) {
    const double budget = c == 1 ? 30.0 : c == 7 ? 300.0 : 0.0;
    lines.push_back(group_line(c, groups[c - 1], budget));
    const auto& l = lines.back();
    std::cout << (l.pass ? "PASS" : "FAIL") << "  criterion " << l.criterion << " (" << criterion_name(l.criterion)
              << "): " << l.summary << std::endl;
  }
  lines.push_back(cli_line(cli, work));
  const auto& l = lines.back();
  std::cout << (l.pass ? "PASS" : "FAIL") << "  criterion " << l.criterion << " (" << criterion_name(l.criterion)
            << "): " << l.summary << std::endl;

  const auto passed = std::count_if(lines.begin(), lines.end(), [](const Line& x) { return x.pass; });
  std::cout << passed << "/" << lines.size() << " criteria pass" << std::endl;
  return passed == static_cast<long>(lines.size()) ? 0 : 1;
}
