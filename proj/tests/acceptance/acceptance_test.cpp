// Runs the nineteen acceptance criteria and prints one PASS/FAIL line each.
// CPERM_ACCEPTANCE_LEVEL=quick selects the reduced sizes; the default is full.
// Exit status is nonzero if any criterion or CLI check fails.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cperm/parallel.hpp"
#include "cperm/selftest.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CPERM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool report(const std::string& name, bool ok, const std::string& detail = {}) {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!ok && !detail.empty()) std::cout << ": " << detail;
  std::cout << '\n';
  return ok;
}

// Byte-identical CLI output for jobs 1 and 4, plus exit codes.
bool cli_checks() {
  bool ok = true;
  for (const std::string args : {"verify --id G-main-even --r 3 --n 2 --b 1", "verify --id D-odd-length --n 2",
                                  "verify --id B-GF-absinv --n 5", "series --id lin-posi2 --n 3 --max-degree 8"}) {
    const Run a = run(args + " --jobs 1");
    const Run b = run(args + " --jobs 4");
    ok &= report("cli jobs 1 vs 4: " + args, a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty());
  }
  const Run stats = run("stats --r 4 \"5 1[1] 3 4[2] 2[1] 6[3]\"");
  ok &= report("cli stats example", stats.status == 0 && stats.out.find("\"len_G\": 29") != std::string::npos &&
                                        stats.out.find("\"col\": 7") != std::string::npos);
  ok &= report("cli usage error exits 2", run("verify --id no-such-id --n 1").status == 2 &&
                                              run("stats --r 2 \"1 1\"").status == 2 && run("bogus").status == 2);
  return ok;
}

// Perturbing one right side must fail exactly the criteria checking that id, naming only it.
bool mutation_check() {
  cperm::SelftestOptions opt;
  opt.level = cperm::SelftestLevel::kQuick;
  opt.jobs = 1;
  opt.tamper = "B-GF-length";
  opt.only = {13, 14, 19};
  const auto rep = cperm::run_selftest(opt);
  bool ok = rep.criteria.size() == 3 && rep.criteria[0].pass && !rep.criteria[1].pass && !rep.criteria[2].pass;
  for (const auto& c : rep.criteria) {
    for (const auto& f : c.failures) ok = ok && f.rfind("B-GF-length ", 0) == 0;
  }
  return report("tampered right side fails only that id", ok);
}

}  // namespace

int main() {
  const char* env = std::getenv("CPERM_ACCEPTANCE_LEVEL");
  const bool quick = env != nullptr && std::string(env) == "quick";

  cperm::SelftestOptions opt;
  opt.level = quick ? cperm::SelftestLevel::kQuick : cperm::SelftestLevel::kFull;
  opt.jobs = cperm::default_jobs();
  opt.on_result = [](const cperm::CriterionResult& r) {
    std::cout << cperm::format_result(r, true) << '\n';
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
  };
  std::cout << "acceptance level: " << (quick ? "quick" : "full") << ", jobs " << opt.jobs << '\n';
  const auto rep = cperm::run_selftest(opt);

  bool ok = rep.all_pass() && rep.criteria.size() == static_cast<std::size_t>(cperm::kCriterionCount);
  ok &= cli_checks();
  ok &= mutation_check();
  std::cout << (ok ? "acceptance: all checks pass" : "acceptance: FAILURES") << '\n';
  return ok ? 0 : 1;
}
