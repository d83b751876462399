// Command-line front end. Exit codes: 0 ok, 1 identity sides differ or a
// selftest criterion fails, 2 usage error, 3 internal invariant breach.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "cperm/colored_permutation.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/identities.hpp"
#include "cperm/involutions.hpp"
#include "cperm/json_io.hpp"
#include "cperm/parallel.hpp"
#include "cperm/selftest.hpp"
#include "cperm/statistics.hpp"

namespace {

using namespace cperm;

constexpr int kExitUnequal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RestrictionTuple read_restriction(const std::string& path, int r) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open restriction file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("restriction file '" + path + "' is not valid JSON: " + e.what());
  }
  return restriction_from_json(j, r);
}

WindowStyle style_for(int r) { return r == 2 ? WindowStyle::kSigned : WindowStyle::kBrackets; }

std::optional<int> opt_if(const CLI::Option* o, int v) {
  return o->count() > 0 ? std::optional<int>(v) : std::nullopt;
}

TruncatedSeries poly_to_series(const Poly& p, int cap) {
  std::vector<mpz_class> c(static_cast<std::size_t>(cap) + 1);
  for (const auto& [e, coef] : p.terms()) {
    if (e.empty() || e[0] > static_cast<std::uint32_t>(cap)) continue;
    c[e[0]] = coef.coeffs().empty() ? mpz_class(0) : coef.coeffs()[0];
  }
  return TruncatedSeries(cap, std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored permutation statistics and signed folding identities"};
  app.require_subcommand(1);

  int jobs = default_jobs();
  int r = 1;
  int n = 0;
  int b = 0;
  int k_cap = 0;
  std::string window;
  std::string family = "sym";
  std::string restriction_file;
  std::size_t limit = 0;
  std::string tag;
  std::string id;
  std::string level = "quick";
  std::string tamper;
  std::vector<int> only;
  bool timings = false;

  auto* stats = app.add_subcommand("stats", "statistics of one colored permutation as JSON");
  stats->add_option("--r", r, "number of colors")->default_val(1)->check(CLI::Range(1, kMaxColors));
  stats->add_option("window", window, "window, e.g. \"5 1[1] 3\" or \"-2 1\"")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list a family, one window per line");
  enumerate_cmd->add_option("--family", family)->check(CLI::IsMember({"sym", "b", "d", "g"}))->default_val("sym");
  enumerate_cmd->add_option("--r", r)->default_val(1)->check(CLI::Range(1, kMaxColors));
  enumerate_cmd->add_option("--n", n)->required()->check(CLI::Range(0, kMaxLetters));
  enumerate_cmd->add_option("--restriction", restriction_file, "JSON restriction tuple");
  enumerate_cmd->add_option("--limit", limit, "stop after this many lines");

  auto* involute_cmd = app.add_subcommand("involute", "apply a sign-reversing involution");
  involute_cmd->add_option("--tag", tag)->required()->check(
      CLI::IsMember({"phi", "eta", "iota", "psi-b", "psi-d", "theta"}));
  involute_cmd->add_option("--r", r)->default_val(2)->check(CLI::Range(1, kMaxColors));
  involute_cmd->add_option("window", window)->required();

  auto* fixed_cmd = app.add_subcommand("fixed-points", "fixed points of an involution on its whole domain");
  fixed_cmd->add_option("--tag", tag)->required()->check(
      CLI::IsMember({"phi", "eta", "iota", "psi-b", "psi-d", "theta"}));
  fixed_cmd->add_option("--n", n, "window length of the domain")->required()->check(CLI::Range(0, kMaxLetters));
  fixed_cmd->add_option("--r", r)->default_val(2)->check(CLI::Range(1, kMaxColors));
  fixed_cmd->add_option("--restriction", restriction_file, "JSON restriction tuple (phi only)");

  auto* list_cmd = app.add_subcommand("list", "catalog of identities");

  auto* verify_cmd = app.add_subcommand("verify", "check one identity by exhaustive enumeration");
  verify_cmd->add_option("--id", id)->required();
  auto* r_opt = verify_cmd->add_option("--r", r);
  auto* n_opt = verify_cmd->add_option("--n", n);
  auto* b_opt = verify_cmd->add_option("--b", b);
  auto* k_opt = verify_cmd->add_option("--K,--max-degree", k_cap);
  verify_cmd->add_option("--restriction", restriction_file, "JSON restriction tuple");
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timings", timings, "include elapsed_ms");

  auto* series_cmd = app.add_subcommand("series", "compare a truncated generating series");
  series_cmd->add_option("--id", id)->required()->check(
      CLI::IsMember({"lin-posi2", "lin-nega2", "lin-nepo", "brenti-series"}));
  series_cmd->add_option("--n", n)->required();
  series_cmd->add_option("--max-degree,--K", k_cap)->required()->check(CLI::Range(0, 4096));
  series_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  selftest_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->default_val("quick");
  selftest_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  selftest_cmd->add_option("--only", only, "criterion numbers")->check(CLI::Range(1, kCriterionCount));
  selftest_cmd->add_flag("--timings", timings, "print seconds per criterion");
  selftest_cmd->add_option("--tamper", tamper, "perturb the right side of one identity")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*stats) {
      std::cout << dump(to_json(stat_bundle(parse_window(window, r))));
      return 0;
    }

    if (*enumerate_cmd) {
      FamilySpec spec;
      if (family == "sym") {
        spec = FamilySpec::symmetric(n);
      } else if (family == "d") {
        if (!restriction_file.empty()) throw UsageError("--restriction is not available for family d");
        spec = FamilySpec::even_signed(n);
      } else {
        const int order = family == "b" ? 2 : r;
        spec = family == "b" ? FamilySpec::hyperoctahedral(n) : FamilySpec::colored(r, n);
        if (!restriction_file.empty()) {
          const RestrictionTuple h = read_restriction(restriction_file, order);
          if (h.size() != n) throw UsageError("restriction length differs from --n");
          spec = FamilySpec::restricted(h);
        }
      }
      if (family == "sym" && !restriction_file.empty()) throw UsageError("--restriction needs family b or g");
      spec.validate();
      const WindowStyle style = style_for(spec.r);
      std::size_t printed = 0;
      std::string out;
      enumerate(spec, [&](const ColoredPermutation& p) {
        if (limit != 0 && printed >= limit) return;
        out += format_window(p, style);
        out += '\n';
        ++printed;
      });
      std::cout << out;
      return 0;
    }

    if (*involute_cmd) {
      const ColoredPermutation p = parse_window(window, r);
      std::cout << format_window(involute(parse_involution_tag(tag), p), style_for(r)) << '\n';
      return 0;
    }

    if (*fixed_cmd) {
      InvolutionDomain d{parse_involution_tag(tag), r, n, std::nullopt};
      if (!restriction_file.empty()) d.restriction = read_restriction(restriction_file, r);
      d.validate();
      std::string out;
      for (const auto& p : fixed_points(d)) {
        out += format_window(p, style_for(r));
        out += '\n';
      }
      std::cout << out;
      return 0;
    }

    if (*list_cmd) {
      Json a = Json::array();
      for (const auto& info : list_identities()) {
        Json e;
        e["id"] = info.id;
        e["description"] = info.description;
        e["lhs"] = info.lhs;
        e["rhs"] = info.rhs;
        e["required"] = info.required;
        e["optional"] = info.optional;
        a.push_back(e);
      }
      std::cout << dump(a);
      return 0;
    }

    if (*verify_cmd) {
      IdentityParams p;
      p.r = opt_if(r_opt, r);
      p.n = opt_if(n_opt, n);
      p.b = opt_if(b_opt, b);
      p.K = opt_if(k_opt, k_cap);
      if (!restriction_file.empty()) p.restriction = read_restriction(restriction_file, p.r.value_or(2));
      const IdentityReport rep = verify(id, p, VerifyOptions{jobs, {}});
      std::cout << dump(to_json(rep, timings));
      return rep.equal ? 0 : kExitUnequal;
    }

    if (*series_cmd) {
      IdentityParams p;
      p.n = n;
      p.K = k_cap;
      const IdentityReport rep = verify(id, p, VerifyOptions{jobs, {}});
      Json j;
      j["id"] = id;
      j["n"] = n;
      j["max_degree"] = k_cap;
      j["equal"] = rep.equal;
      j["lhs"] = to_json(poly_to_series(rep.lhs, k_cap));
      j["rhs"] = to_json(poly_to_series(rep.rhs, k_cap));
      std::cout << dump(j);
      return rep.equal ? 0 : kExitUnequal;
    }

    if (*selftest_cmd) {
      SelftestOptions opt;
      opt.level = level == "full" ? SelftestLevel::kFull : SelftestLevel::kQuick;
      opt.jobs = jobs;
      opt.tamper = tamper;
      opt.only = only;
      opt.on_result = [&](const CriterionResult& res) {
        std::cout << format_result(res, timings) << '\n';
        for (const auto& f : res.failures) std::cout << "    " << f << '\n';
        std::cout.flush();
      };
      const SelftestReport rep = run_selftest(opt);
      int failed = 0;
      for (const auto& c : rep.criteria) failed += c.pass ? 0 : 1;
      std::cout << (failed == 0 ? "all " + std::to_string(rep.criteria.size()) + " criteria pass"
                                : std::to_string(failed) + " of " + std::to_string(rep.criteria.size()) +
                                      " criteria fail")
                << '\n';
      return failed == 0 ? 0 : kExitUnequal;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
