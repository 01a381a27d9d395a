// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, wall-clock budgets enforced. The CLI binary path is taken from
// argv[1] for the end-to-end determinism checks.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cohfm/error.hpp"
#include "cohfm/isogeny.hpp"
#include "cohfm/ns_lattice.hpp"
#include "cohfm/spectral.hpp"
#include "cohfm/stability.hpp"
#include "cohfm/verify.hpp"

using namespace cohfm;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct CliResult {
  std::string output;
  int exit_code = -1;
};

CliResult run_cli(const std::string& args) {
  const std::string command = "'" + g_cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw Error("cannot run: " + command);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void criterion(int number, const std::string& name, long budget_ms,
               const std::function<void(std::vector<std::string>&)>& body) {
  std::vector<std::string> problems;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(problems);
  } catch (const std::exception& e) {
    problems.push_back(std::string("exception: ") + e.what());
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (budget_ms > 0 && elapsed > budget_ms)
    problems.push_back("took " + std::to_string(elapsed) + " ms, budget " +
                       std::to_string(budget_ms) + " ms");
  if (problems.empty()) {
    std::cout << "criterion " << number << " (" << name << "): PASS [" << elapsed << " ms]\n";
  } else {
    ++g_failures;
    std::cout << "criterion " << number << " (" << name << "): FAIL [" << elapsed << " ms]\n";
    for (const std::string& p : problems) std::cout << "    - " << p << "\n";
  }
}

void require(std::vector<std::string>& problems, bool ok, const std::string& what) {
  if (!ok) problems.push_back(what);
}

void require_suite(std::vector<std::string>& problems, const std::string& name) {
  const SuiteResult result = run_verification_suite(name);
  for (const CheckResult& check : result.checks)
    if (!check.pass)
      problems.push_back("suite " + name + ", check '" + check.name + "': " + check.detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  criterion(1, "ring tables", 1000, [](auto& problems) {
    require_suite(problems, "ring-V");
    require_suite(problems, "ring-Vdual");
    const RingModelPtr v = builtin_model("V");
    const RingModelPtr vd = builtin_model("Vdual");
    // spot-check the two unit point pairings
    require(problems,
            integrate(mul(v->basis_class("H"), v->basis_class("l"))) == 1 &&
                integrate(mul(v->basis_class("A"), v->basis_class("e"))) == 1,
            "unit point pairings on V");
    require(problems,
            integrate(mul(vd->basis_class("Hd"), vd->basis_class("Ed"))) == 1 &&
                integrate(mul(vd->basis_class("Ad"), vd->basis_class("ed"))) == 1,
            "unit point pairings on Vdual");
  });

  criterion(2, "isogeny laws", 1000, [](auto& problems) {
    require_suite(problems, "isogeny");
  });

  criterion(3, "transform table of basis sheaves", 1000, [](auto& problems) {
    require_suite(problems, "grr-table");
    // the two fractional coefficients must appear exactly
    const std::vector<FmTableRow>& table = fm_sheaf_table();
    require(problems, integrate(table[5].ch) == rat(8, 3), "ch3 of O_V(H) is 8/3");
    require(problems, integrate(table[5].image_ch) == rat(-1, 3),
            "point coefficient of the transform of O_V(H) is -1/3");
  });

  criterion(4, "transform matrix reconstruction and inversion", 1000, [](auto& problems) {
    require_suite(problems, "fm-matrix");
  });

  criterion(5, "spectral closed form, coefficients up to 50", 5000, [](auto& problems) {
    const RingModelPtr vd = builtin_model("Vdual");
    const std::size_t i_unit = vd->unit_index();
    const std::size_t i_ad = vd->index_of("Ad");
    const std::size_t i_ed_line = vd->index_of("Ed");
    for (long a = -50; a <= 50; ++a)
      for (long b = -50; b <= 50; ++b)
        for (long chi = -50; chi <= 50; ++chi) {
          const ChernCharacter image = apply_fm(spectral_character(a, b, chi));
          // a[Vd] + (chi - a)[Ad] - b[Ed], all other components zero
          bool ok = image[i_unit] == a && image[i_ad] == chi - a && image[i_ed_line] == -b;
          for (std::size_t i = 0; ok && i < vd->size(); ++i)
            if (i != i_unit && i != i_ad && i != i_ed_line) ok = image[i] == 0;
          if (!ok) {
            problems.push_back("mismatch at (" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(chi) + ")");
            return;
          }
        }
  });

  criterion(6, "no-go certificate and relaxed feasible set", 5000, [](auto& problems) {
    for (long rank : {4L, 5L}) {
      SearchBounds bounds;
      bounds.a_lo = bounds.a_hi = rank;
      bounds.b_lo = 0;
      bounds.b_hi = 64;
      bounds.chi_lo = -64;
      bounds.chi_hi = 64;
      const SearchReport report = enumerate_candidates(bounds, HeteroticConstraints::make(rank));
      require(problems, report.feasible.empty(),
              "rank " + std::to_string(rank) + ": feasible set not empty");
      require(problems, report.infeasible_within_bounds(),
              "rank " + std::to_string(rank) + ": infeasible flag not set");
      require(problems, report.certificate.find("c3 == 0") != std::string::npos,
              "rank " + std::to_string(rank) + ": universal certificate missing");
      require(problems,
              report.certificate.find("not merely within the scanned bounds") != std::string::npos,
              "certificate must quantify over the whole untwisted family");
      require(problems, report.scope_note.find("makes no statement") != std::string::npos,
              "report must state the certificate covers only this family");
      unsigned long long sum = report.feasible.size();
      for (auto r : report.rejected) sum += r;
      require(problems, sum == report.total, "rejection counts must sum to the total");
    }
    for (long rank : {4L, 5L}) {
      SearchBounds bounds;
      bounds.a_lo = bounds.a_hi = rank;
      bounds.b_lo = 0;
      bounds.b_hi = 64;
      bounds.chi_lo = -64;
      bounds.chi_hi = 64;
      HeteroticConstraints relaxed = HeteroticConstraints::make(rank, Rat(0));
      relaxed.anomaly_mode = AnomalyMode::ignore;
      const SearchReport report = enumerate_candidates(bounds, relaxed);
      bool exact_slice = report.feasible.size() == 65;
      for (const SpectralCandidate& c : report.feasible)
        exact_slice = exact_slice && c.a == rank && c.chi == rank && !c.twist;
      require(problems, exact_slice,
              "rank " + std::to_string(rank) + ": relaxed feasible set is not {(r, b, r)}");
    }
  });

  criterion(7, "euler characteristics", 1000, [](auto& problems) {
    require_suite(problems, "euler");
  });

  criterion(8, "scroll riemann-roch", 1000, [](auto& problems) {
    require_suite(problems, "scroll-rr");
  });

  criterion(9, "lattice calculus on the product of elliptic curves", 10000, [](auto& problems) {
    require_suite(problems, "lattice");
    require(problems, orbit_transitivity(16).missed.empty(),
            "orbit misses a generator at height 16");
    require(problems, reverse_schwarz_check(8).violations.empty(),
            "reverse Schwarz violation at height 8");
  });

  criterion(10, "ampleness and stability thresholds", 1000, [](auto& problems) {
    require_suite(problems, "stability");
  });

  criterion(11, "byte-identical output across runs and workers", 0, [](auto& problems) {
    if (g_cli_path.empty()) {
      problems.push_back("CLI path not supplied (argv[1])");
      return;
    }
    const CliResult verify1 = run_cli("verify all");
    const CliResult verify2 = run_cli("verify all");
    require(problems, verify1.exit_code == 0, "verify all must exit 0");
    require(problems, !verify1.output.empty() && verify1.output == verify2.output,
            "verify all output differs between runs");

    const CliResult search1 = run_cli("search --rank 4 --c3 6");
    const CliResult search2 = run_cli("search --rank 4 --c3 6");
    require(problems, search1.exit_code == 3, "infeasible search must exit 3");
    require(problems, !search1.output.empty() && search1.output == search2.output,
            "search output differs between runs");

    const CliResult serial = run_cli("search --rank 4 --c3 0 --anomaly ignore --workers 1");
    const CliResult parallel = run_cli("search --rank 4 --c3 0 --anomaly ignore --workers 8");
    require(problems, serial.exit_code == 0, "feasible search must exit 0");
    require(problems, !serial.output.empty() && serial.output == parallel.output,
            "worker count changed the search output");

    for (const char* command : {"chern table", "models", "lattice cone --height 8"}) {
      const CliResult first = run_cli(command);
      const CliResult second = run_cli(command);
      require(problems, first.exit_code == 0 && !first.output.empty(),
              std::string(command) + " must succeed");
      require(problems, first.output == second.output,
              std::string(command) + " output differs between runs");
    }
  });

  if (g_failures == 0) {
    std::cout << "all 11 acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria FAILED\n";
  return 1;
}
