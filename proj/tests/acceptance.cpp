// Acceptance suite: one line per criterion, nonzero exit iff any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "normlab/block_matrix.hpp"
#include "normlab/bounds.hpp"
#include "normlab/commands.hpp"
#include "normlab/generators.hpp"
#include "normlab/linalg.hpp"
#include "normlab/rng.hpp"
#include "normlab/suites.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace normlab;
using namespace normlab::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* name, bool passed, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", passed ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!passed) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// 1. full chain on 500 random families per kind, dims 1-8, sizes 1-12,
//    every step within 1e-8 relative slack, under 2 minutes.
void criterion_chain_suite() {
  const auto start = Clock::now();
  const FamilyKind kinds[] = {FamilyKind::general, FamilyKind::psd,
                              FamilyKind::near_orthogonal};
  int ok = 0;
  int total = 0;
  double worst_violation = 0.0;
  for (std::size_t kind_index = 0; kind_index < 3; ++kind_index) {
    Rng rng(derive_seed(20240, kind_index, 0));
    for (int trial = 0; trial < 500; ++trial) {
      const int dim = rng.uniform_int(1, 8);
      const int n = rng.uniform_int(1, 12);
      const OperatorFamily family = random_family(n, dim, rng.next_u64(), kinds[kind_index]);
      const BoundReport r = full_report(family);
      ++total;
      if (r.chain_ok) {
        ++ok;
      } else {
        for (double gap : r.slacks) worst_violation = std::max(worst_violation, -gap);
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool passed = ok == total && elapsed < 120.0;
  report(1, "chain property suite", passed,
         fmt("%d/%d reports chain_ok in %.1fs%s", ok, total, elapsed,
             ok == total ? "" : fmt(" (worst violation %.3g)", worst_violation).c_str()));
}

// 2. || |T| |S| || == ||T S*|| within 1e-8 relative on 500 random pairs.
void criterion_norm_identity() {
  Rng rng(20242);
  int ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const OperatorFamily pair = random_family(2, dim, rng.next_u64(), FamilyKind::general);
    if (abs_norm_identity_check(pair.member(0), pair.member(1)).passed) ++ok;
  }
  report(2, "norm identity || |T||S| || = ||TS*||", ok == 500, fmt("%d/500 pairs equal", ok));
}

// 3. half-power inequality on 500 random PSD pairs; equality when A == B.
void criterion_half_power() {
  Rng rng(20243);
  int ok = 0;
  int equal_ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const OperatorFamily pair = random_family(2, dim, rng.next_u64(), FamilyKind::psd);
    if (half_power_inequality_check(pair.member(0), pair.member(1)).passed) ++ok;

    const auto self = half_power_inequality_check(pair.member(0), pair.member(0));
    if (std::abs(self.lhs - self.rhs) <= 1e-9 * (1.0 + self.rhs)) ++equal_ok;
  }
  report(3, "half-power lemma", ok == 500 && equal_ok == 500,
         fmt("%d/500 pairs bounded, %d/500 A=B cases tight", ok, equal_ok));
}

// 4. flatten(assemble_P) is PSD up to -1e-9 * (1 + sum of member norms).
void criterion_positivity() {
  Rng rng(20244);
  int ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const int n = rng.uniform_int(1, 12);
    const OperatorFamily family = random_family(n, dim, rng.next_u64(), FamilyKind::general);
    double norm_sum = 0.0;
    for (const ComplexMatrix& t : family.members()) norm_sum += op_norm(t);
    const auto eig = hermitian_eig(assemble_P(family).flatten());
    if (eig.eigenvalues.front() >= -1e-9 * (1.0 + norm_sum)) ++ok;
  }
  report(4, "positivity certificate for P", ok == 500, fmt("%d/500 families PSD", ok));
}

// 5. scalar family n=100: cotlar_stein = 118.81, improved = 3.9601, ratio ~ 30.
void criterion_gap_numbers() {
  const auto start = Clock::now();
  const BoundReport r = full_report(scalar_family(100, 1));
  const double elapsed = seconds_since(start);
  const double expected_cs = 118.81;      // (1 + 99/10)^2
  const double expected_improved = 3.9601;  // ((2*100 - 1)/100)^2
  const double ratio = r.cotlar_stein / r.improved;
  const bool passed = std::abs(r.cotlar_stein - expected_cs) <= 1e-6 &&
                      std::abs(r.improved - expected_improved) <= 1e-6 &&
                      std::abs(ratio - expected_cs / expected_improved) <= 1e-6 &&
                      ratio > 100.0 / 5.0 && elapsed < 1.0;
  report(5, "scalar gap reproduction at n=100", passed,
         fmt("cotlar_stein=%.8f improved=%.8f ratio=%.4f in %.3fs", r.cotlar_stein, r.improved,
             ratio, elapsed));
}

// 6. tightness: orthogonal [3,1,2] hits 9 everywhere; scalar families make
//    improved == lhs_sq for every n in 1..256.
void criterion_tightness() {
  const BoundReport orth = full_report(orthogonal_family(3, 2, {3.0, 1.0, 2.0}));
  const double tol9 = 1e-8 * (1.0 + 9.0);
  bool passed = std::abs(orth.lhs_sq - 9.0) <= tol9 &&
                std::abs(orth.cotlar_stein - 9.0) <= tol9 &&
                std::abs(orth.improved - 9.0) <= tol9;

  int scalar_ok = 0;
  for (int n = 1; n <= 256; ++n) {
    const OperatorFamily family = scalar_family(n, 1);
    const double lhs = op_norm(family.sum());
    const double improved = improved_bound(family);
    if (std::abs(improved - lhs * lhs) <= 1e-8 * (1.0 + improved)) ++scalar_ok;
  }
  passed = passed && scalar_ok == 256;
  report(6, "tightness witnesses", passed,
         fmt("orthogonal family at 9.0; %d/256 scalar families tight", scalar_ok));
}

// 7. scalar family n=1000, x=1: tail inequality on 100 random windows and
//    monotone decay of the [m, 1000] tails.
void criterion_convergence_surrogate() {
  const OperatorFamily family = scalar_family(1000, 1);
  const ComplexVector x{Complex(1.0, 0.0)};
  Rng rng(20247);
  int window_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.uniform_int(1, 1000);
    const int n = rng.uniform_int(m, 1000);
    const TailRow row = tail_cauchy_check(family, x, m, n);
    if (row.tail_norm_sq <= row.cauchy_bound + 1e-8 * (1.0 + row.cauchy_bound)) ++window_ok;
  }

  bool monotone = true;
  double previous = tail_cauchy_check(family, x, 1, 1000).tail_norm_sq;
  double last = previous;
  for (int m = 2; m <= 1000; ++m) {
    const double current = tail_cauchy_check(family, x, m, 1000).tail_norm_sq;
    if (current > previous + 1e-15) monotone = false;
    previous = current;
    last = current;
  }
  const bool vanishes = last <= 1e-5;
  report(7, "convergence surrogate (tail windows)",
         window_ok == 100 && monotone && vanishes,
         fmt("%d/100 windows bounded, tails monotone=%s, final tail %.2e", window_ok,
             monotone ? "yes" : "no", last));
}

// 8. op_norm dominates the 1e5-vector Monte-Carlo lower bound (within 1e-3)
//    and agrees with sqrt(lambda_max(T*T)) to 1e-10 on 100 random 6x6.
void criterion_norm_oracles() {
  Rng rng(20248);
  int mc_ok = 0;
  int eig_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix t = random_matrix(6, 6, rng);
    const double norm = op_norm(t);
    const double mc = mc_norm_lower_bound(t, 100000, rng.next_u64());
    if (mc <= norm + 1e-3) ++mc_ok;

    const auto gram = hermitian_eig(multiply(adjoint(t), t));
    const double via_eig = std::sqrt(std::max(0.0, gram.eigenvalues.back()));
    if (std::abs(norm - via_eig) <= 1e-10) ++eig_ok;
  }
  report(8, "operator norm oracle agreement", mc_ok == 100 && eig_ok == 100,
         fmt("%d/100 Monte-Carlo bounds dominated, %d/100 eigenvalue matches", mc_ok, eig_ok));
}

// 9. cmd_check is deterministic: identical flags give byte-identical
//    summaries and witness sets, for a passing and a failing configuration.
void criterion_determinism() {
  const fs::path base =
      fs::temp_directory_path() / ("normlab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(base);

  auto run = [&](const CheckOptions& options, const GlobalOptions& global,
                 const fs::path& witness_dir) {
    CheckOptions local = options;
    fs::create_directories(witness_dir);
    local.witness_dir = witness_dir.string();
    std::ostringstream out;
    std::ostringstream err;
    cmd_check(local, global, out, err);
    return out.str();
  };
  auto dir_contents = [](const fs::path& dir) {
    std::set<std::pair<std::string, std::string>> entries;
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::ifstream in(entry.path(), std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      entries.emplace(entry.path().filename().string(), text.str());
    }
    return entries;
  };

  CheckOptions passing;
  passing.suite = Suite::all;
  passing.trials = 5;
  GlobalOptions global;
  global.seed = 7;
  const std::string pass1 = run(passing, global, base / "pass1");
  const std::string pass2 = run(passing, global, base / "pass2");

  CheckOptions failing;
  failing.suite = Suite::norm_identity;
  failing.trials = 5;
  GlobalOptions forced = global;
  forced.tol = 1e-30;
  const std::string fail1 = run(failing, forced, base / "fail1");
  const std::string fail2 = run(failing, forced, base / "fail2");

  const auto pass_w1 = dir_contents(base / "pass1");
  const auto pass_w2 = dir_contents(base / "pass2");
  const auto fail_w1 = dir_contents(base / "fail1");
  const auto fail_w2 = dir_contents(base / "fail2");

  const bool passed = pass1 == pass2 && fail1 == fail2 && pass_w1 == pass_w2 &&
                      fail_w1 == fail_w2 && pass_w1.empty() && !fail_w1.empty();
  report(9, "cmd_check determinism", passed,
         fmt("summaries %s, witness sets %s (%zu forced witnesses)",
             (pass1 == pass2 && fail1 == fail2) ? "identical" : "DIFFER",
             (pass_w1 == pass_w2 && fail_w1 == fail_w2) ? "identical" : "DIFFER",
             fail_w1.size()));
  fs::remove_all(base);
}

}  // namespace

int main() {
  criterion_chain_suite();
  criterion_norm_identity();
  criterion_half_power();
  criterion_positivity();
  criterion_gap_numbers();
  criterion_tightness();
  criterion_convergence_surrogate();
  criterion_norm_oracles();
  criterion_determinism();
  if (failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
