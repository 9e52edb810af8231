// Acceptance harness: thirteen end-to-end criteria, one summary line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dualpair/verify.hpp"

using namespace dualpair;

namespace {

constexpr std::uint64_t kSeed = 20240901;

struct Criterion {
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"parabolic dimension and exponent table", [] { return check_table3(); }},
      {"g2 parabolic exponents 5 and 3", [] { return check_g2_exponents(); }},
      {"gl and gsp levi exponents match closed forms", [] { return check_levi_deltas(); }},
      {"gaussian binomials equal exterior-power traces", [] { return check_minuscule(); }},
      {"graded spin branching to the gl3 levi", [] { return check_spin_levi_branch(); }},
      {"spin7 to g2 restriction and embedding gate", [] { return check_g2_spin7_gate(); }},
      {"graded trace identity for the e8 pair", [] { return check_e8_trace(); }},
      {"normalized twists from raw exponents", [] { return check_normalization(); }},
      {"octonion arithmetic over Q and F7",
       [] { return check_octonion_suite(kSeed, 10000); }},
      {"null subspace bound over F2 and F3", [] { return check_null_subspaces(); }},
      {"cross product lemma on random instances",
       [] { return check_cross_lemma(kSeed, 1000); }},
      {"null flag orbit geometry", [] { return check_omega_geometry(kSeed, 1000); }},
      {"transfer at v equal one is plain restriction",
       [] { return check_rtilde_at_one(); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    bool ok = false;
    std::string error;
    try {
      results = criteria[i].run();
      ok = all_pass(results);
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%2zu/13] %-48s %s (%.2fs)\n", i + 1, criteria[i].title.c_str(),
                ok ? "PASS" : "FAIL", secs);
    if (!ok) {
      ++failures;
      if (!error.empty()) std::printf("        exception: %s\n", error.c_str());
      for (const auto& r : results)
        if (!r.pass)
          std::printf("        %s: %s != %s\n", r.id.c_str(), r.lhs.c_str(),
                      r.rhs.c_str());
    }
    std::fflush(stdout);
  }

  if (failures == 0) {
    std::printf("all 13 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
