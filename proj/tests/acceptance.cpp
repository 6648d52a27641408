// End-to-end acceptance battery.  Runs every advertised guarantee on a fixed
// roster of groups with pinned tolerances and trial counts, printing exactly
// one line per criterion.  Exit code 0 means every criterion held.

#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
  const char* title;
  std::vector<std::string> check_ids;
};

const std::vector<std::string> kRoster = {
    "cyclic:4", "klein4", "s:3", "dihedral:4", "q8", "product:cyclic:2,s:3",
};

const std::vector<Criterion> kCriteria = {
    {"deterministic irreducible decomposition, orthogonal and complete",
     {"rep_layer"}},
    {"transform inversion and coefficient recovery", {"lemma1.1"}},
    {"weighted series norms match their operator-dual formulas", {"prop1.2"}},
    {"pairing, inversion and translation identities",
     {"sec1_identities", "conv_fourier_mult"}},
    {"averaging maps agree with their materialized adjoints",
     {"adjoint_pairings"}},
    {"closed-form block norms of amplified adjoints", {"thm_adelta_levels"}},
    {"projective quotient value of the square-weighted series norm",
     {"thm_adelta"}},
    {"completely bounded norms of both adjoint maps",
     {"thm_gamma_haag", "thm_cgamma_haag"}},
    {"transpose-map calibration gate for the factorization solver",
     {"haagerup_gate"}},
    {"diagonal swap structure of the twisted adjoint and flip unitaries",
     {"prop_agamma", "flip_unitary"}},
    {"inversion isometries, tensor norms, algebra and semisimplicity",
     {"cor_check_isometry", "cor_row_tensor", "cor_operator_algebra",
      "prop_semisimple"}},
    {"tensor averages project exactly onto conjugate pairs",
     {"projection_p"}},
};

}  // namespace

int main() {
  std::printf("acceptance battery: %d criteria, %d groups, seed 7\n",
              static_cast<int>(kCriteria.size()),
              static_cast<int>(kRoster.size()));

  const auto t0 = std::chrono::steady_clock::now();
  int passed = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const Criterion& crit = kCriteria[i];
    const auto c0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst = 0.0;
    double tol = 0.0;
    std::string detail;
    for (const std::string& id : crit.check_ids) {
      fgf::CheckSpec spec;
      spec.check_ids = {id};
      spec.groups = kRoster;
      spec.seed = 7;
      try {
        const fgf::CheckReport r = fgf::run_check(id, spec);
        ok = ok && r.pass;
        worst = std::max(worst, r.worst_deviation);
        tol = std::max(tol, r.tolerance);
        if (!r.pass) {
          for (const auto& g : r.groups)
            if (!g.pass)
              detail += " " + id + "@" + g.group +
                        (g.errored ? " [" + g.note + "]" : "");
        }
      } catch (const std::exception& e) {
        ok = false;
        detail += " " + id + " threw: " + e.what();
      }
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - c0)
                          .count();
    std::printf("[%s] %2zu/12 %s (worst %.3g, tol %.1g, %.0f ms)%s\n",
                ok ? "PASS" : "FAIL", i + 1, crit.title, worst, tol, ms,
                detail.c_str());
    std::fflush(stdout);
    if (ok) ++passed;
  }

  const double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%d/%d criteria passed in %.1f s\n", passed,
              static_cast<int>(kCriteria.size()), total_s);
  return passed == static_cast<int>(kCriteria.size()) ? 0 : 1;
}
