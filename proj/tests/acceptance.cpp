// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero on any failure.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "weil/verify.hpp"

using namespace weil;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<CheckResult>(std::uint64_t)> run;
};

CheckResult printed_variant_guard(std::uint64_t seed) {
  CheckResult guard("printed sign variant is rejected");
  const CheckResult printed = check_nilpotency(seed, 100, SignConvention::printed);
  guard.cases = printed.cases;
  if (printed.passed)
    guard.fail("printed sign variant passed nilpotency");
  else if (printed.witness.find("p=0") == std::string::npos)
    guard.fail("printed variant failed, but not at p=0: " + printed.witness);
  else
    guard.detail = "rejected with witness " + printed.witness;
  return guard;
}

CheckResult symplectic_full_table() {
  CheckResult r("symplectic H = (1,0,0)");
  const auto sym = PoissonStructure::symplectic(2);
  for (unsigned D = 1; D <= 4; ++D) {
    const auto rep = betti(ComplexKind::base, sym, nullptr, 0, 2, D);
    ++r.cases;
    for (std::size_t p = 0; p <= 2; ++p)
      if (rep.row(p).homology != std::optional<std::size_t>(p == 0 ? 1 : 0))
        r.fail("D=" + std::to_string(D) + ", p=" + std::to_string(p) + ": H differs from (1,0,0)");
  }
  return r;
}

CheckResult center_dimensions() {
  CheckResult r("center dimensions");
  ++r.cases;
  const auto dual = center_report(PoissonStructure::symplectic(2), WeilAlgebra::jet(1, 1), 3);
  if (dual.basis.size() != 2) r.fail("symplectic, dual, D=3: R-dim " + std::to_string(dual.basis.size()));
  ++r.cases;
  const auto so3 = center_report(PoissonStructure::so3(), WeilAlgebra::real(), 2, ComplexKind::base);
  if (so3.basis.size() != 2) r.fail("so3, R, D=2: dim " + std::to_string(so3.basis.size()));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20261018;
  const std::vector<Criterion> criteria = {
      {1, "Weil axioms for jet(r,k)", [](auto s) { return std::vector{check_jet_axioms(s, 200)}; }},
      {2, "prolongation is a homomorphism and functorial",
       [](auto s) { return std::vector{check_prolong_homomorphism(s, 200, 100)}; }},
      {3, "tilde extension characterization", [](auto s) { return std::vector{check_tilde_extension(s, 200)}; }},
      {4, "tau identities", [](auto s) { return std::vector{check_tau_identities(s, 100)}; }},
      {5, "prolonged Poisson bracket and its Jacobi identity",
       [](auto s) { return std::vector{check_lifted_bracket(s, 200, 50)}; }},
      {6, "lift is a chain map", [](auto s) { return std::vector{check_chain_map(s, 50)}; }},
      {7, "closed iff lift closed", [](auto s) { return std::vector{check_closed_iff_closed(s, 20)}; }},
      {8, "cohomologous cochains lift to cohomologous cochains",
       [](auto s) { return std::vector{check_cohomologous_lift(s, 50)}; }},
      {9, "nilpotency of all three differentials",
       [](auto s) { return std::vector{check_nilpotency(s, 100), printed_variant_guard(s)}; }},
      {10, "H^0 is the Poisson center", [](auto s) { return std::vector{check_center(s), center_dimensions()}; }},
      {11, "H^1 vanishes for symplectic R^2",
       [](auto) { return std::vector{check_h1_symplectic(), symplectic_full_table()}; }},
      {12, "restriction of scalars", [](auto) { return std::vector{check_restriction_of_scalars()}; }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run(seed + static_cast<std::uint64_t>(c.id));
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty();
    std::size_t cases = 0;
    std::string witness = error;
    for (const auto& r : results) {
      cases += r.cases;
      if (!r.passed && ok) {
        ok = false;
        witness = r.name + ": " + r.witness;
      }
    }
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%zu cases, %.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), cases,
                secs, ok ? "" : " witness: ", ok ? "" : witness.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed (seed %llu)\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              static_cast<unsigned long long>(seed));
  return failures == 0 ? 0 : 1;
}
