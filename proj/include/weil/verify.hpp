#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "weil/cochain.hpp"
#include "weil/geometry.hpp"
#include "weil/homology.hpp"
#include "weil/poisson.hpp"

namespace weil {

/// Seeded generator of small random test data. Draws use plain modular
/// reduction of a 64-bit Mersenne twister, so streams are identical on every
/// platform for a given seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform integer in [lo, hi].
  long between(long lo, long hi);
  bool coin() { return between(0, 1) == 1; }

  /// n/d with |n| <= 4, 1 <= d <= 3.
  Rational rational();
  Rational nonzero_rational();
  Poly poly(std::size_t nvars, unsigned max_degree, std::size_t max_terms);
  WeilElement element(const AlgebraPtr& a);
  APoly apoly(std::size_t nvars, const AlgebraPtr& a, unsigned max_degree, std::size_t max_terms);
  APoint point(std::size_t nvars, const AlgebraPtr& a);
  AVectorField avector_field(std::size_t nvars, const AlgebraPtr& a, unsigned max_degree);
  BaseCochain base_cochain(std::size_t nvars, std::size_t p, unsigned max_degree, std::size_t max_terms);
  ACochain a_cochain(ComplexKind kind, std::size_t nvars, std::size_t p, const AlgebraPtr& a,
                     unsigned max_degree, std::size_t max_terms);

 private:
  std::mt19937_64 rng_;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first (smallest) failing instance
  std::string detail;

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// The algebras exercised by the randomized checks: dual numbers, jet(1,2), jet(2,2).
std::vector<AlgebraPtr> standard_algebras();
/// The shipped structures: symplectic R^2 and so(3)*.
std::vector<PoissonStructure> standard_structures();

/// Random skew multilinear (not necessarily derivation) cochains of degree p:
/// P * det[L_i(f_k)] with L_i derivatives evaluated at random rational points.
BaseCallable random_skew_callable(RandomSource& rs, std::size_t nvars, std::size_t p);
MixedCallable random_skew_mixed_callable(RandomSource& rs, std::size_t nvars, std::size_t p, const AlgebraPtr& a);
WeilCallable random_skew_weil_callable(RandomSource& rs, std::size_t nvars, std::size_t p, const AlgebraPtr& a);

/// Greedily drops terms from the inputs while `fails` stays true.
std::vector<Poly> minimize_inputs(std::vector<Poly> inputs, const std::function<bool(const std::vector<Poly>&)>& fails);

// Weil algebras
CheckResult check_jet_axioms(std::uint64_t seed, std::size_t pairs = 200);
CheckResult check_table_algebras();

// Prolongation
CheckResult check_prolong_homomorphism(std::uint64_t seed, std::size_t triples = 200, std::size_t maps = 100);
CheckResult check_tilde_extension(std::uint64_t seed, std::size_t per_algebra = 200);
CheckResult check_prolonged_vector_fields(std::uint64_t seed, std::size_t count = 50);

// Poisson structures
CheckResult check_shipped_jacobi();
CheckResult check_tau_identities(std::uint64_t seed, std::size_t per_structure = 100);
CheckResult check_lifted_bracket(std::uint64_t seed, std::size_t pairs = 200, std::size_t jacobi_triples = 50);

// Cochain complexes
CheckResult check_chain_map(std::uint64_t seed, std::size_t per_config = 50);
CheckResult check_closed_iff_closed(std::uint64_t seed, std::size_t count = 20);
CheckResult check_cohomologous_lift(std::uint64_t seed, std::size_t count = 50);
/// d o d = 0 on every basis multivector with p <= 2, degree <= 3, for all three
/// complexes, plus randomized callable probes.
CheckResult check_nilpotency(std::uint64_t seed, std::size_t probes = 100,
                             SignConvention sc = SignConvention::standard);

// Homology
CheckResult check_center(std::uint64_t seed);
CheckResult check_h1_symplectic();
CheckResult check_restriction_of_scalars();
CheckResult check_composites_vanish(unsigned max_degree = 4);
CheckResult check_permutation_invariance(std::uint64_t seed);

/// Suites: weil, prolong, poisson, complexes, homology, all. Throws
/// ParseError for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      SignConvention sc = SignConvention::standard);
const std::vector<std::string>& suite_names();

}  // namespace weil
