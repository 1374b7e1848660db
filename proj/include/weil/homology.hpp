#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weil/cochain.hpp"
#include "weil/linalg.hpp"
#include "weil/poisson.hpp"

namespace weil {

/// Finite window onto the cochain spaces: coefficient degree <= max_degree,
/// cochain degrees p_min..p_max.
struct Truncation {
  unsigned max_degree = 0;
  std::size_t p_min = 0;
  std::size_t p_max = 0;
  Homogeneity homogeneity = Homogeneity::constant;
};

/// One real basis vector of a truncated cochain space: the multivector with
/// a single coefficient (algebra basis element) * monomial at an index set.
struct BasisElement {
  IndexSet indices;
  Exponents monomial;
  std::size_t algebra_index = 0;  // always 0 for the base complex

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

struct EngineOptions {
  /// Refuse to build any basis larger than this.
  std::size_t max_dimension = 20000;
  /// When set, basis enumeration order is shuffled with this seed.
  std::optional<std::uint64_t> shuffle_seed;
  SignConvention sign = SignConvention::standard;
};

/// Real basis of the truncated degree-p cochain space with coefficient
/// degrees in `degrees`. Mixed and weil complexes are tensored with the
/// algebra basis (restriction of scalars to R).
std::vector<BasisElement> enumerate_basis(ComplexKind kind, std::size_t nvars, const AlgebraPtr& a,
                                          std::size_t p, const std::vector<unsigned>& degrees,
                                          const EngineOptions& opts = {});

/// Basis with all coefficient degrees <= D.
std::vector<BasisElement> enumerate_basis(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                                          std::size_t p, unsigned D, const EngineOptions& opts = {});

/// Matrix of a differential restricted to a truncation: column j holds the
/// coboundary of domain basis element j expanded in the codomain basis.
struct ComplexMatrix {
  std::vector<BasisElement> domain;
  std::vector<BasisElement> codomain;
  Matrix entries;
};

/// Degree shift of the differential on coefficient degree: -1 for constant,
/// 0 for linear structures. Throws for inhomogeneous structures.
int degree_shift(Homogeneity h);

/// d_p on degree <= D cochains. Codomain degree: D-1 (constant), D (linear),
/// D + maxdeg(pi) - 1 (inhomogeneous). Throws if a coboundary leaves the codomain.
ComplexMatrix assemble_matrix(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                              std::size_t p, unsigned D, const EngineOptions& opts = {});

/// d_p from coefficient degree exactly w to degree w + shift (homogeneous pi only).
ComplexMatrix assemble_slice(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                             std::size_t p, unsigned w, const EngineOptions& opts = {});

/// Turns a coefficient vector over a basis back into a cochain.
BaseCochain to_base_cochain(std::size_t nvars, std::size_t p, const std::vector<BasisElement>& basis,
                            const std::vector<Rational>& v);
ACochain to_a_cochain(ComplexKind kind, std::size_t nvars, const AlgebraPtr& a, std::size_t p,
                      const std::vector<BasisElement>& basis, const std::vector<Rational>& v);

struct SliceRow {
  unsigned degree = 0;       // coefficient degree w
  std::size_t dim = 0;
  std::size_t rank = 0;      // rank of d_p on this slice
  std::size_t ker = 0;
  std::size_t boundaries = 0;  // rank of the incoming d_{p-1} landing in this slice
  std::size_t homology = 0;
};

struct BettiRow {
  std::size_t p = 0;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t ker = 0;
  std::optional<std::size_t> boundaries;  // dim B^p within the truncation
  std::optional<std::size_t> homology;    // dim H^p; absent when not certified
  std::optional<std::size_t> a_rank;      // A-rank of H^p for mixed/weil complexes
  std::vector<SliceRow> slices;
};

struct BettiReport {
  ComplexKind kind = ComplexKind::base;
  std::string algebra;
  std::size_t algebra_dim = 1;
  std::string structure;
  Homogeneity homogeneity = Homogeneity::constant;
  unsigned D = 0;
  bool quotient_certified = true;
  std::string note;
  std::vector<BettiRow> rows;
  /// Cocycle representatives of nonzero H^p (p -> cochain texts).
  std::map<std::size_t, std::vector<std::string>> representatives;

  const BettiRow& row(std::size_t p) const;
};

/// Kernel, rank and (for constant/linear pi) homology dimensions for
/// p = p_min..p_max with coefficient degrees <= D. Homogeneous structures are
/// split into coefficient-degree slices; each slice is an exact finite
/// complex. For inhomogeneous structures only kernels and ranks are reported.
BettiReport betti(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a, std::size_t p_min,
                  std::size_t p_max, unsigned D, const EngineOptions& opts = {});

struct CenterReport {
  std::vector<APoly> basis;  // over R for the base complex
  std::vector<std::string> text;
};

/// Basis of H^0 (the Poisson center) within coefficient degree <= D: the
/// joint kernel of the coordinate brackets, canonically reduced.
CenterReport center_report(const PoissonStructure& pi, const AlgebraPtr& a, unsigned D,
                           ComplexKind kind = ComplexKind::mixed, const EngineOptions& opts = {});

struct H1Report {
  std::optional<std::size_t> dim;
  std::vector<std::string> representatives;
  bool certified = true;
  std::string note;
};

H1Report h1_report(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a, unsigned D,
                   const EngineOptions& opts = {});

}  // namespace weil
