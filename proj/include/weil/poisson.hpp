#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weil/geometry.hpp"
#include "weil/polynomial.hpp"

namespace weil {

enum class Homogeneity { constant, linear, inhomogeneous };

std::string to_string(Homogeneity h);

struct JacobiResult {
  bool ok = true;
  std::array<std::size_t, 3> indices{};  // 1-based (i, j, k) of the first failing triple
  std::optional<Poly> residual;

  explicit operator bool() const { return ok; }
};

/// Poisson structure on R^n given by pi[i][j] = {x_i, x_j} with polynomial
/// entries. Skew-symmetry is always enforced; the Jacobi identity is checked
/// at construction unless explicitly waived.
class PoissonStructure {
 public:
  enum class Jacobi { check, waive };

  /// Constant symplectic structure on R^(2k): {x_i, x_(i+k)} = 1.
  static PoissonStructure symplectic(std::size_t n);
  /// Lie-Poisson structure on so(3)*: {x,y} = z, {y,z} = x, {z,x} = y.
  static PoissonStructure so3();
  /// The zero structure on R^n.
  static PoissonStructure zero(std::size_t n);
  /// From upper-triangle entries keyed by 1-based (i, j), i < j.
  static PoissonStructure from_entries(std::size_t n,
                                       const std::map<std::pair<std::size_t, std::size_t>, Poly>& upper,
                                       Jacobi mode = Jacobi::check, std::string name = "matrix");
  /// From a full matrix; throws ValidationError unless skew.
  static PoissonStructure from_matrix(std::vector<std::vector<Poly>> pi, Jacobi mode = Jacobi::check,
                                      std::string name = "matrix");

  std::size_t nvars() const { return pi_.size(); }
  const Poly& operator()(std::size_t i, std::size_t j) const { return pi_.at(i).at(j); }
  const std::vector<std::vector<Poly>>& matrix() const { return pi_; }
  const std::string& name() const { return name_; }

  Homogeneity homogeneity() const;
  /// Highest total degree among the entries (0 for the zero structure).
  int max_degree() const;

 private:
  PoissonStructure(std::vector<std::vector<Poly>> pi, std::string name)
      : pi_(std::move(pi)), name_(std::move(name)) {}

  std::vector<std::vector<Poly>> pi_;
  std::string name_;
};

/// {f, g} = sum_{i,j} pi_ij df/dx_i dg/dx_j.
Poly bracket(const PoissonStructure& pi, const Poly& f, const Poly& g);

/// Symbolic Jacobi identity for the coordinate matrix: the cyclic sum
/// sum_l (pi_li d_l pi_jk + pi_lj d_l pi_ki + pi_lk d_l pi_ij) must vanish
/// for all i < j < k.
JacobiResult jacobi_check(const PoissonStructure& pi);

/// ad(f) = {f, .}, components ad(f)_j = {f, x_j}.
VectorField ad(const PoissonStructure& pi, const Poly& f);

/// [ad(f)]^A as a vector field on M^A: components ({f, x_j})^A.
AVectorField prolong_ad_tilde(const PoissonStructure& pi, const Poly& f, const AlgebraPtr& a);

/// tau_phi: f -> -[ad(f)]^A~(phi), stored by its values on coordinates.
AVectorField tau(const PoissonStructure& pi, const APoly& phi);

/// {phi, psi}_A = tau~_phi(psi).
APoly bracket_A(const PoissonStructure& pi, const APoly& phi, const APoly& psi);

/// Closed form sum_{i,j} (pi_ij)^A d_i phi d_j psi; an independent route to bracket_A.
APoly bracket_A_closed_form(const PoissonStructure& pi, const APoly& phi, const APoly& psi);

}  // namespace weil
