#include "weil/poisson.hpp"

namespace weil {

std::string to_string(Homogeneity h) {
  switch (h) {
    case Homogeneity::constant: return "constant";
    case Homogeneity::linear: return "linear";
    case Homogeneity::inhomogeneous: return "inhomogeneous";
  }
  return "?";
}

PoissonStructure PoissonStructure::symplectic(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw ValidationError("symplectic structure needs even dimension", std::to_string(n));
  const std::size_t k = n / 2;
  std::vector<std::vector<Poly>> pi(n, std::vector<Poly>(n, make_poly(n)));
  for (std::size_t i = 0; i < k; ++i) {
    pi[i][i + k] = Poly::constant(n, 1);
    pi[i + k][i] = Poly::constant(n, -1);
  }
  return PoissonStructure(std::move(pi), "symplectic(" + std::to_string(n) + ")");
}

PoissonStructure PoissonStructure::so3() {
  const auto x = Poly::variable(3, 0, 0), y = Poly::variable(3, 1, 0), z = Poly::variable(3, 2, 0);
  std::vector<std::vector<Poly>> pi(3, std::vector<Poly>(3, make_poly(3)));
  pi[0][1] = z;
  pi[1][0] = -z;
  pi[1][2] = x;
  pi[2][1] = -x;
  pi[2][0] = y;
  pi[0][2] = -y;
  return PoissonStructure(std::move(pi), "so3");
}

PoissonStructure PoissonStructure::zero(std::size_t n) {
  return PoissonStructure(std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, make_poly(n))),
                          "zero(" + std::to_string(n) + ")");
}

PoissonStructure PoissonStructure::from_entries(
    std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Poly>& upper, Jacobi mode,
    std::string name) {
  std::vector<std::vector<Poly>> pi(n, std::vector<Poly>(n, make_poly(n)));
  for (const auto& [ij, p] : upper) {
    const auto [i, j] = ij;
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw ValidationError("Poisson entry index out of range", std::to_string(i) + "," + std::to_string(j));
    if (p.nvars() != n) throw MismatchError("Poisson entry has wrong number of variables");
    pi[i - 1][j - 1] = p;
    pi[j - 1][i - 1] = -p;
  }
  return from_matrix(std::move(pi), mode, std::move(name));
}

PoissonStructure PoissonStructure::from_matrix(std::vector<std::vector<Poly>> pi, Jacobi mode,
                                               std::string name) {
  const std::size_t n = pi.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (pi[i].size() != n) throw MismatchError("Poisson matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (pi[i][j].nvars() != n) throw MismatchError("Poisson entry has wrong number of variables");
      if (!(pi[i][j] == -pi[j][i]))
        throw ValidationError("Poisson matrix is not skew-symmetric",
                              std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  }
  PoissonStructure s(std::move(pi), std::move(name));
  if (mode == Jacobi::check) {
    const JacobiResult r = jacobi_check(s);
    if (!r.ok)
      throw ValidationError("Poisson matrix violates the Jacobi identity",
                            "(" + std::to_string(r.indices[0]) + "," + std::to_string(r.indices[1]) + "," +
                                std::to_string(r.indices[2]) + "): " + to_string(*r.residual));
  }
  return s;
}

Homogeneity PoissonStructure::homogeneity() const {
  bool constant = true, linear = true;
  for (const auto& row : pi_)
    for (const auto& p : row)
      for (const auto& [e, c] : p.terms()) {
        const unsigned d = total_degree(e);
        if (d != 0) constant = false;
        if (d != 1) linear = false;
      }
  if (constant) return Homogeneity::constant;
  if (linear) return Homogeneity::linear;
  return Homogeneity::inhomogeneous;
}

int PoissonStructure::max_degree() const {
  int d = 0;
  for (const auto& row : pi_)
    for (const auto& p : row) d = std::max(d, p.degree());
  return d;
}

Poly bracket(const PoissonStructure& pi, const Poly& f, const Poly& g) {
  const std::size_t n = pi.nvars();
  if (f.nvars() != n || g.nvars() != n) throw MismatchError("bracket: arity mismatch");
  Poly out = make_poly(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly fi = f.derivative(i);
    if (fi.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (pi(i, j).is_zero()) continue;
      out += pi(i, j) * fi * g.derivative(j);
    }
  }
  return out;
}

JacobiResult jacobi_check(const PoissonStructure& pi) {
  const std::size_t n = pi.nvars();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly r = make_poly(n);
        for (std::size_t l = 0; l < n; ++l) {
          r += pi(l, i) * pi(j, k).derivative(l);
          r += pi(l, j) * pi(k, i).derivative(l);
          r += pi(l, k) * pi(i, j).derivative(l);
        }
        if (!r.is_zero()) return JacobiResult{false, {i + 1, j + 1, k + 1}, r};
      }
  return {};
}

VectorField ad(const PoissonStructure& pi, const Poly& f) {
  const std::size_t n = pi.nvars();
  VectorField out;
  for (std::size_t j = 0; j < n; ++j) out.components.push_back(bracket(pi, f, Poly::variable(n, j, 0)));
  return out;
}

AVectorField prolong_ad_tilde(const PoissonStructure& pi, const Poly& f, const AlgebraPtr& a) {
  return prolong_vector_field(ad(pi, f), a);
}

AVectorField tau(const PoissonStructure& pi, const APoly& phi) {
  const std::size_t n = pi.nvars();
  if (phi.nvars() != n) throw MismatchError("tau: arity mismatch");
  const AlgebraPtr& a = algebra_of(phi);
  AVectorField out;
  for (std::size_t j = 0; j < n; ++j)
    out.components.push_back(-tilde_apply(prolong_ad_tilde(pi, Poly::variable(n, j, 0), a), phi));
  return out;
}

APoly bracket_A(const PoissonStructure& pi, const APoly& phi, const APoly& psi) {
  if (!same_algebra(algebra_of(phi), algebra_of(psi))) throw MismatchError("bracket_A: algebra mismatch");
  return tilde_apply(tau(pi, phi), psi);
}

APoly bracket_A_closed_form(const PoissonStructure& pi, const APoly& phi, const APoly& psi) {
  const std::size_t n = pi.nvars();
  const AlgebraPtr& a = algebra_of(phi);
  if (!same_algebra(a, algebra_of(psi))) throw MismatchError("bracket_A: algebra mismatch");
  APoly out = make_apoly(n, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (pi(i, j).is_zero()) continue;
      out += prolong_function(pi(i, j), a) * phi.derivative(i) * psi.derivative(j);
    }
  return out;
}

}  // namespace weil
