#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weil/polynomial.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

/// An infinitely near point of R^n of kind A, written in the global chart as
/// the n-tuple (xi(x_1), ..., xi(x_n)) of algebra elements.
struct APoint {
  AlgebraPtr algebra;
  std::vector<WeilElement> coords;

  APoint(AlgebraPtr a, std::vector<WeilElement> c);
  std::size_t nvars() const { return coords.size(); }
  friend bool operator==(const APoint&, const APoint&) = default;
};

/// theta = sum_i theta_i d/dx_i on R^n.
struct VectorField {
  std::vector<Poly> components;

  std::size_t nvars() const { return components.size(); }
  /// theta(f) = sum_i theta_i * df/dx_i.
  Poly apply(const Poly& f) const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// A vector field on M^A, i.e. a derivation C^inf(M) -> C^inf(M^A, A),
/// stored by its values X(x_i) on the coordinate functions.
struct AVectorField {
  std::vector<APoly> components;

  std::size_t nvars() const { return components.size(); }
  const AlgebraPtr& algebra() const { return algebra_of(components.at(0)); }

  /// X(f) for a function on the base: sum_i X(x_i) * (df/dx_i)^A.
  APoly on_function(const Poly& f) const;

  AVectorField& operator+=(const AVectorField& rhs);
  AVectorField& operator*=(const WeilElement& a);
  friend AVectorField operator+(AVectorField x, const AVectorField& y) { return x += y; }
  friend AVectorField operator*(const WeilElement& a, AVectorField x) { return x *= a; }
  /// phi * X, the C^inf(M^A, A)-module action.
  friend AVectorField operator*(const APoly& phi, const AVectorField& x);
  friend bool operator==(const AVectorField&, const AVectorField&) = default;
};

AVectorField zero_avector_field(std::size_t nvars, const AlgebraPtr& a);

/// xi -> (xi(x_1), ..., xi(x_n)) evaluated: phi(xi) in A.
WeilElement eval_A(const APoly& phi, const APoint& xi);

/// pi_M: componentwise augmentation, the origin of the infinitely near point.
std::vector<Rational> project(const APoint& xi);

/// h^A(xi) for a polynomial map h: R^n -> R^m given by m components.
APoint prolong_map(std::span<const Poly> h, const APoint& xi);

/// phi_M(xi) = phi o xi for an algebra homomorphism phi: A -> B.
APoint apply_hom_point(const AlgebraHom& phi, const APoint& xi);

/// theta^A: components (theta_i)^A, so that theta^A(f) = (theta f)^A.
AVectorField prolong_vector_field(const VectorField& theta, const AlgebraPtr& a);

/// The unique A-linear derivation X~ of C^inf(M^A, A) with X~(f^A) = X(f):
/// X~(phi) = sum_i X(x_i) * d(phi)/dX_i.
APoly tilde_apply(const AVectorField& x, const APoly& phi);

/// [X, Y] = X~ o Y - Y~ o X, componentwise on the coordinates.
AVectorField lie_bracket(const AVectorField& x, const AVectorField& y);

/// Classical bracket of vector fields on R^n, [theta, eta]_i = theta(eta_i) - eta(theta_i).
VectorField lie_bracket(const VectorField& theta, const VectorField& eta);

}  // namespace weil
