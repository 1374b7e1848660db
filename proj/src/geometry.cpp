#include "weil/geometry.hpp"

namespace weil {

APoint::APoint(AlgebraPtr a, std::vector<WeilElement> c) : algebra(std::move(a)), coords(std::move(c)) {
  for (const auto& x : coords)
    if (!same_algebra(x.algebra(), algebra)) throw MismatchError("APoint coordinates in different algebras");
}

Poly VectorField::apply(const Poly& f) const {
  if (f.nvars() != nvars()) throw MismatchError("vector field and function arity differ");
  Poly out = make_poly(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) out += components[i] * f.derivative(i);
  return out;
}

APoly AVectorField::on_function(const Poly& f) const {
  if (f.nvars() != nvars()) throw MismatchError("vector field and function arity differ");
  APoly out = make_apoly(nvars(), algebra());
  for (std::size_t i = 0; i < nvars(); ++i)
    out += components[i] * prolong_function(f.derivative(i), algebra());
  return out;
}

AVectorField& AVectorField::operator+=(const AVectorField& rhs) {
  if (rhs.nvars() != nvars()) throw MismatchError("vector fields of different arity");
  for (std::size_t i = 0; i < nvars(); ++i) components[i] += rhs.components[i];
  return *this;
}

AVectorField& AVectorField::operator*=(const WeilElement& a) {
  for (auto& c : components) c *= a;
  return *this;
}

AVectorField operator*(const APoly& phi, const AVectorField& x) {
  AVectorField out = x;
  for (auto& c : out.components) c = phi * c;
  return out;
}

AVectorField zero_avector_field(std::size_t nvars, const AlgebraPtr& a) {
  return AVectorField{std::vector<APoly>(nvars, make_apoly(nvars, a))};
}

WeilElement eval_A(const APoly& phi, const APoint& xi) {
  if (!same_algebra(algebra_of(phi), xi.algebra)) throw MismatchError("eval_A: algebra mismatch");
  return phi.evaluate(xi.coords);
}

std::vector<Rational> project(const APoint& xi) {
  std::vector<Rational> out;
  for (const auto& c : xi.coords) out.push_back(c.augmentation());
  return out;
}

APoint prolong_map(std::span<const Poly> h, const APoint& xi) {
  std::vector<WeilElement> out;
  for (const auto& hj : h) {
    if (hj.nvars() != xi.nvars()) throw MismatchError("prolong_map: map arity differs from point");
    out.push_back(eval_A(prolong_function(hj, xi.algebra), xi));
  }
  return APoint(xi.algebra, std::move(out));
}

APoint apply_hom_point(const AlgebraHom& phi, const APoint& xi) {
  std::vector<WeilElement> out;
  for (const auto& c : xi.coords) out.push_back(phi.apply(c));
  return APoint(phi.target(), std::move(out));
}

AVectorField prolong_vector_field(const VectorField& theta, const AlgebraPtr& a) {
  AVectorField out;
  for (const auto& c : theta.components) out.components.push_back(prolong_function(c, a));
  return out;
}

APoly tilde_apply(const AVectorField& x, const APoly& phi) {
  if (x.nvars() != phi.nvars()) throw MismatchError("tilde_apply: arity mismatch");
  APoly out = make_apoly(phi.nvars(), algebra_of(phi));
  for (std::size_t i = 0; i < x.nvars(); ++i) {
    if (x.components[i].is_zero()) continue;
    out += x.components[i] * phi.derivative(i);
  }
  return out;
}

AVectorField lie_bracket(const AVectorField& x, const AVectorField& y) {
  if (x.nvars() != y.nvars()) throw MismatchError("lie_bracket: arity mismatch");
  AVectorField out;
  for (std::size_t i = 0; i < x.nvars(); ++i)
    out.components.push_back(tilde_apply(x, y.components[i]) - tilde_apply(y, x.components[i]));
  return out;
}

VectorField lie_bracket(const VectorField& theta, const VectorField& eta) {
  if (theta.nvars() != eta.nvars()) throw MismatchError("lie_bracket: arity mismatch");
  VectorField out;
  for (std::size_t i = 0; i < theta.nvars(); ++i)
    out.components.push_back(theta.apply(eta.components[i]) - eta.apply(theta.components[i]));
  return out;
}

}  // namespace weil
