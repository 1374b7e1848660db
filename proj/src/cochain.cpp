#include "weil/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace weil {

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::base: return "base";
    case ComplexKind::mixed: return "mixed";
    case ComplexKind::weil: return "weil";
  }
  return "?";
}

ComplexKind parse_complex_kind(const std::string& s) {
  if (s == "base") return ComplexKind::base;
  if (s == "mixed") return ComplexKind::mixed;
  if (s == "weil") return ComplexKind::weil;
  throw ParseError("unknown complex '" + s + "' (expected base, mixed or weil)");
}

int sort_with_sign(IndexSet& idx) {
  int sign = 1;
  // Insertion sort counting transpositions; p is tiny.
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

std::vector<IndexSet> index_sets(std::size_t n, std::size_t p) {
  std::vector<IndexSet> out;
  if (p > n) return out;
  IndexSet cur(p);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.push_back(cur);
    std::size_t k = p;
    while (k > 0 && cur[k - 1] == n - p + (k - 1)) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t i = k; i < p; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

std::string index_key(const IndexSet& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(idx[k] + 1);
  }
  return out;
}

BaseCochain make_base_cochain(std::size_t nvars, std::size_t degree) {
  return BaseCochain(ComplexKind::base, nvars, degree, make_poly(nvars));
}

ACochain make_a_cochain(ComplexKind kind, std::size_t nvars, std::size_t degree, const AlgebraPtr& a) {
  if (kind == ComplexKind::base) throw MismatchError("APoly cochains live in the mixed or weil complex");
  return ACochain(kind, nvars, degree, make_apoly(nvars, a));
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

template <class P, class Arg, class Lift>
P eval_impl(const MultiVector<P>& omega, std::span<const Arg> args, Lift&& lift) {
  const std::size_t p = omega.degree();
  const std::size_t n = omega.nvars();
  if (args.size() != p) throw MismatchError("cochain_eval: expected " + std::to_string(p) + " arguments");
  for (const auto& a : args)
    if (a.nvars() != n) throw MismatchError("cochain_eval: argument arity differs from cochain");

  // Derivatives of each argument, computed on demand.
  std::vector<std::vector<std::optional<P>>> deriv(p, std::vector<std::optional<P>>(n));
  auto d = [&](std::size_t k, std::size_t i) -> const P& {
    auto& slot = deriv[k][i];
    if (!slot) slot = lift(args[k].derivative(i));
    return *slot;
  };

  P total = omega.zero();
  std::vector<std::size_t> perm(p);
  for (const auto& [idx, c] : omega.coeffs()) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      P term = c;
      for (std::size_t k = 0; k < p && !term.is_zero(); ++k) term = term * d(k, idx[perm[k]]);
      if (term.is_zero()) continue;
      if (permutation_sign(perm) > 0)
        total += term;
      else
        total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

std::vector<Poly> base_coordinates(std::size_t n) {
  std::vector<Poly> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(Poly::variable(n, j, 0));
  return out;
}

std::vector<APoly> weil_coordinates(std::size_t n, const AlgebraPtr& a) {
  std::vector<APoly> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(APoly::variable(n, j, WeilElement::zero(a)));
  return out;
}

template <class Arg>
std::vector<Arg> pick(const std::vector<Arg>& coords, const IndexSet& idx) {
  std::vector<Arg> out;
  for (auto i : idx) out.push_back(coords[i]);
  return out;
}

// Representations and brackets of the three complexes.
struct BaseRep {
  const PoissonStructure& pi;
  Poly operator()(const Poly& f, const Poly& v) const { return bracket(pi, f, v); }
};
struct MixedRep {
  const PoissonStructure& pi;
  AlgebraPtr a;
  APoly operator()(const Poly& f, const APoly& v) const {
    return tilde_apply(prolong_ad_tilde(pi, f, a), v);
  }
};
struct WeilRep {
  const PoissonStructure& pi;
  APoly operator()(const APoly& phi, const APoly& v) const { return tilde_apply(tau(pi, phi), v); }
};
struct BaseBracket {
  const PoissonStructure& pi;
  Poly operator()(const Poly& f, const Poly& g) const { return bracket(pi, f, g); }
};
struct WeilBracket {
  const PoissonStructure& pi;
  APoly operator()(const APoly& f, const APoly& g) const { return bracket_A(pi, f, g); }
};

void require_kind(const ACochain& omega, ComplexKind k, const char* op) {
  if (omega.kind() != k)
    throw MismatchError(std::string(op) + ": expected a " + to_string(k) + " cochain, got " +
                        to_string(omega.kind()));
}

void require_arity(const PoissonStructure& pi, std::size_t n) {
  if (pi.nvars() != n) throw MismatchError("Poisson structure and cochain arity differ");
}

}  // namespace

Poly cochain_eval(const BaseCochain& omega, std::span<const Poly> args) {
  if (omega.kind() != ComplexKind::base) throw MismatchError("cochain_eval: not a base cochain");
  return eval_impl(omega, args, [](Poly p) { return p; });
}

APoly cochain_eval(const ACochain& omega, std::span<const Poly> args) {
  require_kind(omega, ComplexKind::mixed, "cochain_eval");
  const AlgebraPtr& a = algebra_of(omega.zero());
  return eval_impl(omega, args, [&a](const Poly& p) { return prolong_function(p, a); });
}

APoly cochain_eval(const ACochain& omega, std::span<const APoly> args) {
  require_kind(omega, ComplexKind::weil, "cochain_eval");
  for (const auto& x : args)
    if (!same_algebra(algebra_of(x), algebra_of(omega.zero())))
      throw MismatchError("cochain_eval: argument algebra differs from cochain");
  return eval_impl(omega, args, [](APoly p) { return p; });
}

BaseCallable as_callable(const BaseCochain& omega) {
  return {ComplexKind::base, omega.degree(),
          [omega](std::span<const Poly> args) { return cochain_eval(omega, args); }, omega.zero(), true};
}

MixedCallable as_mixed_callable(const ACochain& omega) {
  require_kind(omega, ComplexKind::mixed, "as_mixed_callable");
  return {ComplexKind::mixed, omega.degree(),
          [omega](std::span<const Poly> args) { return cochain_eval(omega, args); }, omega.zero(), true};
}

WeilCallable as_weil_callable(const ACochain& omega) {
  require_kind(omega, ComplexKind::weil, "as_weil_callable");
  return {ComplexKind::weil, omega.degree(),
          [omega](std::span<const APoly> args) { return cochain_eval(omega, args); }, omega.zero(), true};
}

// ---------------------------------------------------------------------------

BaseCochain d_base(const PoissonStructure& pi, const BaseCochain& omega, SignConvention sc) {
  if (omega.kind() != ComplexKind::base) throw MismatchError("d_base: not a base cochain");
  const std::size_t n = omega.nvars();
  require_arity(pi, n);
  BaseCochain out = make_base_cochain(n, omega.degree() + 1);
  const auto coords = base_coordinates(n);
  const auto eval = [&omega](std::span<const Poly> a) { return cochain_eval(omega, a); };
  for (const auto& J : index_sets(n, omega.degree() + 1)) {
    const auto args = pick(coords, J);
    out.set(J, ce_coboundary<Poly, Poly>(args, omega.zero(), BaseRep{pi}, BaseBracket{pi}, eval, sc));
  }
  return out;
}

ACochain d_tilde(const PoissonStructure& pi, const ACochain& omega, SignConvention sc) {
  require_kind(omega, ComplexKind::mixed, "d_tilde");
  const std::size_t n = omega.nvars();
  require_arity(pi, n);
  const AlgebraPtr& a = algebra_of(omega.zero());
  ACochain out = make_a_cochain(ComplexKind::mixed, n, omega.degree() + 1, a);
  const auto coords = base_coordinates(n);
  const auto eval = [&omega](std::span<const Poly> args) { return cochain_eval(omega, args); };
  for (const auto& J : index_sets(n, omega.degree() + 1)) {
    const auto args = pick(coords, J);
    out.set(J, ce_coboundary<Poly, APoly>(args, omega.zero(), MixedRep{pi, a}, BaseBracket{pi}, eval, sc));
  }
  return out;
}

ACochain d_tilde(const PoissonStructure& pi, const AlgebraPtr& a, const ACochain& omega, SignConvention sc) {
  if (!same_algebra(a, algebra_of(omega.zero()))) throw MismatchError("d_tilde: cochain is over another algebra");
  return d_tilde(pi, omega, sc);
}

ACochain d_tilde_A(const PoissonStructure& pi, const ACochain& omega, SignConvention sc) {
  require_kind(omega, ComplexKind::weil, "d_tilde_A");
  const std::size_t n = omega.nvars();
  require_arity(pi, n);
  const AlgebraPtr& a = algebra_of(omega.zero());
  ACochain out = make_a_cochain(ComplexKind::weil, n, omega.degree() + 1, a);
  const auto coords = weil_coordinates(n, a);
  const auto eval = [&omega](std::span<const APoly> args) { return cochain_eval(omega, args); };
  for (const auto& J : index_sets(n, omega.degree() + 1)) {
    const auto args = pick(coords, J);
    out.set(J, ce_coboundary<APoly, APoly>(args, omega.zero(), WeilRep{pi}, WeilBracket{pi}, eval, sc));
  }
  return out;
}

ACochain d_tilde_A(const PoissonStructure& pi, const AlgebraPtr& a, const ACochain& omega,
                   SignConvention sc) {
  if (!same_algebra(a, algebra_of(omega.zero())))
    throw MismatchError("d_tilde_A: cochain is over another algebra");
  return d_tilde_A(pi, omega, sc);
}

ACochain coboundary(const PoissonStructure& pi, const ACochain& omega, SignConvention sc) {
  return omega.kind() == ComplexKind::mixed ? d_tilde(pi, omega, sc) : d_tilde_A(pi, omega, sc);
}

BaseCallable d_base(const PoissonStructure& pi, const BaseCallable& omega, SignConvention sc) {
  return {ComplexKind::base, omega.degree + 1,
          [pi, omega, sc](std::span<const Poly> args) {
            return ce_coboundary<Poly, Poly>(args, omega.zero, BaseRep{pi}, BaseBracket{pi}, omega, sc);
          },
          omega.zero, omega.declared_skew};
}

MixedCallable d_tilde(const PoissonStructure& pi, const MixedCallable& omega, SignConvention sc) {
  const AlgebraPtr a = algebra_of(omega.zero);
  return {ComplexKind::mixed, omega.degree + 1,
          [pi, omega, sc, a](std::span<const Poly> args) {
            return ce_coboundary<Poly, APoly>(args, omega.zero, MixedRep{pi, a}, BaseBracket{pi}, omega, sc);
          },
          omega.zero, omega.declared_skew};
}

WeilCallable d_tilde_A(const PoissonStructure& pi, const WeilCallable& omega, SignConvention sc) {
  return {ComplexKind::weil, omega.degree + 1,
          [pi, omega, sc](std::span<const APoly> args) {
            return ce_coboundary<APoly, APoly>(args, omega.zero, WeilRep{pi}, WeilBracket{pi}, omega, sc);
          },
          omega.zero, omega.declared_skew};
}

ACochain prolong_cochain(const BaseCochain& eta, const AlgebraPtr& a) {
  if (eta.kind() != ComplexKind::base) throw MismatchError("prolong_cochain: not a base cochain");
  ACochain out = make_a_cochain(ComplexKind::mixed, eta.nvars(), eta.degree(), a);
  for (const auto& [idx, c] : eta.coeffs()) out.set(idx, prolong_function(c, a));
  return out;
}

ACochain as_weil(const ACochain& omega) {
  ACochain out(ComplexKind::weil, omega.nvars(), omega.degree(), omega.zero());
  for (const auto& [idx, c] : omega.coeffs()) out.set(idx, c);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class P>
ClosedResult<P> closed_from(const MultiVector<P>& d) {
  if (d.is_zero()) return {};
  const auto& [idx, c] = *d.coeffs().begin();
  return {false, idx, c};
}

template <class Arg, class Val>
ProbeResult<Arg, Val> probe_closed(const CallableCochain<Arg, Val>& d,
                                   const std::vector<std::vector<Arg>>& probes) {
  for (const auto& args : probes) {
    Val r = d(args);
    if (!r.is_zero()) return {false, args, std::move(r)};
  }
  return {};
}

}  // namespace

ClosedResult<Poly> is_closed(const PoissonStructure& pi, const BaseCochain& omega) {
  return closed_from(d_base(pi, omega));
}

ClosedResult<APoly> is_closed(const PoissonStructure& pi, const ACochain& omega) {
  return closed_from(coboundary(pi, omega));
}

ProbeResult<Poly, Poly> is_closed(const PoissonStructure& pi, const BaseCallable& omega,
                                  const std::vector<std::vector<Poly>>& probes) {
  return probe_closed(d_base(pi, omega), probes);
}

ProbeResult<Poly, APoly> is_closed(const PoissonStructure& pi, const MixedCallable& omega,
                                   const std::vector<std::vector<Poly>>& probes) {
  return probe_closed(d_tilde(pi, omega), probes);
}

ProbeResult<APoly, APoly> is_closed(const PoissonStructure& pi, const WeilCallable& omega,
                                    const std::vector<std::vector<APoly>>& probes) {
  return probe_closed(d_tilde_A(pi, omega), probes);
}

Poly d_squared_probe(const PoissonStructure& pi, const BaseCallable& omega, std::span<const Poly> probe,
                     SignConvention sc) {
  return d_base(pi, d_base(pi, omega, sc), sc)(probe);
}

APoly d_squared_probe(const PoissonStructure& pi, const MixedCallable& omega, std::span<const Poly> probe,
                      SignConvention sc) {
  return d_tilde(pi, d_tilde(pi, omega, sc), sc)(probe);
}

APoly d_squared_probe(const PoissonStructure& pi, const WeilCallable& omega, std::span<const APoly> probe,
                      SignConvention sc) {
  return d_tilde_A(pi, d_tilde_A(pi, omega, sc), sc)(probe);
}

namespace {

template <class P>
std::string cochain_text(const MultiVector<P>& omega) {
  std::string out = "{";
  bool first = true;
  for (const auto& [idx, c] : omega.coeffs()) {
    if (!first) out += "; ";
    out += "[" + index_key(idx) + "] " + to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(const BaseCochain& omega) { return cochain_text(omega); }
std::string to_string(const ACochain& omega) { return cochain_text(omega); }

}  // namespace weil
