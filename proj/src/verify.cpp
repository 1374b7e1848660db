#include "weil/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace weil {

// ---------------------------------------------------------------------------
// Random data

long RandomSource::between(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational RandomSource::rational() {
  Rational q(between(-4, 4), between(1, 3));
  q.canonicalize();
  return q;
}

Rational RandomSource::nonzero_rational() {
  Rational q = 0;
  while (sgn(q) == 0) q = rational();
  return q;
}

Poly RandomSource::poly(std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  Poly out = make_poly(nvars);
  const auto monos = monomials_up_to(nvars, max_degree);
  const auto terms = static_cast<std::size_t>(between(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t)
    out.add_term(monos[static_cast<std::size_t>(between(0, static_cast<long>(monos.size()) - 1))],
                 nonzero_rational());
  return out;
}

WeilElement RandomSource::element(const AlgebraPtr& a) {
  std::vector<Rational> c(a->dim());
  for (auto& q : c) q = coin() ? rational() : Rational(0);
  return WeilElement(a, std::move(c));
}

APoly RandomSource::apoly(std::size_t nvars, const AlgebraPtr& a, unsigned max_degree, std::size_t max_terms) {
  APoly out = make_apoly(nvars, a);
  const auto monos = monomials_up_to(nvars, max_degree);
  const auto terms = static_cast<std::size_t>(between(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t)
    out.add_term(monos[static_cast<std::size_t>(between(0, static_cast<long>(monos.size()) - 1))], element(a));
  return out;
}

APoint RandomSource::point(std::size_t nvars, const AlgebraPtr& a) {
  std::vector<WeilElement> c;
  for (std::size_t i = 0; i < nvars; ++i) c.push_back(element(a));
  return APoint(a, std::move(c));
}

AVectorField RandomSource::avector_field(std::size_t nvars, const AlgebraPtr& a, unsigned max_degree) {
  AVectorField x;
  for (std::size_t i = 0; i < nvars; ++i) x.components.push_back(apoly(nvars, a, max_degree, 3));
  return x;
}

BaseCochain RandomSource::base_cochain(std::size_t nvars, std::size_t p, unsigned max_degree,
                                       std::size_t max_terms) {
  BaseCochain out = make_base_cochain(nvars, p);
  for (const auto& idx : index_sets(nvars, p))
    if (coin() || idx.empty()) out.set(idx, poly(nvars, max_degree, max_terms));
  return out;
}

ACochain RandomSource::a_cochain(ComplexKind kind, std::size_t nvars, std::size_t p, const AlgebraPtr& a,
                                 unsigned max_degree, std::size_t max_terms) {
  ACochain out = make_a_cochain(kind, nvars, p, a);
  for (const auto& idx : index_sets(nvars, p))
    if (coin() || idx.empty()) out.set(idx, apoly(nvars, a, max_degree, max_terms));
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<AlgebraPtr> standard_algebras() {
  return {WeilAlgebra::jet(1, 1), WeilAlgebra::jet(1, 2), WeilAlgebra::jet(2, 2)};
}

std::vector<PoissonStructure> standard_structures() {
  return {PoissonStructure::symplectic(2), PoissonStructure::so3()};
}

namespace {

std::string join(const std::vector<Poly>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out;
}

std::string join(const std::vector<APoly>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out;
}

template <class C>
C determinant(const std::vector<std::vector<C>>& m, const C& zero) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  C total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    C term = one_like(zero);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    if (inversions % 2)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

struct Functional {
  std::size_t var = 0;
  bool differentiate = false;
  std::vector<Rational> at;
};

std::vector<Functional> random_functionals(RandomSource& rs, std::size_t nvars, std::size_t p) {
  std::vector<Functional> out;
  for (std::size_t i = 0; i < p; ++i) {
    Functional f;
    f.var = static_cast<std::size_t>(rs.between(0, static_cast<long>(nvars) - 1));
    f.differentiate = rs.coin();
    for (std::size_t k = 0; k < nvars; ++k) f.at.push_back(rs.rational());
    out.push_back(std::move(f));
  }
  return out;
}

Rational apply_functional(const Functional& l, const Poly& f) {
  const Poly g = l.differentiate ? f.derivative(l.var) : f;
  return g.evaluate(l.at);
}

WeilElement apply_functional(const Functional& l, const APoly& phi, const AlgebraPtr& a) {
  const APoly g = l.differentiate ? phi.derivative(l.var) : phi;
  std::vector<WeilElement> at;
  for (const auto& q : l.at) at.push_back(WeilElement::scalar(a, q));
  return g.evaluate(at);
}

template <class Arg, class Val>
std::optional<std::string> skew_violation(const CallableCochain<Arg, Val>& omega, const std::vector<Arg>& args) {
  if (auto bad = spot_check_skew(omega, args))
    return "not skew in arguments " + std::to_string(bad->first + 1) + "," + std::to_string(bad->second + 1);
  return std::nullopt;
}

}  // namespace

BaseCallable random_skew_callable(RandomSource& rs, std::size_t nvars, std::size_t p) {
  const auto ls = random_functionals(rs, nvars, p);
  const Poly weight = rs.poly(nvars, 2, 3);
  BaseCallable out{ComplexKind::base, p, nullptr, make_poly(nvars)};
  out.fn = [ls, weight](std::span<const Poly> args) {
    std::vector<std::vector<Rational>> m(ls.size(), std::vector<Rational>(ls.size()));
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t k = 0; k < ls.size(); ++k) m[i][k] = apply_functional(ls[i], args[k]);
    return weight * determinant(m, Rational(0));
  };
  return out;
}

MixedCallable random_skew_mixed_callable(RandomSource& rs, std::size_t nvars, std::size_t p, const AlgebraPtr& a) {
  const auto ls = random_functionals(rs, nvars, p);
  const APoly weight = rs.apoly(nvars, a, 2, 3);
  MixedCallable out{ComplexKind::mixed, p, nullptr, make_apoly(nvars, a)};
  out.fn = [ls, weight](std::span<const Poly> args) {
    std::vector<std::vector<Rational>> m(ls.size(), std::vector<Rational>(ls.size()));
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t k = 0; k < ls.size(); ++k) m[i][k] = apply_functional(ls[i], args[k]);
    return weight * WeilElement::scalar(algebra_of(weight), determinant(m, Rational(0)));
  };
  return out;
}

WeilCallable random_skew_weil_callable(RandomSource& rs, std::size_t nvars, std::size_t p, const AlgebraPtr& a) {
  const auto ls = random_functionals(rs, nvars, p);
  const APoly weight = rs.apoly(nvars, a, 2, 3);
  WeilCallable out{ComplexKind::weil, p, nullptr, make_apoly(nvars, a)};
  out.fn = [ls, weight, a](std::span<const APoly> args) {
    std::vector<std::vector<WeilElement>> m(ls.size(), std::vector<WeilElement>(ls.size(), WeilElement::zero(a)));
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t k = 0; k < ls.size(); ++k) m[i][k] = apply_functional(ls[i], args[k], a);
    return weight * determinant(m, WeilElement::zero(a));
  };
  return out;
}

std::vector<Poly> minimize_inputs(std::vector<Poly> inputs,
                                  const std::function<bool(const std::vector<Poly>&)>& fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < inputs.size() && !shrunk; ++i) {
      std::vector<Exponents> monos;
      for (const auto& [e, c] : inputs[i].terms()) monos.push_back(e);
      for (const auto& e : monos) {
        std::vector<Poly> trial = inputs;
        Poly smaller = make_poly(inputs[i].nvars());
        for (const auto& [f, c] : inputs[i].terms())
          if (f != e) smaller.add_term(f, c);
        trial[i] = smaller;
        if (fails(trial)) {
          inputs = std::move(trial);
          shrunk = true;
          break;
        }
      }
    }
  }
  return inputs;
}

// ---------------------------------------------------------------------------
// Weil algebras

CheckResult check_jet_axioms(std::uint64_t seed, std::size_t pairs) {
  CheckResult r{"jet axioms"};
  RandomSource rs(seed);
  for (std::size_t gens = 1; gens <= 3; ++gens)
    for (unsigned k = 0; k <= 3; ++k) {
      const auto a = WeilAlgebra::jet(gens, k);
      const std::string tag = a->name() + ": ";
      if (a->dim() != binomial(gens + k, k)) r.fail(tag + "dim " + std::to_string(a->dim()));
      if (a->ideal_power_dim(k + 1) != 0) r.fail(tag + "m^(k+1) != 0");
      if (a->ideal_power_dim(k) == 0) r.fail(tag + "m^k = 0");
      if (a->height() != k) r.fail(tag + "height " + std::to_string(a->height()));
      for (std::size_t t = 0; t < pairs; ++t) {
        const WeilElement x = rs.element(a), y = rs.element(a);
        ++r.cases;
        if ((x * y).augmentation() != x.augmentation() * y.augmentation())
          r.fail(tag + "aug(xy) != aug(x)aug(y) for x=" + x.to_string() + ", y=" + y.to_string());
      }
    }
  r.detail = "jet(r,k), 1<=r<=3, 0<=k<=3";
  return r;
}

CheckResult check_table_algebras() {
  CheckResult r{"table algebras and homomorphisms"};
  auto expect = [&](bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
  };
  // Dual numbers from a raw table.
  const StructureTable dual = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  const auto d = WeilAlgebra::check_table({"1", "e"}, dual, {1, 0});
  expect(d.ok && WeilAlgebra::from_table({"1", "e"}, dual, {1, 0})->height() == 1, "dual table rejected");
  // R x R has the idempotent (0,1) in the kernel of the augmentation.
  const StructureTable rxr = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  const auto bad = WeilAlgebra::check_table({"e1", "e2"}, rxr, {1, 0});
  expect(!bad.ok && !bad.witness.empty(), "R x R accepted");
  // A non-associative table.
  StructureTable na = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                       {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                       {{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}};
  expect(!WeilAlgebra::check_table({"1", "a", "b"}, na, {1, 0, 0}).ok, "non-associative table accepted");
  // Round trip through the raw table.
  const auto j = WeilAlgebra::jet(2, 2);
  expect(WeilAlgebra::from_table(j->labels(), j->table(), j->augmentation())->same_as(*j), "table round trip");
  // Homomorphisms.
  expect(!AlgebraHom::truncation(WeilAlgebra::jet(1, 2), WeilAlgebra::jet(1, 1)).validate(), "truncation");
  expect(!AlgebraHom::augmentation(WeilAlgebra::jet(2, 2)).validate(), "augmentation");
  const auto j12 = WeilAlgebra::jet(1, 2);
  const AlgebraHom scale(j12, j12, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  expect(scale.validate().has_value(), "e1 -> 2e1, e1^2 -> 2e1^2 accepted as a homomorphism");
  const auto q = WeilAlgebra::monomial_quotient({"a", "b"}, std::vector<std::string>{"a^3", "a*b", "b^2"});
  expect(q->dim() == 4 && q->height() == 2, "quotient (a^3, ab, b^2)");
  return r;
}

// ---------------------------------------------------------------------------
// Prolongation

CheckResult check_prolong_homomorphism(std::uint64_t seed, std::size_t triples, std::size_t maps) {
  CheckResult r{"prolongation homomorphism"};
  RandomSource rs(seed);
  const auto algebras = standard_algebras();
  for (std::size_t t = 0; t < triples; ++t) {
    const auto& a = algebras[t % algebras.size()];
    const std::size_t n = 1 + t % 3;
    const Poly f = rs.poly(n, 3, 4), g = rs.poly(n, 3, 4);
    const APoint xi = rs.point(n, a);
    ++r.cases;
    auto fails = [&](const std::vector<Poly>& in) {
      const APoly fa = prolong_function(in[0], a), ga = prolong_function(in[1], a);
      return !(fa * ga == prolong_function(in[0] * in[1], a)) ||
             !(eval_A(prolong_function(in[0] * in[1], a), xi) == eval_A(fa, xi) * eval_A(ga, xi)) ||
             !(eval_A(prolong_function(in[0] + in[1], a), xi) == eval_A(fa, xi) + eval_A(ga, xi));
    };
    if (fails({f, g})) r.fail("(fg)^A != f^A g^A on " + a->name() + ": f, g = " + join(minimize_inputs({f, g}, fails)));
  }
  for (std::size_t t = 0; t < maps; ++t) {
    const auto& a = algebras[t % algebras.size()];
    const std::size_t n = 1 + t % 2, m = 1 + (t / 2) % 3, k = 1 + (t / 3) % 2;
    std::vector<Poly> h, g;
    for (std::size_t i = 0; i < m; ++i) h.push_back(rs.poly(n, 2, 3));
    for (std::size_t i = 0; i < k; ++i) g.push_back(rs.poly(m, 2, 3));
    std::vector<Poly> gh;
    for (const auto& gi : g) gh.push_back(gi.compose(h));
    const APoint xi = rs.point(n, a);
    ++r.cases;
    if (!(prolong_map(gh, xi) == prolong_map(g, prolong_map(h, xi))))
      r.fail("(g o h)^A != g^A o h^A on " + a->name() + ": h = (" + join(h) + "), g = (" + join(g) + ")");
  }
  return r;
}

CheckResult check_tilde_extension(std::uint64_t seed, std::size_t per_algebra) {
  CheckResult r{"tilde extension"};
  RandomSource rs(seed);
  auto algebras = standard_algebras();
  algebras.push_back(WeilAlgebra::monomial_quotient({"a", "b"}, std::vector<std::string>{"a^3", "a*b", "b^2"}));
  for (const auto& a : algebras)
    for (std::size_t t = 0; t < per_algebra; ++t) {
      const std::size_t n = 1 + t % 3;
      const AVectorField x = rs.avector_field(n, a, 2);
      const APoly phi = rs.apoly(n, a, 2, 3), psi = rs.apoly(n, a, 2, 3);
      const WeilElement s = rs.element(a), u = rs.element(a);
      const Poly f = rs.poly(n, 3, 3), g = rs.poly(n, 2, 3);
      ++r.cases;
      const std::string tag = a->name() + ", X = (" + join(x.components) + "), ";
      if (!(tilde_apply(x, phi * s + psi * u) == tilde_apply(x, phi) * s + tilde_apply(x, psi) * u))
        r.fail(tag + "not A-linear on " + to_string(phi) + ", " + to_string(psi));
      else if (!(tilde_apply(x, phi * psi) == phi * tilde_apply(x, psi) + psi * tilde_apply(x, phi)))
        r.fail(tag + "Leibniz fails on " + to_string(phi) + ", " + to_string(psi));
      else if (!(tilde_apply(x, prolong_function(f, a)) == x.on_function(f)))
        r.fail(tag + "X~(f^A) != X(f) for f = " + to_string(f));
      else if (!(x.on_function(f * g) ==
                 prolong_function(f, a) * x.on_function(g) + prolong_function(g, a) * x.on_function(f)))
        r.fail(tag + "X is not a derivation on f, g = " + to_string(f) + ", " + to_string(g));
    }
  return r;
}

CheckResult check_prolonged_vector_fields(std::uint64_t seed, std::size_t count) {
  CheckResult r{"prolonged vector fields"};
  RandomSource rs(seed);
  const auto algebras = standard_algebras();
  for (std::size_t t = 0; t < count; ++t) {
    const auto& a = algebras[t % algebras.size()];
    const std::size_t n = 1 + t % 3;
    VectorField theta, eta;
    for (std::size_t i = 0; i < n; ++i) {
      theta.components.push_back(rs.poly(n, 2, 3));
      eta.components.push_back(rs.poly(n, 2, 3));
    }
    const Poly f = rs.poly(n, 3, 3);
    ++r.cases;
    if (!(lie_bracket(prolong_vector_field(theta, a), prolong_vector_field(eta, a)) ==
          prolong_vector_field(lie_bracket(theta, eta), a)))
      r.fail("[theta^A, eta^A] != [theta, eta]^A for theta = (" + join(theta.components) + "), eta = (" +
             join(eta.components) + ")");
    else if (!(tilde_apply(prolong_vector_field(theta, a), prolong_function(f, a)) ==
               prolong_function(theta.apply(f), a)))
      r.fail("theta^A(f^A) != (theta f)^A for f = " + to_string(f));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Poisson structures

CheckResult check_shipped_jacobi() {
  CheckResult r{"Jacobi identity"};
  for (const auto& pi : {PoissonStructure::symplectic(2), PoissonStructure::symplectic(4), PoissonStructure::so3(),
                         PoissonStructure::zero(3)}) {
    ++r.cases;
    const auto res = jacobi_check(pi);
    if (!res.ok) r.fail(pi.name() + " fails Jacobi");
  }
  const std::size_t n = 3;
  std::map<std::pair<std::size_t, std::size_t>, Poly> bad{{{1, 2}, parse_poly("y", n)}, {{1, 3}, parse_poly("x", n)}};
  const auto pi = PoissonStructure::from_entries(n, bad, PoissonStructure::Jacobi::waive);
  const auto res = jacobi_check(pi);
  ++r.cases;
  if (res.ok || !res.residual || !(*res.residual == parse_poly("-y", n)))
    r.fail("non-Poisson matrix {x,y}=y, {x,z}=x was not rejected with residual -y");
  return r;
}

CheckResult check_tau_identities(std::uint64_t seed, std::size_t per_structure) {
  CheckResult r{"tau identities"};
  RandomSource rs(seed);
  const auto algebras = standard_algebras();
  for (const auto& pi : standard_structures())
    for (std::size_t t = 0; t < per_structure; ++t) {
      const auto& a = algebras[t % algebras.size()];
      const std::size_t n = pi.nvars();
      const APoly phi = rs.apoly(n, a, 2, 3), psi = rs.apoly(n, a, 2, 3), chi = rs.apoly(n, a, 2, 2);
      const WeilElement s = rs.element(a);
      const Poly f = rs.poly(n, 3, 3);
      const AVectorField tp = tau(pi, phi), tq = tau(pi, psi);
      ++r.cases;
      const std::string tag = pi.name() + ", " + a->name() + ": ";
      if (!(tau(pi, phi + psi) == tp + tq))
        r.fail(tag + "tau(phi+psi) != tau(phi)+tau(psi) for " + to_string(phi) + ", " + to_string(psi));
      else if (!(tau(pi, phi * s) == s * tp))
        r.fail(tag + "tau(a phi) != a tau(phi) for a = " + s.to_string() + ", phi = " + to_string(phi));
      else if (!(tau(pi, phi * psi) == phi * tq + psi * tp))
        r.fail(tag + "tau(phi psi) != phi tau(psi) + psi tau(phi) for " + to_string(phi) + ", " + to_string(psi));
      else if (!(tau(pi, prolong_function(f, a)) == prolong_vector_field(ad(pi, f), a)))
        r.fail(tag + "tau(f^A) != [ad(f)]^A for f = " + to_string(f));
      else if (!(tilde_apply(tau(pi, phi * psi), chi) ==
                 phi * tilde_apply(tq, chi) + psi * tilde_apply(tp, chi)))
        r.fail(tag + "tau~(phi psi) law fails on " + to_string(chi));
    }
  return r;
}

CheckResult check_lifted_bracket(std::uint64_t seed, std::size_t pairs, std::size_t jacobi_triples) {
  CheckResult r{"lifted bracket"};
  RandomSource rs(seed);
  for (const auto& pi : standard_structures())
    for (const auto& a : standard_algebras()) {
      const std::size_t n = pi.nvars();
      const std::string tag = pi.name() + ", " + a->name() + ": ";
      for (std::size_t t = 0; t < pairs; ++t) {
        const Poly f = rs.poly(n, 3, 4), g = rs.poly(n, 3, 4);
        ++r.cases;
        auto fails = [&](const std::vector<Poly>& in) {
          return !(bracket_A(pi, prolong_function(in[0], a), prolong_function(in[1], a)) ==
                   prolong_function(bracket(pi, in[0], in[1]), a));
        };
        if (fails({f, g})) r.fail(tag + "{f^A,g^A}_A != ({f,g})^A for f, g = " + join(minimize_inputs({f, g}, fails)));
      }
      for (std::size_t t = 0; t < jacobi_triples; ++t) {
        const APoly u = rs.apoly(n, a, 2, 2), v = rs.apoly(n, a, 2, 2), w = rs.apoly(n, a, 2, 2);
        ++r.cases;
        const APoly cyc = bracket_A(pi, u, bracket_A(pi, v, w)) + bracket_A(pi, v, bracket_A(pi, w, u)) +
                          bracket_A(pi, w, bracket_A(pi, u, v));
        if (!cyc.is_zero())
          r.fail(tag + "Jacobi of {,}_A fails on " + join(std::vector<APoly>{u, v, w}) + ": " + to_string(cyc));
        else if (!(bracket_A(pi, u, v) == bracket_A_closed_form(pi, u, v)))
          r.fail(tag + "tau route and coordinate formula disagree on " + to_string(u) + ", " + to_string(v));
        else if (!(bracket_A(pi, u, v) == -bracket_A(pi, v, u)))
          r.fail(tag + "{,}_A not skew on " + to_string(u) + ", " + to_string(v));
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Cochain complexes

CheckResult check_chain_map(std::uint64_t seed, std::size_t per_config) {
  CheckResult r{"chain map"};
  RandomSource rs(seed);
  for (const auto& pi : standard_structures())
    for (const auto& a : standard_algebras())
      for (std::size_t p = 0; p <= 2; ++p)
        for (std::size_t t = 0; t < per_config; ++t) {
          const BaseCochain eta = rs.base_cochain(pi.nvars(), p, 3, 3);
          const BaseCochain d_eta = d_base(pi, eta);
          ++r.cases;
          const ACochain lifted = prolong_cochain(eta, a);
          if (!(d_tilde(pi, lifted) == prolong_cochain(d_eta, a)))
            r.fail(pi.name() + ", " + a->name() + ", p=" + std::to_string(p) + ": d~(eta^A) != (d eta)^A for eta = " +
                   to_string(eta));
          else if (!(d_tilde_A(pi, as_weil(lifted)) == as_weil(prolong_cochain(d_eta, a))))
            r.fail(pi.name() + ", " + a->name() + ", p=" + std::to_string(p) +
                   ": d~_A(eta^A) != (d eta)^A for eta = " + to_string(eta));
        }
  return r;
}

CheckResult check_closed_iff_closed(std::uint64_t seed, std::size_t count) {
  CheckResult r{"closed iff closed"};
  RandomSource rs(seed);
  const auto algebras = standard_algebras();
  std::size_t witnesses = 0;
  for (const auto& pi : standard_structures()) {
    const std::size_t n = pi.nvars();
    for (std::size_t t = 0; t < count; ++t) {
      const auto& a = algebras[t % algebras.size()];
      const Poly h = rs.poly(n, 3, 4);
      BaseCochain eta = make_base_cochain(n, 1);
      const VectorField x = ad(pi, h);
      for (std::size_t j = 0; j < n; ++j) eta.set({j}, x.components[j]);
      ++r.cases;
      if (!is_closed(pi, eta) || !is_closed(pi, prolong_cochain(eta, a)))
        r.fail(pi.name() + ", " + a->name() + ": ad(h) or its lift not closed for h = " + to_string(h));
    }
    for (std::size_t t = 0; t < count; ++t) {
      const auto& a = algebras[t % algebras.size()];
      BaseCochain eta = rs.base_cochain(n, 1, 3, 3);
      while (d_base(pi, eta).is_zero()) eta = rs.base_cochain(n, 1, 3, 3);
      ++r.cases;
      const auto base = is_closed(pi, eta);
      const auto lifted = is_closed(pi, prolong_cochain(eta, a));
      if (base.closed || lifted.closed)
        r.fail(pi.name() + ", " + a->name() + ": non-closed eta reported closed: " + to_string(eta));
      else if (!lifted.witness || !lifted.residual)
        r.fail(pi.name() + ", " + a->name() + ": no witness for non-closed lift of " + to_string(eta));
      else
        ++witnesses;
    }
  }
  r.detail = std::to_string(witnesses) + " non-closed witnesses produced";
  return r;
}

CheckResult check_cohomologous_lift(std::uint64_t seed, std::size_t count) {
  CheckResult r{"cohomologous lift"};
  RandomSource rs(seed);
  const auto algebras = standard_algebras();
  for (const auto& pi : standard_structures()) {
    const std::size_t n = pi.nvars();
    for (std::size_t t = 0; t < count; ++t) {
      const auto& a = algebras[t % algebras.size()];
      const std::size_t p = 1 + t % 2;
      const BaseCochain eta = d_base(pi, rs.base_cochain(n, p - 1, 3, 3));  // closed
      const BaseCochain nu = rs.base_cochain(n, p - 1, 3, 3);
      const BaseCochain eta2 = eta - d_base(pi, nu);  // eta - eta' = d nu
      ++r.cases;
      const std::string tag = pi.name() + ", " + a->name() + ", p=" + std::to_string(p) + ": ";
      const ACochain diff = prolong_cochain(eta, a) - prolong_cochain(eta2, a);
      if (!(diff == d_tilde(pi, prolong_cochain(nu, a))))
        r.fail(tag + "eta^A - eta'^A != d~(nu^A) for nu = " + to_string(nu));
      else if (!is_closed(pi, prolong_cochain(eta2, a)))
        r.fail(tag + "eta'^A not closed for eta' = " + to_string(eta2));
    }
  }
  return r;
}

namespace {

template <class Cochain, class D>
void basis_nilpotency(CheckResult& r, const std::string& tag, const Cochain& e, D&& d) {
  ++r.cases;
  const auto dd = d(d(e));
  if (!dd.is_zero()) r.fail(tag + ": d(d(" + to_string(e) + ")) = " + to_string(dd));
}

}  // namespace

CheckResult check_nilpotency(std::uint64_t seed, std::size_t probes, SignConvention sc) {
  CheckResult r{sc == SignConvention::standard ? "nilpotency" : "nilpotency (printed sign variant)"};
  const auto structures = standard_structures();
  const auto algebras = standard_algebras();
  // Symbolic: every basis multivector, lowest p first so a failure names the smallest witness.
  for (std::size_t p = 0; p <= 2; ++p)
    for (const auto& pi : structures) {
      const std::size_t n = pi.nvars();
      const std::vector<unsigned> degrees{0, 1, 2, 3};
      for (const auto& e : enumerate_basis(ComplexKind::base, n, nullptr, p, degrees)) {
        BaseCochain c = make_base_cochain(n, p);
        c.set(e.indices, Poly::monomial(n, e.monomial, 1));
        basis_nilpotency(r, "base, " + pi.name() + ", p=" + std::to_string(p), c,
                         [&](const BaseCochain& w) { return d_base(pi, w, sc); });
      }
      for (const auto kind : {ComplexKind::mixed, ComplexKind::weil})
        for (const auto& a : algebras)
          for (const auto& e : enumerate_basis(kind, n, a, p, degrees)) {
            ACochain c = make_a_cochain(kind, n, p, a);
            c.set(e.indices, APoly::monomial(n, e.monomial, WeilElement::basis(a, e.algebra_index)));
            basis_nilpotency(r, to_string(kind) + ", " + pi.name() + ", " + a->name() + ", p=" + std::to_string(p), c,
                             [&](const ACochain& w) { return coboundary(pi, w, sc); });
          }
    }
  // Randomized callable cochains, not restricted to multiderivations.
  RandomSource rs(seed);
  for (std::size_t t = 0; t < probes; ++t) {
    const auto& pi = structures[t % structures.size()];
    const auto& a = algebras[(t / 2) % algebras.size()];
    const std::size_t n = pi.nvars();
    const std::size_t p = static_cast<std::size_t>(rs.between(0, 2));
    const std::string tag = pi.name() + ", p=" + std::to_string(p) + ", probe ";
    ++r.cases;
    switch ((t / 6) % 3) {
      case 0: {
        const BaseCallable omega = random_skew_callable(rs, n, p);
        std::vector<Poly> args;
        for (std::size_t i = 0; i < p + 2; ++i) args.push_back(rs.poly(n, 2, 3));
        if (auto bad = skew_violation(omega, std::vector<Poly>(args.begin(), args.begin() + p))) r.fail(tag + *bad);
        const Poly res = d_squared_probe(pi, omega, args, sc);
        if (!res.is_zero()) r.fail("base callable, " + tag + "(" + join(args) + "): " + to_string(res));
        break;
      }
      case 1: {
        const MixedCallable omega = random_skew_mixed_callable(rs, n, p, a);
        std::vector<Poly> args;
        for (std::size_t i = 0; i < p + 2; ++i) args.push_back(rs.poly(n, 2, 3));
        const APoly res = d_squared_probe(pi, omega, args, sc);
        if (!res.is_zero()) r.fail("mixed callable, " + a->name() + ", " + tag + "(" + join(args) + "): " + to_string(res));
        break;
      }
      default: {
        const WeilCallable omega = random_skew_weil_callable(rs, n, p, a);
        std::vector<APoly> args;
        for (std::size_t i = 0; i < p + 2; ++i) args.push_back(rs.apoly(n, a, 2, 2));
        const APoly res = d_squared_probe(pi, omega, args, sc);
        if (!res.is_zero()) r.fail("weil callable, " + a->name() + ", " + tag + "(" + join(args) + "): " + to_string(res));
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Homology

CheckResult check_center(std::uint64_t seed) {
  CheckResult r{"center"};
  RandomSource rs(seed);
  const auto dual = WeilAlgebra::jet(1, 1);
  const auto sym = PoissonStructure::symplectic(2);
  const auto so3 = PoissonStructure::so3();
  auto expect_basis = [&](const CenterReport& c, const std::vector<APoly>& want, const std::string& tag) {
    ++r.cases;
    if (!(c.basis == want)) {
      std::string got;
      for (const auto& t : c.text) got += (got.empty() ? "" : ", ") + t;
      r.fail(tag + ": center basis {" + got + "}");
    }
  };
  const APoly one = APoly::constant(2, WeilElement::one(dual));
  const APoly eps = APoly::constant(2, WeilElement::basis(dual, 1));
  for (unsigned D : {2u, 3u}) {
    expect_basis(center_report(sym, dual, D, ComplexKind::mixed), {one, eps},
                 "symplectic, dual, mixed, D=" + std::to_string(D));
    expect_basis(center_report(sym, dual, D, ComplexKind::weil), {one, eps},
                 "symplectic, dual, weil, D=" + std::to_string(D));
  }
  const auto R = WeilAlgebra::real();
  expect_basis(center_report(so3, R, 2, ComplexKind::base),
               {prolong_function(parse_poly("1", 3), R), prolong_function(parse_poly("x^2+y^2+z^2", 3), R)},
               "so3, R, D=2");
  // Independent confirmation: central elements bracket to zero against random probes.
  for (const auto& [pi, a, kind] : {std::tuple{sym, dual, ComplexKind::mixed}, std::tuple{so3, dual, ComplexKind::weil},
                                    std::tuple{so3, WeilAlgebra::jet(1, 2), ComplexKind::mixed}}) {
    const auto c = center_report(pi, a, 2, kind);
    for (const auto& phi : c.basis)
      for (int t = 0; t < 10; ++t) {
        const APoly probe = rs.apoly(pi.nvars(), a, 2, 3);
        const Poly f = rs.poly(pi.nvars(), 3, 3);
        ++r.cases;
        if (!bracket_A(pi, phi, probe).is_zero() ||
            !tilde_apply(prolong_ad_tilde(pi, f, a), phi).is_zero())
          r.fail(pi.name() + ", " + a->name() + ": central " + to_string(phi) + " brackets nontrivially with " +
                 to_string(probe));
      }
  }
  return r;
}

CheckResult check_h1_symplectic() {
  CheckResult r{"H^1 = 0 (symplectic)"};
  const auto sym = PoissonStructure::symplectic(2);
  const auto dual = WeilAlgebra::jet(1, 1);
  std::ostringstream detail;
  for (unsigned D = 1; D <= 4; ++D)
    for (const auto kind : {ComplexKind::base, ComplexKind::mixed, ComplexKind::weil}) {
      const auto rep = betti(kind, sym, dual, 0, 2, D);
      const std::size_t unit = kind == ComplexKind::base ? 1 : dual->dim();
      const std::vector<std::size_t> want{unit, 0, 0};
      ++r.cases;
      std::vector<std::size_t> got;
      for (const auto& row : rep.rows) got.push_back(row.homology.value_or(999));
      if (got != want) {
        std::string s;
        for (auto g : got) s += (s.empty() ? "" : ",") + std::to_string(g);
        r.fail(to_string(kind) + ", D=" + std::to_string(D) + ": H = (" + s + ")");
        if (!rep.representatives.empty() && rep.representatives.count(1))
          r.witness += "; H^1 representative " + rep.representatives.at(1).front();
      }
      if (kind != ComplexKind::base && rep.row(0).a_rank != std::optional<std::size_t>(1))
        r.fail(to_string(kind) + ", D=" + std::to_string(D) + ": H^0 is not A-rank 1");
    }
  r.detail = "D=1..4, complexes base/mixed/weil, A = dual numbers";
  return r;
}

CheckResult check_restriction_of_scalars() {
  CheckResult r{"restriction of scalars"};
  const auto sym = PoissonStructure::symplectic(2);
  for (unsigned D = 0; D <= 3; ++D) {
    const auto base = betti(ComplexKind::base, sym, nullptr, 0, 2, D);
    for (const auto& a : standard_algebras())
      for (const auto kind : {ComplexKind::weil, ComplexKind::mixed}) {
        const auto lifted = betti(kind, sym, a, 0, 2, D);
        const std::size_t k = a->dim();
        for (std::size_t p = 0; p <= 2; ++p) {
          const auto& b = base.row(p);
          const auto& w = lifted.row(p);
          ++r.cases;
          bool ok = w.dim == k * b.dim && w.rank == k * b.rank && w.ker == k * b.ker &&
                    w.homology == std::optional<std::size_t>(k * *b.homology) && w.slices.size() == b.slices.size();
          for (std::size_t s = 0; ok && s < b.slices.size(); ++s)
            ok = w.slices[s].rank == k * b.slices[s].rank && w.slices[s].dim == k * b.slices[s].dim;
          if (!ok)
            r.fail(to_string(kind) + ", " + a->name() + ", D=" + std::to_string(D) + ", p=" + std::to_string(p) +
                   ": (dim,rank,ker) = (" + std::to_string(w.dim) + "," + std::to_string(w.rank) + "," +
                   std::to_string(w.ker) + ") vs base (" + std::to_string(b.dim) + "," + std::to_string(b.rank) +
                   "," + std::to_string(b.ker) + ")");
        }
      }
  }
  return r;
}

CheckResult check_composites_vanish(unsigned max_degree) {
  CheckResult r{"composite matrices vanish"};
  std::vector<PoissonStructure> structures = standard_structures();
  structures.push_back(PoissonStructure::zero(2));
  const auto dual = WeilAlgebra::jet(1, 1);
  for (const auto& pi : structures)
    for (const auto kind : {ComplexKind::base, ComplexKind::mixed, ComplexKind::weil})
      for (unsigned D = 1; D <= max_degree; ++D)
        for (std::size_t p = 0; p + 1 <= pi.nvars(); ++p) {
          const unsigned next = pi.homogeneity() == Homogeneity::constant ? D - 1 : D;
          const auto first = assemble_matrix(kind, pi, dual, p, D);
          const auto second = assemble_matrix(kind, pi, dual, p + 1, next);
          ++r.cases;
          if (first.codomain != second.domain) {
            r.fail(pi.name() + ": truncations do not compose at p=" + std::to_string(p));
            continue;
          }
          const Matrix prod = second.entries * first.entries;
          if (!prod.is_zero())
            r.fail(to_string(kind) + ", " + pi.name() + ", D=" + std::to_string(D) + ": d_" + std::to_string(p + 1) +
                   " d_" + std::to_string(p) + " != 0");
          ++r.cases;
          if (rank_bareiss(first.entries) + kernel_basis(first.entries).size() != first.domain.size())
            r.fail(to_string(kind) + ", " + pi.name() + ": rank + nullity != dim at p=" + std::to_string(p));
        }
  return r;
}

CheckResult check_permutation_invariance(std::uint64_t seed) {
  CheckResult r{"basis order invariance"};
  const auto dual = WeilAlgebra::jet(1, 1);
  struct Case {
    ComplexKind kind;
    PoissonStructure pi;
    unsigned D;
  };
  const std::vector<Case> cases{{ComplexKind::base, PoissonStructure::so3(), 2},
                                {ComplexKind::mixed, PoissonStructure::symplectic(2), 2},
                                {ComplexKind::weil, PoissonStructure::so3(), 1}};
  for (const auto& c : cases) {
    const auto plain = betti(c.kind, c.pi, dual, 0, c.pi.nvars(), c.D);
    for (std::uint64_t s = 0; s < 3; ++s) {
      EngineOptions opts;
      opts.shuffle_seed = seed + s;
      const auto shuffled = betti(c.kind, c.pi, dual, 0, c.pi.nvars(), c.D, opts);
      ++r.cases;
      for (std::size_t p = 0; p < plain.rows.size(); ++p) {
        const auto &a = plain.rows[p], &b = shuffled.rows[p];
        if (a.dim != b.dim || a.rank != b.rank || a.ker != b.ker || a.homology != b.homology) {
          r.fail(to_string(c.kind) + ", " + c.pi.name() + ": shuffled basis changes row p=" + std::to_string(p));
          break;
        }
      }
    }
  }
  // Euler characteristic per complex weight for the constant structure.
  const auto rep = betti(ComplexKind::base, PoissonStructure::symplectic(2), nullptr, 0, 2, 4);
  for (int s = 0; s <= 4; ++s) {
    long chi_dim = 0, chi_h = 0;
    for (const auto& row : rep.rows) {
      const int w = s - static_cast<int>(row.p);
      if (w < 0 || w > 4) continue;
      const long sign = row.p % 2 ? -1 : 1;
      chi_dim += sign * static_cast<long>(row.slices[static_cast<std::size_t>(w)].dim);
      chi_h += sign * static_cast<long>(row.slices[static_cast<std::size_t>(w)].homology);
    }
    ++r.cases;
    if (chi_dim != chi_h) r.fail("Euler characteristic mismatch at weight " + std::to_string(s));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weil", "prolong", "poisson", "complexes", "homology", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, SignConvention sc) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw ParseError("unknown suite \"" + name + "\" (expected weil, prolong, poisson, complexes, homology or all)");
  SuiteReport rep{name, seed, {}};
  const bool all = name == "all";
  if (all || name == "weil") {
    rep.checks.push_back(check_jet_axioms(seed));
    rep.checks.push_back(check_table_algebras());
  }
  if (all || name == "prolong") {
    rep.checks.push_back(check_prolong_homomorphism(seed + 1));
    rep.checks.push_back(check_tilde_extension(seed + 2));
    rep.checks.push_back(check_prolonged_vector_fields(seed + 3));
  }
  if (all || name == "poisson") {
    rep.checks.push_back(check_shipped_jacobi());
    rep.checks.push_back(check_tau_identities(seed + 4));
    rep.checks.push_back(check_lifted_bracket(seed + 5));
  }
  if (all || name == "complexes") {
    rep.checks.push_back(check_chain_map(seed + 6));
    rep.checks.push_back(check_closed_iff_closed(seed + 7));
    rep.checks.push_back(check_cohomologous_lift(seed + 8));
    rep.checks.push_back(check_nilpotency(seed + 9, 100, sc));
  }
  if (all || name == "homology") {
    rep.checks.push_back(check_center(seed + 10));
    rep.checks.push_back(check_h1_symplectic());
    rep.checks.push_back(check_restriction_of_scalars());
    rep.checks.push_back(check_composites_vanish());
    rep.checks.push_back(check_permutation_invariance(seed + 11));
  }
  return rep;
}

}  // namespace weil
