#include "weil/weil_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "lexer.hpp"
#include "weil/linalg.hpp"

namespace weil {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

std::vector<Rational> unit_vector(std::size_t dim, std::size_t i) {
  std::vector<Rational> v(dim);
  v[i] = 1;
  return v;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

std::vector<Rational> table_product(const StructureTable& t, const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
  const std::size_t n = t.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(t[i][j][k]) != 0) out[k] += ab * t[i][j][k];
    }
  }
  return out;
}

std::string format_vector(const std::vector<std::string>& labels, const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!out.empty()) out += sgn(v[i]) > 0 ? "+" : "";
    out += to_string(v[i]) + "*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

// Powers of an ideal given by a spanning set, using `mul` for products.
// Returns the dimensions dim(I^1), dim(I^2), ... up to the first zero power,
// or up to the first power equal to its predecessor (non-nilpotent).
template <class Mul>
std::vector<std::vector<std::vector<Rational>>> ideal_powers(
    const std::vector<std::vector<Rational>>& ideal, std::size_t dim, Mul&& mul) {
  std::vector<std::vector<std::vector<Rational>>> powers;
  auto current = span_basis(ideal, dim);
  while (!current.empty()) {
    powers.push_back(current);
    std::vector<std::vector<Rational>> prods;
    for (const auto& a : current)
      for (const auto& b : powers.front()) {
        auto p = mul(a, b);
        if (!all_zero(p)) prods.push_back(std::move(p));
      }
    auto next = span_basis(prods, dim);
    if (next.size() == current.size()) {
      powers.push_back(next);
      break;
    }
    current = std::move(next);
  }
  return powers;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// "1", an identifier, or a monomial in identifiers such as "e1^2*e2".
bool valid_label(const std::string& s) {
  if (s == "1") return true;
  std::string_view rest(s);
  while (true) {
    const auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    const auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      const auto power = factor.substr(caret + 1);
      if (power.empty() || !std::all_of(power.begin(), power.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return false;
      factor = factor.substr(0, caret);
    }
    if (!valid_identifier(factor)) return false;
    if (star == std::string_view::npos) return true;
    rest = rest.substr(star + 1);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

AlgebraPtr WeilAlgebra::real() {
  static const AlgebraPtr r = jet(0, 0);
  return r;
}

AlgebraPtr WeilAlgebra::jet(std::size_t generators, unsigned order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<Exponents> basis =
      (generators == 0 || order == 0) ? std::vector<Exponents>{Exponents(generators, 0)}
                                      : monomials_up_to(generators, order);

  auto a = std::shared_ptr<WeilAlgebra>(new WeilAlgebra());
  a->name_ = (generators == 0 || order == 0)
                 ? std::string("R")
                 : "jet(" + std::to_string(generators) + "," + std::to_string(order) + ")";
  a->generators_ = names;
  a->exponents_ = basis;
  a->finish();
  return a;
}

AlgebraPtr WeilAlgebra::monomial_quotient(const std::vector<std::string>& vars,
                                          const std::vector<std::string>& relations,
                                          std::optional<unsigned> degree_cap) {
  std::vector<Exponents> rels;
  for (const auto& r : relations) rels.push_back(parse_monomial(r, vars));
  return monomial_quotient(vars, rels, degree_cap);
}

AlgebraPtr WeilAlgebra::monomial_quotient(const std::vector<std::string>& vars,
                                          const std::vector<Exponents>& relations,
                                          std::optional<unsigned> degree_cap) {
  const std::size_t n = vars.size();
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw ParseError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw ParseError("duplicate variable name '" + v + "'");
  }
  for (const auto& r : relations) {
    if (r.size() != n) throw MismatchError("relation monomial has wrong number of variables");
    if (total_degree(r) == 0)
      throw ValidationError("relation 1 makes the quotient zero, not a local algebra", "1");
  }

  // Per-variable exponent bound from pure powers in the ideal.
  std::vector<unsigned> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<unsigned> best;
    for (const auto& r : relations) {
      const bool pure = std::all_of(r.begin(), r.end(), [&, k = std::size_t{0}](unsigned e) mutable {
        return k++ == i || e == 0;
      });
      if (pure && r[i] > 0) best = best ? std::min(*best, r[i]) : r[i];
    }
    if (best) {
      bound[i] = *best - 1;
    } else if (degree_cap) {
      bound[i] = *degree_cap;
    } else {
      throw ValidationError("quotient is infinite-dimensional: no pure power of '" + vars[i] +
                                "' lies in the ideal and no degree cap was given",
                            vars[i]);
    }
  }

  std::vector<Exponents> basis;
  Exponents cur(n, 0);
  // Odometer over the box [0, bound].
  while (true) {
    const bool killed = std::any_of(relations.begin(), relations.end(),
                                    [&](const Exponents& r) { return divides(r, cur); });
    if (!killed && (!degree_cap || total_degree(cur) <= *degree_cap)) basis.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == bound[i]) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  std::sort(basis.begin(), basis.end(), GradedLex{});

  auto a = std::shared_ptr<WeilAlgebra>(new WeilAlgebra());
  a->name_ = "quotient[" + std::to_string(basis.size()) + "]";
  a->generators_ = vars;
  a->exponents_ = std::move(basis);
  a->finish();
  return a;
}

TableCheck WeilAlgebra::check_table(const std::vector<std::string>& labels,
                                    const StructureTable& t, const std::vector<Rational>& aug) {
  const std::size_t n = labels.size();
  auto fail = [](std::string reason, std::string witness) {
    return TableCheck{false, std::move(reason), std::move(witness)};
  };
  if (n == 0) return fail("empty basis", "");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!valid_label(l)) return fail("invalid basis label", l);
    if (!seen.insert(l).second) return fail("duplicate basis label", l);
  }
  if (t.size() != n) return fail("table must be dim x dim x dim", "rows=" + std::to_string(t.size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) return fail("table must be dim x dim x dim", "row " + labels[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j].size() != n)
        return fail("table must be dim x dim x dim", "(" + labels[i] + "," + labels[j] + ")");
  }
  if (aug.size() != n) return fail("augmentation length differs from dimension", "");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[i][j] != t[j][i]) return fail("table is not commutative", labels[i] + "*" + labels[j]);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = table_product(t, t[i][j], unit_vector(n, k));
        const auto right = table_product(t, unit_vector(n, i), t[j][k]);
        if (left != right)
          return fail("table is not associative",
                      "(" + labels[i] + "*" + labels[j] + ")*" + labels[k] + " != " + labels[i] +
                          "*(" + labels[j] + "*" + labels[k] + ")");
      }

  // Unit: solve sum_i u_i c[i][j][k] = delta_jk.
  Matrix sys(n * n, n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = t[i][j][k];
      sys(j * n + k, n) = (j == k) ? 1 : 0;
    }
  const RowEchelon e = rref(sys);
  if (!e.pivots.empty() && e.pivots.back() == n) return fail("algebra has no unit element", "");
  std::vector<Rational> unit(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) unit[e.pivots[r]] = e.reduced(r, n);

  if (dot(aug, unit) != 1) return fail("augmentation does not map the unit to 1", format_vector(labels, unit));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (dot(aug, t[i][j]) != aug[i] * aug[j])
        return fail("augmentation is not multiplicative", "(" + labels[i] + "," + labels[j] + ")");

  // Maximal ideal: e_i - aug(e_i) * 1.
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = unit_vector(n, i);
    for (std::size_t k = 0; k < n; ++k) v[k] -= aug[i] * unit[k];
    gens.push_back(std::move(v));
  }
  auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return table_product(t, a, b);
  };
  const auto powers = ideal_powers(gens, n, mul);
  if (!powers.empty() && powers.size() >= 2 &&
      powers[powers.size() - 1].size() == powers[powers.size() - 2].size()) {
    // Find an element of the ideal that is not nilpotent; prefer an idempotent.
    for (const auto& v : powers.front()) {
      if (mul(v, v) == v) return fail("maximal ideal is not nilpotent: contains an idempotent", format_vector(labels, v));
    }
    for (const auto& v : powers.front()) {
      auto p = v;
      for (std::size_t k = 0; k < n; ++k) p = mul(p, v);
      if (!all_zero(p)) return fail("maximal ideal is not nilpotent", format_vector(labels, v));
    }
    return fail("maximal ideal is not nilpotent", "m^k stabilizes at dimension " +
                                                     std::to_string(powers.back().size()));
  }
  return {};
}

AlgebraPtr WeilAlgebra::from_table(std::vector<std::string> labels, const StructureTable& t,
                                   std::vector<Rational> aug) {
  const TableCheck check = check_table(labels, t, aug);
  if (!check.ok) throw ValidationError(check.reason, check.witness);

  const std::size_t n = labels.size();
  auto a = std::shared_ptr<WeilAlgebra>(new WeilAlgebra());
  a->name_ = "table[" + std::to_string(n) + "]";
  a->labels_ = std::move(labels);
  a->aug_ = std::move(aug);
  a->products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(t[i][j][k]) != 0) a->products_[i * n + j].emplace_back(k, t[i][j][k]);

  // Unit again, now from the validated table (first solution of the system).
  Matrix sys(n * n, n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = t[i][j][k];
      sys(j * n + k, n) = (j == k) ? 1 : 0;
    }
  const RowEchelon e = rref(sys);
  a->unit_.assign(n, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) a->unit_[e.pivots[r]] = e.reduced(r, n);
  a->finish();
  return a;
}

void WeilAlgebra::finish() {
  if (is_monomial()) {
    const std::size_t n = exponents_.size();
    labels_.clear();
    for (const auto& e : exponents_) labels_.push_back(format_monomial(e, generators_));
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(exponents_[i], i);
    products_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto it = index.find(exponents_[i] + exponents_[j]);
        if (it != index.end()) products_[i * n + j].emplace_back(it->second, Rational(1));
      }
    unit_ = unit_vector(n, 0);
    aug_ = unit_vector(n, 0);
  }

  const std::size_t n = dim();
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = unit_vector(n, i);
    for (std::size_t k = 0; k < n; ++k) v[k] -= aug_[i] * unit_[k];
    gens.push_back(std::move(v));
  }
  ideal_basis_ = span_basis(gens, n);
  const auto powers = ideal_powers(ideal_basis_, n, [this](const auto& a, const auto& b) {
    return multiply(a, b);
  });
  height_ = static_cast<unsigned>(powers.size());
}

// ---------------------------------------------------------------------------
// Queries

std::vector<std::size_t> WeilAlgebra::maximal_ideal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(aug_[i]) == 0) out.push_back(i);
  return out;
}

StructureTable WeilAlgebra::table() const {
  const std::size_t n = dim();
  StructureTable t(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : product(i, j)) t[i][j][k] = c;
  return t;
}

std::vector<Rational> WeilAlgebra::multiply(const std::vector<Rational>& a,
                                            const std::vector<Rational>& b) const {
  const std::size_t n = dim();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      const auto& prod = products_[i * n + j];
      if (prod.empty()) continue;
      const Rational ab = a[i] * b[j];
      for (const auto& [k, c] : prod) out[k] += ab * c;
    }
  }
  return out;
}

std::optional<std::size_t> WeilAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t WeilAlgebra::ideal_power_dim(unsigned k) const {
  if (k == 0) return dim();
  const auto powers = ideal_powers(ideal_basis_, dim(), [this](const auto& a, const auto& b) {
    return multiply(a, b);
  });
  return k <= powers.size() ? powers[k - 1].size() : 0;
}

bool WeilAlgebra::same_as(const WeilAlgebra& other) const {
  return labels_ == other.labels_ && products_ == other.products_ && aug_ == other.aug_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// ---------------------------------------------------------------------------
// Elements

WeilElement::WeilElement(AlgebraPtr algebra, std::vector<Rational> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw MismatchError("element without algebra");
  if (coeffs_.size() != algebra_->dim())
    throw MismatchError("coefficient vector length " + std::to_string(coeffs_.size()) +
                        " differs from algebra dimension " + std::to_string(algebra_->dim()));
}

WeilElement WeilElement::zero(AlgebraPtr algebra) {
  const std::size_t n = algebra->dim();
  return WeilElement(std::move(algebra), std::vector<Rational>(n));
}

WeilElement WeilElement::one(AlgebraPtr algebra) {
  auto u = algebra->unit();
  return WeilElement(std::move(algebra), std::move(u));
}

WeilElement WeilElement::scalar(AlgebraPtr algebra, const Rational& value) {
  return one(std::move(algebra)) * value;
}

WeilElement WeilElement::basis(AlgebraPtr algebra, std::size_t index) {
  if (index >= algebra->dim()) throw MismatchError("basis index out of range");
  const std::size_t n = algebra->dim();
  return WeilElement(std::move(algebra), unit_vector(n, index));
}

bool WeilElement::is_zero() const { return all_zero(coeffs_); }

Rational WeilElement::augmentation() const { return dot(algebra_->augmentation(), coeffs_); }

void WeilElement::require_same(const WeilElement& rhs) const {
  if (!same_algebra(algebra_, rhs.algebra_))
    throw MismatchError("elements of different algebras: " + algebra_->name() + " vs " +
                        rhs.algebra_->name());
}

WeilElement WeilElement::operator-() const {
  WeilElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

WeilElement& WeilElement::operator+=(const WeilElement& rhs) {
  require_same(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

WeilElement& WeilElement::operator-=(const WeilElement& rhs) {
  require_same(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

WeilElement& WeilElement::operator*=(const WeilElement& rhs) {
  require_same(rhs);
  coeffs_ = algebra_->multiply(coeffs_, rhs.coeffs_);
  return *this;
}

WeilElement& WeilElement::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

WeilElement WeilElement::pow(unsigned n) const {
  WeilElement result = one(algebra_);
  WeilElement base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

bool operator==(const WeilElement& a, const WeilElement& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.coeffs_ == b.coeffs_;
}

std::string WeilElement::to_string() const {
  const auto& labels = algebra_->labels();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool is_unit = labels[i] == "1";
    std::string term;
    if (is_unit) {
      term = weil::to_string(abs(c));
    } else if (abs(c) == 1) {
      term = labels[i];
    } else {
      term = weil::to_string(abs(c)) + "*" + labels[i];
    }
    if (sgn(c) < 0)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

WeilElement parse_sum(const AlgebraPtr& a, TokenStream& ts);

WeilElement parse_factor(const AlgebraPtr& a, TokenStream& ts) {
  WeilElement base = WeilElement::zero(a);
  const Token& t = ts.peek();
  if (t.kind == Tok::number) {
    base = WeilElement::scalar(a, ts.read_unsigned_rational());
  } else if (t.kind == Tok::lparen) {
    ts.next();
    base = parse_sum(a, ts);
    ts.expect(Tok::rparen, "')'");
  } else if (t.kind == Tok::ident) {
    const std::string name = ts.next().text;
    if (auto idx = a->index_of(name)) {
      base = WeilElement::basis(a, *idx);
    } else {
      const auto& gens = a->generators();
      const auto g = std::find(gens.begin(), gens.end(), name);
      if (g == gens.end()) ts.fail("unknown basis label '" + name + "'");
      // Generator killed by a relation: its class is zero.
      Exponents e(gens.size(), 0);
      e[static_cast<std::size_t>(g - gens.begin())] = 1;
      const auto& ex = a->basis_exponents();
      const auto it = std::find(ex.begin(), ex.end(), e);
      if (it != ex.end()) base = WeilElement::basis(a, static_cast<std::size_t>(it - ex.begin()));
    }
  } else {
    ts.fail("expected number, label or '('");
  }
  const unsigned p = ts.read_power();
  return p == 1 ? base : base.pow(p);
}

WeilElement parse_sum(const AlgebraPtr& a, TokenStream& ts) {
  WeilElement total = WeilElement::zero(a);
  bool first = true;
  while (true) {
    bool negative = false;
    if (ts.accept(Tok::minus)) {
      negative = true;
    } else if (!ts.accept(Tok::plus) && !first) {
      break;
    }
    WeilElement term = parse_factor(a, ts);
    while (ts.accept(Tok::star)) term *= parse_factor(a, ts);
    total += negative ? -term : term;
    first = false;
  }
  return total;
}

}  // namespace

WeilElement WeilElement::parse(AlgebraPtr algebra, std::string_view text) {
  TokenStream ts(text);
  if (ts.peek().kind == Tok::end) throw ParseError("empty element");
  WeilElement out = parse_sum(algebra, ts);
  if (ts.peek().kind != Tok::end) ts.fail("unexpected trailing input");
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

AlgebraHom::AlgebraHom(AlgebraPtr source, AlgebraPtr target,
                       std::vector<std::vector<Rational>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != target_->dim())
    throw MismatchError("hom matrix must have dim(target) rows");
  for (const auto& row : matrix_)
    if (row.size() != source_->dim()) throw MismatchError("hom matrix must have dim(source) columns");
}

AlgebraHom AlgebraHom::identity(AlgebraPtr algebra) {
  const std::size_t n = algebra->dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return AlgebraHom(algebra, algebra, std::move(m));
}

AlgebraHom AlgebraHom::augmentation(AlgebraPtr algebra) {
  auto row = algebra->augmentation();
  return AlgebraHom(algebra, WeilAlgebra::real(), {std::move(row)});
}

AlgebraHom AlgebraHom::truncation(AlgebraPtr source, AlgebraPtr target) {
  if (!source->is_monomial() || !target->is_monomial() ||
      source->generators().size() != target->generators().size())
    throw MismatchError("truncation needs monomial algebras over the same generators");
  std::vector<std::vector<Rational>> m(target->dim(), std::vector<Rational>(source->dim()));
  const auto& te = target->basis_exponents();
  for (std::size_t j = 0; j < source->dim(); ++j) {
    const auto it = std::find(te.begin(), te.end(), source->basis_exponents()[j]);
    if (it != te.end()) m[static_cast<std::size_t>(it - te.begin())][j] = 1;
  }
  return AlgebraHom(std::move(source), std::move(target), std::move(m));
}

WeilElement AlgebraHom::apply(const WeilElement& a) const {
  if (!same_algebra(a.algebra(), source_))
    throw MismatchError("hom_apply: element is not in the source algebra");
  std::vector<Rational> out(target_->dim());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = dot(matrix_[r], a.coeffs());
  return WeilElement(target_, std::move(out));
}

std::optional<std::string> AlgebraHom::validate() const {
  if (!(apply(WeilElement::one(source_)) == WeilElement::one(target_))) return "unit not mapped to unit";
  const std::size_t n = source_->dim();
  for (std::size_t i = 0; i < n; ++i) {
    const WeilElement ei = WeilElement::basis(source_, i);
    if (apply(ei).augmentation() != ei.augmentation())
      return "augmentation not preserved on " + source_->label(i);
    for (std::size_t j = i; j < n; ++j) {
      const WeilElement ej = WeilElement::basis(source_, j);
      if (!(apply(ei * ej) == apply(ei) * apply(ej)))
        return "not multiplicative on (" + source_->label(i) + "," + source_->label(j) + ")";
    }
  }
  return std::nullopt;
}

Exponents parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  TokenStream ts(text);
  Exponents e(vars.size(), 0);
  if (ts.peek().kind == Tok::number) {
    if (ts.next().text != "1") ts.fail("monomial coefficient must be 1");
    if (!ts.accept(Tok::star)) {
      if (ts.peek().kind != Tok::end) ts.fail("unexpected input");
      return e;
    }
  }
  do {
    const Token t = ts.expect(Tok::ident, "variable");
    const auto it = std::find(vars.begin(), vars.end(), t.text);
    if (it == vars.end()) ts.fail("unknown variable '" + t.text + "'");
    e[static_cast<std::size_t>(it - vars.begin())] += ts.read_power();
  } while (ts.accept(Tok::star));
  if (ts.peek().kind != Tok::end) ts.fail("unexpected input");
  return e;
}

}  // namespace weil
