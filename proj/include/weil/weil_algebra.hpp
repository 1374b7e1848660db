#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weil/monomial.hpp"
#include "weil/rational.hpp"

namespace weil {

class WeilAlgebra;
using AlgebraPtr = std::shared_ptr<const WeilAlgebra>;

/// Structure constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
using StructureTable = std::vector<std::vector<std::vector<Rational>>>;

/// Outcome of validating a raw multiplication table.
struct TableCheck {
  bool ok = true;
  std::string reason;   // empty when ok
  std::string witness;  // basis indices / element exhibiting the failure
};

/// A finite-dimensional commutative local algebra A = R + m with m nilpotent,
/// stored as a basis with structure constants. Immutable once built.
class WeilAlgebra {
 public:
  /// R[e1..er] / m^(k+1): monomials of total degree <= k, augmentation = value at 0.
  static AlgebraPtr jet(std::size_t generators, unsigned order);

  /// R[vars] / (relation monomials), optionally also killing every monomial of
  /// degree > degree_cap. Throws ValidationError naming a variable with no pure
  /// power in the ideal when the quotient would be infinite-dimensional.
  static AlgebraPtr monomial_quotient(const std::vector<std::string>& vars,
                                      const std::vector<Exponents>& relations,
                                      std::optional<unsigned> degree_cap = std::nullopt);

  /// Same, with relations given as text monomials over `vars` ("x^2", "x*y").
  static AlgebraPtr monomial_quotient(const std::vector<std::string>& vars,
                                      const std::vector<std::string>& relations,
                                      std::optional<unsigned> degree_cap = std::nullopt);

  /// Validates and builds from a raw table. Throws ValidationError carrying
  /// the witness from check_table on failure.
  static AlgebraPtr from_table(std::vector<std::string> labels, const StructureTable& table,
                               std::vector<Rational> aug);

  /// Full diagnostic for a raw table: shape, unit, commutativity,
  /// associativity (all triples), augmentation, nilpotency of ker(aug).
  static TableCheck check_table(const std::vector<std::string>& labels, const StructureTable& table,
                                const std::vector<Rational>& aug);

  /// The trivial Weil algebra R (dimension 1, height 0).
  static AlgebraPtr real();

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  unsigned height() const { return height_; }
  bool is_trivial() const { return dim() == 1; }
  const std::vector<Rational>& augmentation() const { return aug_; }
  const std::vector<Rational>& unit() const { return unit_; }
  /// Short human name, e.g. "jet(1,2)" or "table[4]".
  const std::string& name() const { return name_; }

  /// Basis of the maximal ideal ker(aug), as coefficient vectors.
  const std::vector<std::vector<Rational>>& maximal_ideal_basis() const { return ideal_basis_; }
  /// Indices i with e_i in m (aug(e_i) = 0); for monomial algebras all but the unit.
  std::vector<std::size_t> maximal_ideal_indices() const;

  /// Nonzero structure constants of e_i * e_j as (k, c) pairs.
  const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t i, std::size_t j) const {
    return products_[i * dim() + j];
  }
  StructureTable table() const;

  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  /// Generator names and basis exponents for monomial algebras; empty otherwise.
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Exponents>& basis_exponents() const { return exponents_; }
  bool is_monomial() const { return !exponents_.empty(); }

  /// Index of a basis element by label or (monomial algebras) generator name.
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Dimension of m^k as a real vector space (m^0 = A).
  std::size_t ideal_power_dim(unsigned k) const;

  /// Structural equality (labels, table, augmentation).
  bool same_as(const WeilAlgebra& other) const;

 private:
  WeilAlgebra() = default;
  void finish();  // derives unit-independent data: ideal basis, height

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> products_;
  std::vector<Rational> aug_;
  std::vector<Rational> unit_;
  std::vector<std::vector<Rational>> ideal_basis_;
  unsigned height_ = 0;
  std::vector<std::string> generators_;
  std::vector<Exponents> exponents_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// An element of a Weil algebra: coefficient vector against the basis.
class WeilElement {
 public:
  WeilElement(AlgebraPtr algebra, std::vector<Rational> coeffs);

  static WeilElement zero(AlgebraPtr algebra);
  static WeilElement one(AlgebraPtr algebra);
  static WeilElement scalar(AlgebraPtr algebra, const Rational& value);
  static WeilElement basis(AlgebraPtr algebra, std::size_t index);

  /// Element text grammar: signed sum of terms `coeff '*' label('^'int)?`,
  /// factors may repeat ("3*e1*e2"), a bare number is a multiple of the unit.
  static WeilElement parse(AlgebraPtr algebra, std::string_view text);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const;
  Rational augmentation() const;

  WeilElement operator-() const;
  WeilElement& operator+=(const WeilElement& rhs);
  WeilElement& operator-=(const WeilElement& rhs);
  WeilElement& operator*=(const WeilElement& rhs);
  WeilElement& operator*=(const Rational& rhs);

  friend WeilElement operator+(WeilElement a, const WeilElement& b) { return a += b; }
  friend WeilElement operator-(WeilElement a, const WeilElement& b) { return a -= b; }
  friend WeilElement operator*(WeilElement a, const WeilElement& b) { return a *= b; }
  friend WeilElement operator*(WeilElement a, const Rational& q) { return a *= q; }
  friend WeilElement operator*(const Rational& q, WeilElement a) { return a *= q; }

  WeilElement pow(unsigned n) const;

  friend bool operator==(const WeilElement& a, const WeilElement& b);

  std::string to_string() const;

 private:
  void require_same(const WeilElement& rhs) const;

  AlgebraPtr algebra_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const WeilElement& a) { return a.is_zero(); }
inline Rational augmentation(const WeilElement& a) { return a.augmentation(); }
inline unsigned height(const WeilAlgebra& a) { return a.height(); }

// Product helpers named after the algebra operations.
inline WeilElement mul(const WeilElement& a, const WeilElement& b) { return a * b; }

/// Linear map between Weil algebras given by a dim(target) x dim(source) matrix.
class AlgebraHom {
 public:
  AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<std::vector<Rational>> matrix);

  static AlgebraHom identity(AlgebraPtr algebra);
  /// The augmentation viewed as a homomorphism A -> R.
  static AlgebraHom augmentation(AlgebraPtr algebra);
  /// Monomial projection between monomial algebras over the same generators:
  /// basis monomials present in the target map to themselves, others to 0
  /// (e.g. the truncation jet(r,k) -> jet(r,k')).
  static AlgebraHom truncation(AlgebraPtr source, AlgebraPtr target);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

  /// Checks unit, multiplicativity on all basis pairs and aug_B o h = aug_A.
  /// Returns the failing witness, or nullopt when the map is a homomorphism.
  std::optional<std::string> validate() const;

  WeilElement apply(const WeilElement& a) const;
  WeilElement operator()(const WeilElement& a) const { return apply(a); }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<std::vector<Rational>> matrix_;
};

inline WeilElement hom_apply(const AlgebraHom& h, const WeilElement& a) { return h.apply(a); }

/// Parses a monomial like "x^2*y" over the named variables.
Exponents parse_monomial(std::string_view text, const std::vector<std::string>& vars);

}  // namespace weil
