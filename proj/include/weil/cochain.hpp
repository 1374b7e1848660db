#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weil/poisson.hpp"
#include "weil/polynomial.hpp"

namespace weil {

/// Which cohomology complex a cochain belongs to.
///   base  : forms C^inf(M)^p -> C^inf(M), differential d
///   mixed : forms C^inf(M)^p -> C^inf(M^A, A), differential d~
///   weil  : forms C^inf(M^A, A)^p -> C^inf(M^A, A), differential d~_A
enum class ComplexKind { base, mixed, weil };

std::string to_string(ComplexKind k);
ComplexKind parse_complex_kind(const std::string& s);

/// Sign of the first Chevalley-Eilenberg sum. `standard` is (-1)^(i-1)
/// (1-indexed), the only choice with d o d = 0. `printed` is (-1)^i and
/// exists solely as a regression target for the nilpotency checks.
enum class SignConvention { standard, printed };

/// Strictly increasing 0-based variable indices.
using IndexSet = std::vector<std::size_t>;

/// Sorts `idx` in place; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(IndexSet& idx);

/// All strictly increasing index sets of size p from {0..n-1}, lexicographic.
std::vector<IndexSet> index_sets(std::size_t n, std::size_t p);

/// "1,2" style key (1-based).
std::string index_key(const IndexSet& idx);

/// Degree-p multiderivation cochain, i.e. a p-vector field with coefficients
/// in P (Poly for the base complex, APoly for mixed and weil). Only strictly
/// increasing index sets are stored; other orderings follow by antisymmetry.
template <class P>
class MultiVector {
 public:
  MultiVector(ComplexKind kind, std::size_t nvars, std::size_t degree, P zero)
      : kind_(kind), nvars_(nvars), degree_(degree), zero_(std::move(zero)) {
    if (zero_.nvars() != nvars_) throw MismatchError("cochain coefficient arity differs from nvars");
  }

  ComplexKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t degree() const { return degree_; }
  const P& zero() const { return zero_; }
  const std::map<IndexSet, P>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient at any ordering of distinct indices, signed.
  P get(IndexSet idx) const {
    check(idx);
    const int s = sort_with_sign(idx);
    if (s == 0) return zero_;
    const auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return zero_;
    return s > 0 ? it->second : -it->second;
  }

  /// Sets the coefficient at `idx` (any ordering) so that get(idx) == value.
  void set(IndexSet idx, const P& value) {
    check(idx);
    const int s = sort_with_sign(idx);
    if (s == 0) {
      if (!value.is_zero()) throw MismatchError("repeated index in an alternating cochain");
      return;
    }
    if (value.is_zero()) {
      coeffs_.erase(idx);
      return;
    }
    coeffs_.insert_or_assign(std::move(idx), s > 0 ? value : -value);
  }

  MultiVector& operator+=(const MultiVector& rhs) {
    require_same(rhs);
    for (const auto& [idx, c] : rhs.coeffs_) set(idx, get(idx) + c);
    return *this;
  }
  MultiVector& operator-=(const MultiVector& rhs) {
    require_same(rhs);
    for (const auto& [idx, c] : rhs.coeffs_) set(idx, get(idx) - c);
    return *this;
  }
  MultiVector operator-() const {
    MultiVector out = *this;
    for (auto& [idx, c] : out.coeffs_) c = -c;
    return out;
  }
  MultiVector& operator*=(const typename P::Coeff& s) {
    std::map<IndexSet, P> out;
    for (auto& [idx, c] : coeffs_) {
      P v = c * s;
      if (!v.is_zero()) out.emplace(idx, std::move(v));
    }
    coeffs_ = std::move(out);
    return *this;
  }
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(const typename P::Coeff& s, MultiVector a) { return a *= s; }

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check(const IndexSet& idx) const {
    if (idx.size() != degree_) throw MismatchError("index tuple length differs from cochain degree");
    for (auto i : idx)
      if (i >= nvars_) throw MismatchError("cochain index out of range");
  }
  void require_same(const MultiVector& rhs) const {
    if (kind_ != rhs.kind_ || nvars_ != rhs.nvars_ || degree_ != rhs.degree_)
      throw MismatchError("cochains of different complex, arity or degree");
  }

  ComplexKind kind_;
  std::size_t nvars_;
  std::size_t degree_;
  P zero_;
  std::map<IndexSet, P> coeffs_;
};

using BaseCochain = MultiVector<Poly>;
using ACochain = MultiVector<APoly>;

BaseCochain make_base_cochain(std::size_t nvars, std::size_t degree);
/// kind must be mixed or weil.
ACochain make_a_cochain(ComplexKind kind, std::size_t nvars, std::size_t degree, const AlgebraPtr& a);

/// Arbitrary skew multilinear cochain given by an evaluator. Skew-symmetry is
/// the caller's obligation (see spot_check_skew).
template <class Arg, class Val>
struct CallableCochain {
  ComplexKind kind;
  std::size_t degree;
  std::function<Val(std::span<const Arg>)> fn;
  Val zero;  // zero of the value space; carries nvars and algebra
  bool declared_skew = true;

  Val operator()(std::span<const Arg> args) const {
    if (args.size() != degree) throw MismatchError("callable cochain: wrong number of arguments");
    return fn(args);
  }
};

using BaseCallable = CallableCochain<Poly, Poly>;
using MixedCallable = CallableCochain<Poly, APoly>;
using WeilCallable = CallableCochain<APoly, APoly>;

// ---------------------------------------------------------------------------
// Evaluation

/// Omega(f_1..f_p) = sum_I c_I sum_sigma sgn(sigma) prod_k d_{I_sigma(k)} f_k.
Poly cochain_eval(const BaseCochain& omega, std::span<const Poly> args);
/// Mixed complex: arguments on the base, derivatives prolonged to A.
APoly cochain_eval(const ACochain& omega, std::span<const Poly> args);
/// Weil complex: arguments in C^inf(M^A, A).
APoly cochain_eval(const ACochain& omega, std::span<const APoly> args);

BaseCallable as_callable(const BaseCochain& omega);
MixedCallable as_mixed_callable(const ACochain& omega);
WeilCallable as_weil_callable(const ACochain& omega);

// ---------------------------------------------------------------------------
// The Chevalley-Eilenberg coboundary, generic over representation and bracket:
//   (dW)(a_1..a_{p+1}) = sum_i s_i rho(a_i)[W(.. a_i omitted ..)]
//                      + sum_{i<j} (-1)^{i+j} W([a_i, a_j], .. a_i, a_j omitted ..)
// with s_i = (-1)^(i-1) for the standard convention (1-indexed).

template <class Arg, class Val, class Rho, class Br, class Omega>
Val ce_coboundary(std::span<const Arg> args, const Val& zero, Rho&& rho, Br&& br, Omega&& omega,
                  SignConvention sc = SignConvention::standard) {
  const std::size_t m = args.size();
  Val total = zero;
  std::vector<Arg> rest;
  rest.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    rest.clear();
    for (std::size_t k = 0; k < m; ++k)
      if (k != i) rest.push_back(args[k]);
    Val term = rho(args[i], omega(std::span<const Arg>(rest)));
    const bool negative = (sc == SignConvention::standard) ? (i % 2 == 1) : (i % 2 == 0);
    if (negative)
      total -= term;
    else
      total += term;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      rest.clear();
      rest.push_back(br(args[i], args[j]));
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j) rest.push_back(args[k]);
      Val term = omega(std::span<const Arg>(rest));
      if ((i + j) % 2 == 1)
        total -= term;
      else
        total += term;
    }
  return total;
}

// ---------------------------------------------------------------------------
// Differentials on multivector cochains. The result tensor is read off the CE
// formula evaluated on coordinate tuples; top degree maps to the zero cochain.

/// d on the base complex, representation f -> ad(f).
BaseCochain d_base(const PoissonStructure& pi, const BaseCochain& omega,
                   SignConvention sc = SignConvention::standard);
/// d~ on the mixed complex, representation f -> [ad(f)]^A~.
ACochain d_tilde(const PoissonStructure& pi, const ACochain& omega,
                 SignConvention sc = SignConvention::standard);
ACochain d_tilde(const PoissonStructure& pi, const AlgebraPtr& a, const ACochain& omega,
                 SignConvention sc = SignConvention::standard);
/// d~_A on the weil complex, representation phi -> tau~_phi, bracket {,}_A.
ACochain d_tilde_A(const PoissonStructure& pi, const ACochain& omega,
                   SignConvention sc = SignConvention::standard);
ACochain d_tilde_A(const PoissonStructure& pi, const AlgebraPtr& a, const ACochain& omega,
                   SignConvention sc = SignConvention::standard);
/// Dispatches on the cochain's kind (mixed -> d~, weil -> d~_A).
ACochain coboundary(const PoissonStructure& pi, const ACochain& omega,
                    SignConvention sc = SignConvention::standard);

// Differentials on callable cochains: the CE formula applied per evaluation.
BaseCallable d_base(const PoissonStructure& pi, const BaseCallable& omega,
                    SignConvention sc = SignConvention::standard);
MixedCallable d_tilde(const PoissonStructure& pi, const MixedCallable& omega,
                      SignConvention sc = SignConvention::standard);
WeilCallable d_tilde_A(const PoissonStructure& pi, const WeilCallable& omega,
                       SignConvention sc = SignConvention::standard);

/// eta^A(f_1..f_p) = [eta(f_1..f_p)]^A: coefficientwise prolongation into the mixed complex.
ACochain prolong_cochain(const BaseCochain& eta, const AlgebraPtr& a);

/// Reinterprets a mixed cochain as a weil cochain with the same tensor.
ACochain as_weil(const ACochain& omega);

// ---------------------------------------------------------------------------
// Closedness

template <class P>
struct ClosedResult {
  bool closed = true;
  std::optional<IndexSet> witness;  // first index set with nonzero coboundary
  std::optional<P> residual;
  explicit operator bool() const { return closed; }
};

template <class Arg, class Val>
struct ProbeResult {
  bool closed = true;
  std::optional<std::vector<Arg>> witness;
  std::optional<Val> residual;
  explicit operator bool() const { return closed; }
};

ClosedResult<Poly> is_closed(const PoissonStructure& pi, const BaseCochain& omega);
ClosedResult<APoly> is_closed(const PoissonStructure& pi, const ACochain& omega);

/// Residual evaluation of the coboundary on each probe tuple (arity p+1).
ProbeResult<Poly, Poly> is_closed(const PoissonStructure& pi, const BaseCallable& omega,
                                  const std::vector<std::vector<Poly>>& probes);
ProbeResult<Poly, APoly> is_closed(const PoissonStructure& pi, const MixedCallable& omega,
                                   const std::vector<std::vector<Poly>>& probes);
ProbeResult<APoly, APoly> is_closed(const PoissonStructure& pi, const WeilCallable& omega,
                                    const std::vector<std::vector<APoly>>& probes);

/// (d o d Omega)(probe) via two applications of the CE formula; probe arity p+2.
Poly d_squared_probe(const PoissonStructure& pi, const BaseCallable& omega, std::span<const Poly> probe,
                     SignConvention sc = SignConvention::standard);
APoly d_squared_probe(const PoissonStructure& pi, const MixedCallable& omega, std::span<const Poly> probe,
                      SignConvention sc = SignConvention::standard);
APoly d_squared_probe(const PoissonStructure& pi, const WeilCallable& omega, std::span<const APoly> probe,
                      SignConvention sc = SignConvention::standard);

/// Checks Omega(.., a_i, .., a_j, ..) = -Omega(.., a_j, .., a_i, ..) for every
/// transposition of the given argument tuple. Returns the first failing (i, j).
template <class Arg, class Val>
std::optional<std::pair<std::size_t, std::size_t>> spot_check_skew(const CallableCochain<Arg, Val>& omega,
                                                                   const std::vector<Arg>& args) {
  const Val base = omega(args);
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      std::vector<Arg> swapped = args;
      std::swap(swapped[i], swapped[j]);
      if (!(omega(swapped) == -base)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

/// "{1: x1, 1,2: (e1)*x2}" style summary.
std::string to_string(const BaseCochain& omega);
std::string to_string(const ACochain& omega);

}  // namespace weil
