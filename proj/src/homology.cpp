#include "weil/homology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

namespace weil {

namespace {

std::size_t algebra_width(ComplexKind kind, const AlgebraPtr& a) {
  if (kind == ComplexKind::base) return 1;
  if (!a) throw MismatchError("the " + to_string(kind) + " complex needs a Weil algebra");
  return a->dim();
}

std::vector<unsigned> degree_range(int lo, int hi) {
  std::vector<unsigned> out;
  for (int d = std::max(lo, 0); d <= hi; ++d) out.push_back(static_cast<unsigned>(d));
  return out;
}

std::map<BasisElement, std::size_t> index_of(const std::vector<BasisElement>& basis) {
  std::map<BasisElement, std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], i);
  return out;
}

[[noreturn]] void left_truncation(const IndexSet& idx, const Exponents& m) {
  throw Error("coboundary left the truncated codomain at [" + index_key(idx) + "] " +
              format_monomial(m, default_names(m.size())));
}

// Coboundary of one basis element, expanded over the codomain basis.
std::vector<Rational> image_column(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                                   std::size_t p, const BasisElement& e,
                                   const std::map<BasisElement, std::size_t>& rows, SignConvention sc) {
  const std::size_t n = pi.nvars();
  std::vector<Rational> col(rows.size());
  if (kind == ComplexKind::base) {
    BaseCochain c = make_base_cochain(n, p);
    c.set(e.indices, Poly::monomial(n, e.monomial, 1));
    const BaseCochain img = d_base(pi, c, sc);
    for (const auto& [J, poly] : img.coeffs())
      for (const auto& [mono, q] : poly.terms()) {
        const auto it = rows.find(BasisElement{J, mono, 0});
        if (it == rows.end()) left_truncation(J, mono);
        col[it->second] += q;
      }
    return col;
  }
  ACochain c = make_a_cochain(kind, n, p, a);
  c.set(e.indices, APoly::monomial(n, e.monomial, WeilElement::basis(a, e.algebra_index)));
  const ACochain img = coboundary(pi, c, sc);
  for (const auto& [J, apoly] : img.coeffs())
    for (const auto& [mono, elem] : apoly.terms())
      for (std::size_t k = 0; k < elem.coeffs().size(); ++k) {
        if (sgn(elem[k]) == 0) continue;
        const auto it = rows.find(BasisElement{J, mono, k});
        if (it == rows.end()) left_truncation(J, mono);
        col[it->second] += elem[k];
      }
  return col;
}

ComplexMatrix assemble(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a, std::size_t p,
                       const std::vector<unsigned>& dom_degrees, const std::vector<unsigned>& cod_degrees,
                       const EngineOptions& opts) {
  const std::size_t n = pi.nvars();
  ComplexMatrix m;
  m.domain = enumerate_basis(kind, n, a, p, dom_degrees, opts);
  m.codomain = enumerate_basis(kind, n, a, p + 1, cod_degrees, opts);
  m.entries = Matrix(m.codomain.size(), m.domain.size());
  const auto rows = index_of(m.codomain);
  const std::size_t cols = m.domain.size();
  std::vector<std::vector<Rational>> images(cols);
  auto work = [&](std::size_t j) { images[j] = image_column(kind, pi, a, p, m.domain[j], rows, opts.sign); };
  const std::size_t workers = std::min<std::size_t>(std::thread::hardware_concurrency(), cols / 32);
  if (workers <= 1) {
    for (std::size_t j = 0; j < cols; ++j) work(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < cols; j = next++) {
          try {
            work(j);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  for (std::size_t j = 0; j < cols; ++j) m.entries.set_column(j, images[j]);
  return m;
}

}  // namespace

std::vector<BasisElement> enumerate_basis(ComplexKind kind, std::size_t nvars, const AlgebraPtr& a,
                                          std::size_t p, const std::vector<unsigned>& degrees,
                                          const EngineOptions& opts) {
  const std::size_t width = algebra_width(kind, a);
  std::vector<BasisElement> out;
  const auto sets = index_sets(nvars, p);
  std::size_t expected = 0;
  for (unsigned w : degrees) expected += sets.size() * binomial(nvars + w - 1, w) * width;
  if (nvars == 0) expected = sets.size() * width;
  if (expected > opts.max_dimension)
    throw Error("basis overflow: " + std::to_string(expected) + " elements exceeds the cap of " +
                std::to_string(opts.max_dimension));
  for (const auto& idx : sets)
    for (unsigned w : degrees)
      for (const auto& m : monomials_of_degree(nvars, w))
        for (std::size_t k = 0; k < width; ++k) out.push_back({idx, m, k});
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed + 1000003ULL * p);
    std::shuffle(out.begin(), out.end(), rng);
  }
  return out;
}

std::vector<BasisElement> enumerate_basis(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                                          std::size_t p, unsigned D, const EngineOptions& opts) {
  return enumerate_basis(kind, pi.nvars(), a, p, degree_range(0, static_cast<int>(D)), opts);
}

int degree_shift(Homogeneity h) {
  switch (h) {
    case Homogeneity::constant: return -1;
    case Homogeneity::linear: return 0;
    case Homogeneity::inhomogeneous: break;
  }
  throw Error("inhomogeneous Poisson structures have no degree shift");
}

ComplexMatrix assemble_matrix(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                              std::size_t p, unsigned D, const EngineOptions& opts) {
  const int d = static_cast<int>(D);
  int top = d;
  switch (pi.homogeneity()) {
    case Homogeneity::constant: top = d - 1; break;
    case Homogeneity::linear: top = d; break;
    case Homogeneity::inhomogeneous: top = d + pi.max_degree() - 1; break;
  }
  return assemble(kind, pi, a, p, degree_range(0, d), degree_range(0, top), opts);
}

ComplexMatrix assemble_slice(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a,
                             std::size_t p, unsigned w, const EngineOptions& opts) {
  const int target = static_cast<int>(w) + degree_shift(pi.homogeneity());
  return assemble(kind, pi, a, p, {w}, degree_range(target, target), opts);
}

BaseCochain to_base_cochain(std::size_t nvars, std::size_t p, const std::vector<BasisElement>& basis,
                            const std::vector<Rational>& v) {
  BaseCochain out = make_base_cochain(nvars, p);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out.set(basis[i].indices, out.get(basis[i].indices) + Poly::monomial(nvars, basis[i].monomial, v[i]));
  }
  return out;
}

ACochain to_a_cochain(ComplexKind kind, std::size_t nvars, const AlgebraPtr& a, std::size_t p,
                      const std::vector<BasisElement>& basis, const std::vector<Rational>& v) {
  ACochain out = make_a_cochain(kind, nvars, p, a);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const WeilElement c = WeilElement::basis(a, basis[i].algebra_index) * v[i];
    out.set(basis[i].indices, out.get(basis[i].indices) + APoly::monomial(nvars, basis[i].monomial, c));
  }
  return out;
}

const BettiRow& BettiReport::row(std::size_t p) const {
  for (const auto& r : rows)
    if (r.p == p) return r;
  throw Error("report has no row for p = " + std::to_string(p));
}

namespace {

std::string vector_text(ComplexKind kind, std::size_t n, const AlgebraPtr& a, std::size_t p,
                        const std::vector<BasisElement>& basis, const std::vector<Rational>& v) {
  if (kind == ComplexKind::base) return to_string(to_base_cochain(n, p, basis, v));
  return to_string(to_a_cochain(kind, n, a, p, basis, v));
}

// Kernel vectors of `d_p` that are independent modulo the incoming image.
std::vector<std::vector<Rational>> cocycle_representatives(const ComplexMatrix& out_of,
                                                           const std::optional<ComplexMatrix>& into) {
  std::vector<std::vector<Rational>> span;
  const std::size_t len = out_of.domain.size();
  if (into)
    for (std::size_t j = 0; j < into->entries.cols(); ++j) span.push_back(into->entries.column(j));
  std::size_t rank = span_basis(span, len).size();
  std::vector<std::vector<Rational>> reps;
  for (auto& v : kernel_basis(out_of.entries)) {
    span.push_back(v);
    const std::size_t r = span_basis(span, len).size();
    if (r > rank) {
      reps.push_back(v);
      rank = r;
    } else {
      span.pop_back();
    }
  }
  return reps;
}

}  // namespace

BettiReport betti(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a, std::size_t p_min,
                  std::size_t p_max, unsigned D, const EngineOptions& opts) {
  const std::size_t n = pi.nvars();
  const AlgebraPtr alg = kind == ComplexKind::base ? WeilAlgebra::real() : a;
  const std::size_t width = algebra_width(kind, alg);

  BettiReport report;
  report.kind = kind;
  report.algebra = alg->name();
  report.algebra_dim = alg->dim();
  report.structure = pi.name();
  report.homogeneity = pi.homogeneity();
  report.D = D;

  if (report.homogeneity == Homogeneity::inhomogeneous) {
    report.quotient_certified = false;
    report.note =
        "inhomogeneous Poisson structure: the truncated complex does not split by degree, so only "
        "kernels and ranks are reported";
    for (std::size_t p = p_min; p <= p_max; ++p) {
      const ComplexMatrix m = assemble_matrix(kind, pi, alg, p, D, opts);
      BettiRow row;
      row.p = p;
      row.dim = m.domain.size();
      row.rank = rank_bareiss(m.entries);
      row.ker = row.dim - row.rank;
      report.rows.push_back(std::move(row));
    }
    return report;
  }

  const int shift = degree_shift(report.homogeneity);
  std::map<std::pair<std::size_t, int>, ComplexMatrix> slices;
  std::map<std::pair<std::size_t, int>, std::size_t> ranks;
  auto slice = [&](std::size_t p, int w) -> const ComplexMatrix& {
    auto it = slices.find({p, w});
    if (it == slices.end())
      it = slices.emplace(std::make_pair(p, w), assemble_slice(kind, pi, alg, p, static_cast<unsigned>(w), opts))
               .first;
    return it->second;
  };
  auto rank_of = [&](std::size_t p, int w) -> std::size_t {
    if (w < 0) return 0;
    auto it = ranks.find({p, w});
    if (it == ranks.end()) it = ranks.emplace(std::make_pair(p, w), rank_bareiss(slice(p, w).entries)).first;
    return it->second;
  };

  for (std::size_t p = p_min; p <= p_max; ++p) {
    BettiRow row;
    row.p = p;
    std::size_t bnd_total = 0, h_total = 0;
    for (int w = 0; w <= static_cast<int>(D); ++w) {
      SliceRow s;
      s.degree = static_cast<unsigned>(w);
      s.dim = slice(p, w).domain.size();
      s.rank = rank_of(p, w);
      s.ker = s.dim - s.rank;
      s.boundaries = p >= 1 ? rank_of(p - 1, w - shift) : 0;
      if (s.boundaries > s.ker) throw Error("internal: more boundaries than cocycles (d o d != 0?)");
      s.homology = s.ker - s.boundaries;
      row.dim += s.dim;
      row.rank += s.rank;
      row.ker += s.ker;
      bnd_total += s.boundaries;
      h_total += s.homology;
      if (s.homology > 0) {
        std::optional<ComplexMatrix> into;
        if (p >= 1) into = slice(p - 1, w - shift);
        for (const auto& v : cocycle_representatives(slice(p, w), into))
          report.representatives[p].push_back(vector_text(kind, n, alg, p, slice(p, w).domain, v));
      }
      row.slices.push_back(s);
    }
    row.boundaries = bnd_total;
    row.homology = h_total;
    if (kind != ComplexKind::base && h_total % width == 0) row.a_rank = h_total / width;
    report.rows.push_back(std::move(row));
  }
  return report;
}

CenterReport center_report(const PoissonStructure& pi, const AlgebraPtr& a, unsigned D, ComplexKind kind,
                           const EngineOptions& opts) {
  const std::size_t n = pi.nvars();
  const AlgebraPtr alg = kind == ComplexKind::base ? WeilAlgebra::real() : a;
  const ComplexMatrix m = assemble_matrix(kind, pi, alg, 0, D, opts);
  CenterReport out;
  for (const auto& v : kernel_basis(m.entries)) {
    APoly phi = make_apoly(n, alg);
    if (kind == ComplexKind::base) {
      phi = prolong_function(to_base_cochain(n, 0, m.domain, v).get({}), alg);
      out.text.push_back(to_string(real_part(phi)));
    } else {
      phi = to_a_cochain(kind, n, alg, 0, m.domain, v).get({});
      out.text.push_back(to_string(phi));
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

H1Report h1_report(ComplexKind kind, const PoissonStructure& pi, const AlgebraPtr& a, unsigned D,
                   const EngineOptions& opts) {
  const BettiReport r = betti(kind, pi, a, 1, 1, D, opts);
  H1Report out;
  out.dim = r.row(1).homology;
  out.certified = r.quotient_certified;
  out.note = r.note;
  if (auto it = r.representatives.find(1); it != r.representatives.end()) out.representatives = it->second;
  return out;
}

}  // namespace weil
