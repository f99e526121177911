#include "eislat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace eislat {

namespace {

template <typename T>
void swap_rows(Matrix<T>& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

template <typename T>
void swap_cols(Matrix<T>& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_i -= q·row_j
void sub_row(EMat& m, std::size_t i, std::size_t j, const EisInt& q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(j, c).is_zero()) m(i, c) -= q * m(j, c);
}

// col_i -= q·col_j
void sub_col(EMat& m, std::size_t i, std::size_t j, const EisInt& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, j).is_zero()) m(r, i) -= m(r, j) * q;
}

void scale_row(EMat& m, std::size_t i, const EisInt& u) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = u * m(i, c);
}

EisInt divexact(const EisInt& n, const EisInt& d) { return exact_div(n, d); }
Int divexact(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}
bool is_zero(const EisInt& x) { return x.is_zero(); }
bool is_zero(const Int& x) { return sgn(x) == 0; }

template <typename T>
T bareiss_det(Matrix<T> a) {
  if (!a.square()) throw MathError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return T(1L);
  bool negate = false;
  T prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return T(0L);
      swap_rows(a, k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? T(-d) : d;
}

}  // namespace

HnfResult hnf(const EMat& m) {
  EMat a = m;
  EMat u = EMat::identity(m.rows());
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool found = false;
    for (;;) {
      std::size_t p = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (!a(i, c).is_zero() && (p == a.rows() || a(i, c).norm() < a(p, c).norm())) p = i;
      if (p == a.rows()) break;
      found = true;
      swap_rows(a, r, p);
      swap_rows(u, r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        EisInt q = nearest_quotient(a(i, c), a(r, c));
        sub_row(a, i, r, q);
        sub_row(u, i, r, q);
        if (!a(i, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    EisInt unit = canonical_unit(a(r, c));
    scale_row(a, r, unit);
    scale_row(u, r, unit);
    for (std::size_t i = 0; i < r; ++i) {
      EisInt q = nearest_quotient(a(i, c), a(r, c));
      if (q.is_zero()) continue;
      sub_row(a, i, r, q);
      sub_row(u, i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(u), r, std::move(pivots)};
}

SnfResult snf(const EMat& m) {
  EMat a = m;
  EMat u = EMat::identity(m.rows());
  EMat v = EMat::identity(m.cols());
  const std::size_t steps = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool any = false;
    for (;;) {
      std::size_t pr = a.rows(), pc = a.cols();
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j)
          if (!a(i, j).is_zero() && (pr == a.rows() || a(i, j).norm() < a(pr, pc).norm())) {
            pr = i;
            pc = j;
          }
      if (pr == a.rows()) break;
      any = true;
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        EisInt q = nearest_quotient(a(i, t), a(t, t));
        sub_row(a, i, t, q);
        sub_row(u, i, t, q);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        EisInt q = nearest_quotient(a(t, j), a(t, t));
        sub_col(a, j, t, q);
        sub_col(v, j, t, q);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest of the block; otherwise pull in a row.
      std::size_t bad = a.rows();
      for (std::size_t i = t + 1; i < a.rows() && bad == a.rows(); ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!divides(a(t, t), a(i, j))) {
            bad = i;
            break;
          }
      if (bad == a.rows()) break;
      sub_row(a, t, bad, EisInt(-1L));
      sub_row(u, t, bad, EisInt(-1L));
    }
    if (!any) break;
    EisInt unit = canonical_unit(a(t, t));
    scale_row(a, t, unit);
    scale_row(u, t, unit);
  }
  std::vector<EisInt> divisors(steps);
  for (std::size_t i = 0; i < steps; ++i) divisors[i] = a(i, i);
  return {std::move(u), std::move(a), std::move(v), std::move(divisors)};
}

EisInt determinant(const EMat& m) { return bareiss_det(m); }
Int determinant(const IntMat& m) { return bareiss_det(m); }

EMat inverse_unimodular(const EMat& m) {
  if (!m.square()) throw MathError("inverse_unimodular: matrix is not square");
  HnfResult h = hnf(m);
  // With unit pivots the reduced echelon form is the identity, so U = M⁻¹.
  if (!h.H.is_identity()) throw MathError("inverse_unimodular: matrix is not invertible over E");
  return h.U;
}

std::size_t rank(const EMat& m) { return hnf(m).rank; }

std::vector<EVec> kernel(const EMat& m) {
  HnfResult h = hnf(m.transpose());
  std::vector<EVec> out;
  for (std::size_t i = h.rank; i < h.U.rows(); ++i) out.push_back(h.U.row(i));
  return out;
}

bool same_span(const std::vector<EVec>& a, const std::vector<EVec>& b) {
  if (a.empty() || b.empty()) {
    auto all_zero = [](const std::vector<EVec>& vs) {
      return std::all_of(vs.begin(), vs.end(), [](const EVec& v) {
        return std::all_of(v.begin(), v.end(), [](const EisInt& x) { return x.is_zero(); });
      });
    };
    return all_zero(a) && all_zero(b);
  }
  HnfResult ha = hnf(EMat::from_rows(a));
  HnfResult hb = hnf(EMat::from_rows(b));
  if (ha.rank != hb.rank || ha.H.cols() != hb.H.cols()) return false;
  return ha.H.block(0, 0, ha.rank, ha.H.cols()) == hb.H.block(0, 0, hb.rank, hb.H.cols());
}

std::vector<Int> charpoly(const IntMat& a) {
  if (!a.square()) throw MathError("charpoly: matrix is not square");
  const std::size_t n = a.rows();
  // Faddeev–LeVerrier; every division below is exact over Z.
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMat mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    IntMat am = a * mk;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -divexact(tr, Int(static_cast<long>(k)));
  }
  return c;
}

IntMat realify(const EMat& g) {
  if (!g.square()) throw MathError("realify: matrix is not square");
  const std::size_t n = g.rows();
  const EisInt w = EisInt::omega();
  IntMat s(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t al = 0; al < 2; ++al)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t be = 0; be < 2; ++be) {
          // h(ω^α e_i, ω^β e_j) = conj(ω^β)·G(j, i)·ω^α
          EisInt h = g(j, i);
          if (al) h = h * w;
          if (be) h = h * w.conj();
          s(2 * i + al, 2 * j + be) = 2 * h.a() - h.b();
        }
  return s;
}

Inertia inertia(const IntMat& s) {
  if (s.transpose() != s) throw MathError("inertia: matrix is not symmetric");
  // All roots of a real symmetric matrix's characteristic polynomial are
  // real, so Descartes' rule of signs counts them exactly.
  std::vector<Int> c = charpoly(s);
  Inertia in;
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  in.zero = low;
  auto changes = [&](bool flip) {
    std::size_t n = 0;
    int last = 0;
    for (std::size_t i = low; i < c.size(); ++i) {
      int sg = sgn(c[i]);
      if (sg == 0) continue;
      if (flip && (i % 2 == 1)) sg = -sg;
      if (last != 0 && sg != last) ++n;
      last = sg;
    }
    return n;
  };
  in.positive = changes(false);
  in.negative = changes(true);
  return in;
}

Inertia inertia(const EMat& h) {
  if (adjoint(h) != h) throw MathError("inertia: matrix is not hermitian");
  Inertia r = inertia(realify(h));
  return {r.positive / 2, r.negative / 2, r.zero / 2};
}

bool is_positive_definite(const EMat& h) {
  IntMat a = realify(h);
  const std::size_t n = a.rows();
  // Bareiss without pivoting: the k-th pivot is the k-th leading principal minor.
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return true;
}

Sublattice::Sublattice(HermGram ambient, std::vector<EVec> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.size() != ambient_.dim()) throw MathError("Sublattice: basis vector of wrong dimension");
  if (!basis_.empty() && eislat::rank(EMat::from_rows(basis_)) != basis_.size())
    throw MathError("Sublattice: basis is not linearly independent");
  gram_ = gram_of(basis_, ambient_);
}

Int Sublattice::determinant() const {
  EisInt d = eislat::determinant(gram_);
  if (!d.is_rational()) throw MathError("Sublattice: hermitian determinant is not rational");
  return d.a();
}

EVec Sublattice::combine(const EVec& coeffs) const {
  if (coeffs.size() != basis_.size()) throw MathError("Sublattice::combine: wrong number of coefficients");
  EVec v(ambient_.dim());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coeffs[i] * basis_[i][j];
  }
  return v;
}

Sublattice orthogonal_complement(const EVec& v, const HermGram& a) {
  const std::size_t n = a.dim();
  if (v.size() != n) throw MathError("orthogonal_complement: dimension mismatch");
  if (std::all_of(v.begin(), v.end(), [](const EisInt& x) { return x.is_zero(); }))
    throw MathError("orthogonal_complement: zero vector");
  // h(x, v) = (v*·A)·x
  EMat row(1, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) row(0, j) += v[i].conj() * a.matrix()(i, j);
  return {a, kernel(row)};
}

Int gram_determinant(const Sublattice& l) { return l.determinant(); }

mpq_class frac(const mpq_class& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class r = x - mpq_class(fl);
  r.canonicalize();
  return r;
}

std::vector<EisInt> residues_mod(const EisInt& d) {
  if (d.is_zero()) throw MathError("residues_mod: zero modulus");
  // Z-basis of dE: d and d·ω, brought to upper-triangular form.
  const EisInt dw = d * EisInt::omega();
  Int a = d.a(), b = d.b(), c = dw.a(), e = dw.b();
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  Int h11 = abs(g);
  Int h22 = abs(Int((c * b - a * e) / g));
  std::vector<EisInt> out;
  for (Int x = 0; x < h11; ++x)
    for (Int y = 0; y < h22; ++y) out.emplace_back(x, y);
  return out;
}

std::vector<mpq_class> DiscGroup::norm_multiset() const {
  std::vector<mpq_class> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.norm);
  std::sort(out.begin(), out.end());
  return out;
}

DiscGroup disc_group(const EMat& gram) {
  if (adjoint(gram) != gram) throw MathError("disc_group: Gram is not hermitian");
  EisInt det = determinant(gram);
  if (det.is_zero()) throw MathError("disc_group: degenerate Gram");
  SnfResult s = snf(gram);
  const std::size_t k = gram.rows();
  DiscGroup out;
  out.determinant = det.a();
  out.cardinality = 1;
  Int common = 1;
  for (const auto& d : s.divisors) {
    out.cardinality *= d.norm();
    common = lcm(common, d.norm());
    if (!d.is_unit()) out.divisors.push_back(d);
  }
  if (out.cardinality > 1000000) throw MathError("disc_group: discriminant group too large to tabulate");

  std::vector<std::vector<EisInt>> reps(k);
  for (std::size_t i = 0; i < k; ++i) reps[i] = residues_mod(s.divisors[i]);

  // A class m ∈ ⊕ E/d_i corresponds to the dual vector V·D⁻¹·m; with
  // N = lcm norm(d_i) its coefficients are V·σ / N, σ_i = m_i·conj(d_i)·N/norm(d_i).
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    DiscElement e;
    EVec sigma(k);
    for (std::size_t i = 0; i < k; ++i) {
      const EisInt& m = reps[i][idx[i]];
      e.residues.push_back(m);
      sigma[i] = m * s.divisors[i].conj() * EisInt(Int(common / s.divisors[i].norm()));
    }
    e.numerators = s.V * sigma;
    e.denominator = common;
    EisInt val = inner(e.numerators, e.numerators, HermGram(gram));
    if (!val.is_rational()) throw MathError("disc_group: non-real norm");
    mpq_class q(val.a(), common * common);
    q.canonicalize();
    e.norm = frac(q);
    out.elements.push_back(std::move(e));
    bool advanced = false;
    for (std::size_t i = k; i > 0 && !advanced; --i) {
      if (++idx[i - 1] < reps[i - 1].size()) advanced = true;
      else idx[i - 1] = 0;
    }
    if (!advanced) break;
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const DiscElement& x, const DiscElement& y) { return x.residues < y.residues; });
  return out;
}

std::vector<EVec> enumerate_norm_coords(const EMat& gram, const Int& t) {
  if (adjoint(gram) != gram) throw MathError("enumerate_norm: Gram is not hermitian");
  if (!is_positive_definite(gram)) throw MathError("enumerate_norm: Gram is not positive definite");
  if (sgn(t) < 0) return {};
  const std::size_t k = gram.rows();
  const std::size_t n = 2 * k;
  const IntMat s = realify(gram);
  const Int target = 2 * t;

  // Q(z) = Σ q_ii (z_i + Σ_{j>i} q_ij z_j)², computed exactly then rounded.
  Matrix<mpq_class> q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = s(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t kk = i + 1; kk < n; ++kk)
      for (std::size_t l = kk; l < n; ++l) q(kk, l) -= q(kk, i) * q(i, l);
  }
  std::vector<double> diag(n);
  Matrix<double> mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = q(i, i).get_d();
    for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = q(i, j).get_d();
  }

  const double bound = target.get_d();
  const double slack = 1e-7 * (1.0 + bound);
  std::vector<long> z(n, 0);
  std::vector<EVec> out;

  auto exact_check = [&] {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (z[i] == 0) continue;
      Int row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (z[j] != 0) row += s(i, j) * z[j];
      acc += row * z[i];
    }
    if (acc != target) return;
    EVec v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = EisInt(z[2 * i], z[2 * i + 1]);
    out.push_back(std::move(v));
  };

  std::function<void(std::size_t, double)> rec = [&](std::size_t level, double remaining) {
    // level counts down from n; index i = level − 1.
    const std::size_t i = level - 1;
    double c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= mu(i, j) * static_cast<double>(z[j]);
    const double r = std::sqrt(std::max(0.0, remaining) / diag[i]) + slack;
    const long lo = static_cast<long>(std::ceil(c - r));
    const long hi = static_cast<long>(std::floor(c + r));
    for (long x = lo; x <= hi; ++x) {
      z[i] = x;
      const double dz = static_cast<double>(x) - c;
      const double rest = remaining - diag[i] * dz * dz;
      if (rest < -slack) continue;
      if (i == 0) exact_check();
      else rec(level - 1, rest);
    }
    z[i] = 0;
  };
  if (n > 0) rec(n, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EVec> enumerate_norm(const Sublattice& l, const Int& t) {
  std::vector<EVec> out;
  for (const auto& c : enumerate_norm_coords(l.gram(), t)) out.push_back(l.combine(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eislat
