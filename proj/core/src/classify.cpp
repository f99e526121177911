#include "eislat/classify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "eislat/gamma_group.hpp"

namespace eislat::classify {

namespace {

const HermGram& diag() { return HermGram::diag41(); }

bool is_primitive(const EVec& v) {
  EisInt g;
  for (const auto& x : v) g = gcd(g, x);
  return g.is_unit();
}

// Some w with h(w, v) = 1.
EVec dual_partner(const EVec& v, const HermGram& a) {
  const std::size_t n = v.size();
  EMat col(n, 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) col(j, 0) += v[i].conj() * a.matrix()(i, j);
  HnfResult h = hnf(col);
  const EisInt g = h.H(0, 0);
  if (!g.is_unit()) throw MathError("gluing_profile: vector is not primitive");
  EVec w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = h.U(0, j) * g.conj();
  if (inner(w, v, a) != EisInt(1L)) throw MathError("gluing_profile: no dual partner");
  return w;
}

// Ordered tuples from `pool` accepted by `extend` (checked on each prefix) and
// by `complete` (on full tuples of length k). Stops after `budget` nodes.
struct TupleSearch {
  using Pred = std::function<bool(const std::vector<EVec>&)>;
  TupleSearch(const std::vector<EVec>& p, std::size_t len, Pred ext, Pred comp, std::size_t b)
      : pool(p), k(len), extend(std::move(ext)), complete(std::move(comp)), budget(b) {}

  const std::vector<EVec>& pool;
  std::size_t k;
  Pred extend;
  Pred complete;
  std::size_t budget;
  std::size_t explored = 0;
  bool exhausted_budget = false;
  std::vector<EVec> current;

  bool run() {
    if (current.size() == k) return complete(current);
    for (const auto& x : pool) {
      if (++explored > budget) {
        exhausted_budget = true;
        return false;
      }
      current.push_back(x);
      if (extend(current) && run()) return true;
      current.pop_back();
      if (exhausted_budget) return false;
    }
    return false;
  }
};

}  // namespace

EVec diagonal_point() { return {3L, 1L, 1L, 1L, 1L}; }

EVec fermat_point() { return {EisInt(2L) - EisInt::omega_bar(), 1L, 1L, 1L, 1L}; }

Sublattice d4_theta() {
  return {HermGram::standard(4),
          {{1L, -1L, 0L, 0L}, {0L, 1L, -1L, 0L}, {0L, 0L, 1L, -1L}, {0L, 0L, 0L, EisInt::theta()}}};
}

std::vector<EVec> orthogonal_short_roots(const EVec& v) {
  if (sgn(norm(v, diag())) >= 0) throw MathError("orthogonal_short_roots: norm must be negative");
  return enumerate_norm(orthogonal_complement(v, diag()), Int(1));
}

GluingProfile gluing_profile(const EVec& v) {
  const HermGram& a = diag();
  const Int n = norm(v, a);
  if (sgn(n) >= 0) throw MathError("gluing_profile: norm must be negative");
  if (!is_primitive(v)) throw MathError("gluing_profile: vector is not primitive");
  const Sublattice perp = orthogonal_complement(v, a);

  GluingProfile p;
  p.complement = disc_group(perp);
  p.line = disc_group(EMat{{EisInt(n)}});
  p.orders_match = p.complement.cardinality == p.line.cardinality;
  std::vector<mpq_class> negated;
  for (const auto& x : p.line.norm_multiset()) negated.push_back(frac(-x));
  std::sort(negated.begin(), negated.end());
  const auto perp_norms = p.complement.norm_multiset();
  p.complementary = perp_norms == negated;

  // a·w = (a/n)·v + x with x ∈ (v⊥)′; n·x is integral.
  const EVec w = dual_partner(v, a);
  p.glue_integral = true;
  for (const auto& r : residues_mod(EisInt(n))) {
    ++p.glue_classes;
    EVec nx(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) nx[i] = EisInt(n) * r * w[i] - r * v[i];
    bool ok = inner(nx, v, a).is_zero();
    for (const auto& b : perp.basis()) ok = ok && divides(EisInt(n), inner(nx, b, a));
    mpq_class q_perp(norm(nx, a), n * n), q_line(r.norm(), n);
    q_perp.canonicalize();
    q_line.canonicalize();
    ok = ok && mpq_class(q_perp + q_line).get_den() == 1;
    ok = ok && std::binary_search(perp_norms.begin(), perp_norms.end(), frac(q_perp));
    p.glue_integral = p.glue_integral && ok;
  }
  return p;
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::mismatch: return "mismatch";
    case SearchStatus::budget: return "budget";
  }
  return "?";
}

bool FermatReport::pass() const {
  return complement_det == 3 && d4_det == 3 && complement_counts == d4_counts && !complement_counts.empty() &&
         complement_counts[0] == 0 && isometry == SearchStatus::found;
}

FermatReport fermat_complement_check(const EVec& v, std::size_t budget) {
  const HermGram& a = diag();
  const Sublattice perp = orthogonal_complement(v, a);
  const Sublattice d4 = d4_theta();
  FermatReport rep;
  rep.complement_det = perp.determinant();
  rep.d4_det = d4.determinant();
  for (long t = 1; t <= 3; ++t) {
    rep.complement_counts.push_back(enumerate_norm(perp, Int(t)).size());
    rep.d4_counts.push_back(enumerate_norm(d4, Int(t)).size());
  }

  // A basis of v⊥ made of minimal vectors.
  const auto source_pool = enumerate_norm(perp, Int(2));
  TupleSearch src{source_pool, 4,
                  [](const std::vector<EVec>& xs) { return rank(EMat::from_rows(xs)) == xs.size(); },
                  [&](const std::vector<EVec>& xs) { return same_span(xs, perp.basis()); }, budget};
  if (!src.run()) {
    rep.explored = src.explored;
    rep.isometry = src.exhausted_budget ? SearchStatus::budget : SearchStatus::mismatch;
    return rep;
  }
  rep.source_basis = src.current;
  const EMat g = gram_of(rep.source_basis, a);

  // Minimal vectors of D4(θ) with the same Gram, pruned on partial Grams.
  const HermGram& e4 = d4.ambient();
  const auto target_pool = enumerate_norm(d4, Int(2));
  TupleSearch dst{target_pool, 4,
                  [&](const std::vector<EVec>& ys) {
                    const std::size_t j = ys.size() - 1;
                    for (std::size_t i = 0; i <= j; ++i)
                      if (inner(ys[i], ys[j], e4) != g(j, i)) return false;
                    return true;
                  },
                  [&](const std::vector<EVec>& ys) { return same_span(ys, d4.basis()); }, budget};
  const bool found = dst.run();
  rep.explored = src.explored + dst.explored;
  if (found) {
    rep.target_basis = dst.current;
    rep.isometry = SearchStatus::found;
  } else {
    rep.isometry = dst.exhausted_budget ? SearchStatus::budget : SearchStatus::mismatch;
  }
  return rep;
}

DiagonalReport diagonal_complement_check(const EVec& v) {
  const HermGram& a = diag();
  const Sublattice perp = orthogonal_complement(v, a);
  DiagonalReport rep;
  rep.complement_det = perp.determinant();
  const auto pool = enumerate_norm(perp, Int(2));
  TupleSearch chain{pool, 4,
                    [&](const std::vector<EVec>& xs) {
                      const std::size_t j = xs.size() - 1;
                      for (std::size_t i = 0; i < j; ++i) {
                        const Int nh = inner(xs[i], xs[j], a).norm();
                        if (nh != (i + 1 == j ? 1 : 0)) return false;
                      }
                      return true;
                    },
                    [](const std::vector<EVec>&) { return true; }, 1000000};
  if (!chain.run()) return rep;
  rep.chain = chain.current;
  rep.chain_gram = gram_of(rep.chain, a);
  rep.chain_det = determinant(rep.chain_gram).a();
  rep.saturated = same_span(rep.chain, perp.basis());
  return rep;
}

ReflectionType biflection_transform_type(const Isometry& g) {
  const EMat& m = g.matrix();
  const std::size_t n = m.rows();
  const EMat id = EMat::identity(n);
  if (!(m * m).is_identity()) throw MathError("biflection_transform_type: not an involution");
  if (m == id || m == -id) throw MathError("biflection_transform_type: ±1 is not a reflection");
  if (kernel(m - id).size() != n - 1) throw MathError("biflection_transform_type: fixed lattice has wrong rank");
  const auto minus = kernel(m + id);
  if (minus.size() != 1) throw MathError("biflection_transform_type: −1 eigenlattice is not a line");
  ReflectionType t;
  t.root = minus.front();
  t.norm = norm(t.root, g.gram());
  t.norm_in_range = t.norm == 1 || t.norm == -1 || t.norm == 2 || t.norm == -2;
  t.long_root = t.norm == 2;
  return t;
}

PointReport classify_point(const EVec& v) {
  PointReport p;
  p.v = v;
  p.norm = norm(v, diag());
  if (sgn(p.norm) >= 0) throw MathError("classify: norm must be negative");
  p.orthogonal_short_roots = orthogonal_short_roots(v).size();
  p.gluing = gluing_profile(v);
  if (p.orthogonal_short_roots == 0 && p.norm == -5) p.name = "diagonal point";
  if (p.orthogonal_short_roots == 0 && p.norm == -3) p.name = "Fermat point";
  return p;
}

OrbitInvariance orbit_invariance(const EVec& v, std::uint64_t seed, std::size_t samples) {
  const auto base = disc_group(orthogonal_complement(v, diag())).norm_multiset();
  std::mt19937_64 rng(seed);
  OrbitInvariance rep;
  for (std::size_t s = 0; s < samples; ++s) {
    const EVec u = to_diag(gamma::random_word(rng, 12).isometry()).apply(v);
    ++rep.samples;
    rep.root_free += orthogonal_short_roots(u).empty();
    rep.same_profile += disc_group(orthogonal_complement(u, diag())).norm_multiset() == base;
  }
  return rep;
}

TransitivityReport long_root_transitivity(std::uint64_t seed, std::size_t samples, long box) {
  const HermGram& a = HermGram::hyp41();
  const EVec target{1L, 1L, 0L, 0L, 0L};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-box, box);
  TransitivityReport rep;
  for (std::size_t attempts = 0; rep.samples < samples && attempts < 1000 * samples; ++attempts) {
    EVec r(5);
    for (auto& x : r) x = EisInt(coord(rng), coord(rng));
    if (r[3].is_zero() || norm(r, a) != 2) continue;
    ++rep.samples;
    const auto t = gamma::orbit_transport(r, target);
    if (t.word && t.word->apply(r) == target) ++rep.transported;
    else rep.failures.push_back(r);
  }
  return rep;
}

}  // namespace eislat::classify
