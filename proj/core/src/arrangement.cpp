#include "eislat/arrangement.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "eislat/linalg.hpp"

namespace eislat::arrangement {

namespace {

std::string key(const EMat& m) {
  std::string s;
  for (const auto& x : m.data()) s += x.str() + ",";
  return s;
}

std::vector<EisInt> elements_up_to(long bound) {
  // norm(a + bω) ≥ (a² + b²)/2, so |a|, |b| ≤ √(2·bound).
  long r = 0;
  while ((r + 1) * (r + 1) <= 2 * bound) ++r;
  std::vector<EisInt> out;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b) {
      EisInt x(a, b);
      if (x.norm() <= bound) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Short-root coordinates are tiny, so the pair scan runs on machine integers.
using SmallRoot = std::array<std::array<long, 2>, 5>;

SmallRoot to_small(const EVec& r) {
  SmallRoot out{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!r[i].a().fits_slong_p() || !r[i].b().fits_slong_p() || abs(r[i].a()) > (1L << 20) ||
        abs(r[i].b()) > (1L << 20))
      throw MathError("scan: coordinate too large");
    out[i] = {r[i].a().get_si(), r[i].b().get_si()};
  }
  return out;
}

// h(x, y) = −x0·ȳ0 + Σ xi·ȳi, as (a, b) with value a + bω.
std::array<long, 2> diag_inner(const SmallRoot& x, const SmallRoot& y) {
  long a = 0, b = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    // xi·ȳi with ȳi = r + sω; ω² = −1 − ω.
    const long p = x[i][0], q = x[i][1], r = y[i][0] - y[i][1], s = -y[i][1];
    const long pa = p * r - q * s, pb = p * s + q * r - q * s;
    if (i == 0) {
      a -= pa;
      b -= pb;
    } else {
      a += pa;
      b += pb;
    }
  }
  return {a, b};
}

}  // namespace

Mirror::Mirror(const EVec& root, const HermGram& a) {
  if (norm(root, a) != 1) throw MathError("Mirror: root must have norm 1");
  for (int k = 0; k < 6; ++k) {
    EVec u = root;
    for (auto& x : u) x = EisInt::unit(k) * x;
    if (k == 0 || u < root_) root_ = u;
  }
}

bool mirrors_intersect(const Mirror& m, const Mirror& n, const HermGram& a) {
  if (m == n) throw MathError("mirrors_intersect: mirrors are equal");
  return is_positive_definite(gram_of({m.root(), n.root()}, a));
}

FamilyLabel family_of(const EVec& r) { return f3::projective_normal(f3::reduce(r)); }

std::vector<Mirror> short_root_mirrors(long bound) {
  const HermGram& a = HermGram::diag41();
  const EMat id = EMat::identity(4);
  std::set<Mirror> out;
  for (const auto& v0 : elements_up_to(bound)) {
    for (const auto& rest : enumerate_norm_coords(id, v0.norm() + 1)) {
      EVec r{v0, rest[0], rest[1], rest[2], rest[3]};
      out.insert(Mirror(r, a));
    }
  }
  return {out.begin(), out.end()};
}

ScanReport scan(long bound) {
  ScanReport rep;
  rep.bound = bound;
  const auto mirrors = short_root_mirrors(bound);
  rep.mirrors = mirrors.size();
  rep.roots = 6 * mirrors.size();

  std::vector<SmallRoot> small;
  std::map<FamilyLabel, int> ids;
  std::vector<int> label_id;
  for (const auto& m : mirrors) {
    small.push_back(to_small(m.root()));
    const FamilyLabel f = family_of(m);
    ++rep.census[f];
    label_id.push_back(ids.emplace(f, static_cast<int>(ids.size())).first->second);
  }

  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      ++rep.pairs;
      const auto [ha, hb] = diag_inner(small[i], small[j]);
      // Gram [[1, h], [h̄, 1]]: leading minors 1 and 1 − norm(h).
      const long det = 1 - (ha * ha - ha * hb + hb * hb);
      const bool meet = det > 0;
      const bool orth = ha == 0 && hb == 0;
      rep.intersecting += meet;
      rep.orthogonal += orth;
      if (meet && !orth) rep.intersect_violations.push_back({i, j, EisInt(ha, hb)});
      if (label_id[i] == label_id[j]) {
        ++rep.same_family_pairs;
        if ((((ha + hb) % 3) + 3) % 3 == 0) rep.family_violations.push_back({i, j, EisInt(ha, hb)});
      }
    }
  return rep;
}

bool family_equivariant(const Isometry& g, const std::vector<Mirror>& mirrors) {
  const f3::Mat gbar = f3::reduce(g);
  return std::all_of(mirrors.begin(), mirrors.end(), [&](const Mirror& m) {
    return family_of(g.apply(m.root())) == f3::projective_normal(f3::apply(gbar, family_of(m)));
  });
}

StratumReport stratum_stabilizer(const std::vector<EVec>& roots, const HermGram& a) {
  if (roots.size() > 4) throw MathError("stratum_stabilizer: at most four roots");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (norm(roots[i], a) != 1) throw MathError("stratum_stabilizer: roots must have norm 1");
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!inner(roots[i], roots[j], a).is_zero()) throw MathError("stratum_stabilizer: roots are not orthogonal");
  }
  const std::size_t n = a.dim();
  std::vector<EMat> gens;
  for (const auto& r : roots) gens.push_back(triflection(r, a).matrix());

  // Closure under the generators.
  std::map<std::string, EMat> group{{key(EMat::identity(n)), EMat::identity(n)}};
  std::vector<EMat> frontier{EMat::identity(n)};
  while (!frontier.empty()) {
    std::vector<EMat> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        EMat y = g * x;
        if (group.emplace(key(y), y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }

  // Products T1^e1 ⋯ Tk^ek with ei ∈ {0, 1, 2}.
  std::vector<EMat> prods{EMat::identity(n)};
  for (const auto& g : gens) {
    std::vector<EMat> grown;
    for (const auto& x : prods) {
      grown.push_back(x);
      grown.push_back(g * x);
      grown.push_back(g * g * x);
    }
    prods = std::move(grown);
  }
  std::set<std::string> products;
  for (const auto& x : prods) products.insert(key(x));

  StratumReport rep;
  rep.order = group.size();
  rep.exponent_three = true;
  rep.congruence = true;
  std::set<std::string> keys;
  for (const auto& [k, x] : group) {
    keys.insert(k);
    rep.exponent_three = rep.exponent_three && (x * x * x).is_identity();
    if (n == f3::kDim) rep.congruence = rep.congruence && f3::reduce(x) == f3::identity();
  }
  rep.triflection_products = keys == products;
  return rep;
}

}  // namespace eislat::arrangement
