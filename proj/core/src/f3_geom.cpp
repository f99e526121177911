#include "eislat/f3_geom.hpp"

#include <algorithm>
#include <deque>

namespace eislat::f3 {

namespace {

std::uint8_t md(int x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }
int inv(int x) {
  if (md(x) == 0) throw MathError("f3: inverse of zero");
  return md(x);  // 1⁻¹ = 1, 2⁻¹ = 2
}

}  // namespace

Mat identity() { return scalar(1); }

Mat scalar(int c) {
  Mat m{};
  for (std::size_t i = 0; i < kDim; ++i) m[i * kDim + i] = md(c);
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  Mat r{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      unsigned s = 0;
      for (std::size_t k = 0; k < kDim; ++k) s += static_cast<unsigned>(x[i * kDim + k]) * y[k * kDim + j];
      r[i * kDim + j] = static_cast<std::uint8_t>(s % 3);
    }
  return r;
}

Vec apply(const Mat& m, const Vec& v) {
  Vec r{};
  for (std::size_t i = 0; i < kDim; ++i) {
    unsigned s = 0;
    for (std::size_t k = 0; k < kDim; ++k) s += static_cast<unsigned>(m[i * kDim + k]) * v[k];
    r[i] = static_cast<std::uint8_t>(s % 3);
  }
  return r;
}

std::size_t rank(Mat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < kDim && r < kDim; ++c) {
    std::size_t p = r;
    while (p < kDim && m[p * kDim + c] == 0) ++p;
    if (p == kDim) continue;
    for (std::size_t j = 0; j < kDim; ++j) std::swap(m[r * kDim + j], m[p * kDim + j]);
    const int pinv = inv(m[r * kDim + c]);
    for (std::size_t i = r + 1; i < kDim; ++i) {
      const int f = md(m[i * kDim + c] * pinv);
      if (f == 0) continue;
      for (std::size_t j = 0; j < kDim; ++j) m[i * kDim + j] = md(m[i * kDim + j] - f * m[r * kDim + j]);
    }
    ++r;
  }
  return r;
}

std::size_t fixed_dim(const Mat& g) {
  Mat d = g;
  for (std::size_t i = 0; i < kDim; ++i) d[i * kDim + i] = md(d[i * kDim + i] - 1);
  return kDim - rank(d);
}

std::uint64_t pack(const Mat& m) {
  std::uint64_t k = 0;
  for (auto e : m) k = k * 3 + e;
  return k;
}

Mat unpack(std::uint64_t key) {
  Mat m{};
  for (std::size_t i = m.size(); i > 0; --i) {
    m[i - 1] = static_cast<std::uint8_t>(key % 3);
    key /= 3;
  }
  return m;
}

std::size_t index_of(const Vec& v) {
  std::size_t k = 0;
  for (auto e : v) k = k * 3 + e;
  return k;
}

Vec vec_at(std::size_t index) {
  Vec v{};
  for (std::size_t i = kDim; i > 0; --i) {
    v[i - 1] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

Vec projective_normal(const Vec& v) {
  for (auto e : v)
    if (e != 0) {
      const int s = inv(e);
      Vec r{};
      for (std::size_t i = 0; i < kDim; ++i) r[i] = md(v[i] * s);
      return r;
    }
  return v;
}

Vec reduce(const EVec& v) {
  if (v.size() != kDim) throw MathError("f3::reduce: expected a vector of length 5");
  Vec r{};
  for (std::size_t i = 0; i < kDim; ++i) r[i] = static_cast<std::uint8_t>(mod_theta(v[i]).value());
  return r;
}

Mat reduce(const EMat& m) {
  if (m.rows() != kDim || m.cols() != kDim) throw MathError("f3::reduce: expected a 5×5 matrix");
  Mat r{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r[i * kDim + j] = static_cast<std::uint8_t>(mod_theta(m(i, j)).value());
  return r;
}

Quadratic::Quadratic(const Mat& b) : b_(b) {
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (b_[i * kDim + j] != b_[j * kDim + i]) throw MathError("f3::Quadratic: matrix is not symmetric");
}

Quadratic Quadratic::from_gram(const HermGram& a) { return Quadratic(reduce(a.matrix())); }

int Quadratic::bilinear(const Vec& x, const Vec& y) const {
  int s = 0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) s += y[i] * b_[i * kDim + j] * x[j];
  return md(s);
}

bool preserves(const Mat& g, const Quadratic& q) {
  Mat gt{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) gt[i * kDim + j] = g[j * kDim + i];
  return mul(mul(gt, q.matrix()), g) == q.matrix();
}

Mat reflection(const Vec& v, const Quadratic& q) {
  const int qv = q.q(v);
  if (qv == 0) throw MathError("f3::reflection: vector is isotropic");
  // Column j is the image of e_j: e_j − 2·b(e_j, v)/q(v)·v.
  const int c = md(2 * inv(qv));
  Mat m = identity();
  for (std::size_t j = 0; j < kDim; ++j) {
    Vec e{};
    e[j] = 1;
    const int f = md(c * q.bilinear(e, v));
    for (std::size_t i = 0; i < kDim; ++i) m[i * kDim + j] = md(m[i * kDim + j] - f * v[i]);
  }
  return m;
}

std::vector<Vec> anisotropic_classes(const Quadratic& q) {
  std::vector<Vec> out;
  for (std::size_t k = 1; k < kVectors; ++k) {
    Vec v = vec_at(k);
    if (projective_normal(v) != v || q.q(v) == 0) continue;
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> cartan_dieudonne(const Mat& g, const Quadratic& q) {
  if (!preserves(g, q)) throw MathError("cartan_dieudonne: input is not an isometry");
  if (!q.nondegenerate()) throw MathError("cartan_dieudonne: form is degenerate");

  // Invariant: cur fixes every vector in `fixed` (anisotropic, mutually
  // orthogonal), so it preserves W = fixed⊥. Reflections are peeled off the
  // left, s_{v_k}…s_{v_1}·g = cur, so at the end g = s_{v_1}…s_{v_k}.
  std::vector<Vec> out;
  std::vector<Vec> fixed;
  Mat cur = g;
  auto in_w = [&](const Vec& y) {
    return std::all_of(fixed.begin(), fixed.end(), [&](const Vec& x) { return q.bilinear(y, x) == 0; });
  };
  auto diff = [](const Vec& a, const Vec& b) {
    Vec d{};
    for (std::size_t i = 0; i < kDim; ++i) d[i] = md(a[i] - b[i]);
    return d;
  };
  // Finds y ∈ W anisotropic with m·y = y, or with m·y − y anisotropic.
  auto find_step = [&](const Mat& m, bool want_fixed) -> std::optional<Vec> {
    for (std::size_t k = 1; k < kVectors; ++k) {
      Vec y = vec_at(k);
      if (q.q(y) == 0 || !in_w(y)) continue;
      Vec w = diff(f3::apply(m, y), y);
      if (want_fixed ? is_zero(w) : (!is_zero(w) && q.q(w) != 0)) return y;
    }
    return std::nullopt;
  };

  while (cur != identity()) {
    if (auto y = find_step(cur, true)) {
      fixed.push_back(*y);
      continue;
    }
    if (auto y = find_step(cur, false)) {
      Vec w = diff(f3::apply(cur, *y), *y);
      out.push_back(w);
      cur = mul(reflection(w, q), cur);
      fixed.push_back(*y);
    } else {
      // Every g·y − y is isotropic: spend one reflection to leave this case.
      bool moved = false;
      for (std::size_t k = 1; k < kVectors && !moved; ++k) {
        Vec u = vec_at(k);
        if (q.q(u) == 0 || !in_w(u) || projective_normal(u) != u) continue;
        Mat next = mul(reflection(u, q), cur);
        if (next == identity() || find_step(next, true) || find_step(next, false)) {
          out.push_back(u);
          cur = next;
          moved = true;
        }
      }
      if (!moved) throw MathError("cartan_dieudonne: no admissible reflection");
    }
    if (out.size() > kDim + 1 || fixed.size() > kDim) throw MathError("cartan_dieudonne: decomposition did not converge");
  }
  return out;
}

int spinor_norm(const std::vector<Vec>& vs, const Quadratic& q) {
  int s = 1;
  for (const auto& v : vs) {
    const int n = q.q(v);
    if (n == 0) throw MathError("spinor_norm: isotropic reflection vector");
    if (n == 2) s = -s;
  }
  return s;
}

int spinor_norm(const Mat& g, const Quadratic& q) { return spinor_norm(cartan_dieudonne(g, q), q); }

std::size_t Group::projective_order() const {
  const std::uint64_t minus = pack(scalar(2));
  if (!index_.count(minus)) return order();
  return order() / 2;
}

Group bfs_closure(const std::vector<Mat>& gens) {
  Group g;
  std::deque<Mat> queue;
  const Mat id = identity();
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  seen.emplace(pack(id), 0);
  std::vector<std::uint64_t> keys{pack(id)};
  queue.push_back(id);
  while (!queue.empty()) {
    Mat cur = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Mat next = mul(s, cur);
      std::uint64_t k = pack(next);
      if (seen.emplace(k, 0).second) {
        keys.push_back(k);
        queue.push_back(next);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  for (std::uint32_t i = 0; i < keys.size(); ++i) seen[keys[i]] = i;
  g.keys_ = std::move(keys);
  g.index_ = std::move(seen);
  return g;
}

SpinorTable::SpinorTable(const Quadratic& q) {
  const auto vs = anisotropic_classes(q);
  std::vector<Mat> refl;
  std::vector<std::int8_t> sign;
  for (const auto& v : vs) {
    refl.push_back(reflection(v, q));
    sign.push_back(q.q(v) == 2 ? -1 : 1);
  }
  std::deque<Mat> queue{identity()};
  label_.emplace(pack(identity()), 1);
  while (!queue.empty()) {
    Mat cur = queue.front();
    queue.pop_front();
    const std::int8_t lc = label_.at(pack(cur));
    for (std::size_t i = 0; i < refl.size(); ++i) {
      Mat next = mul(refl[i], cur);
      const std::int8_t ln = static_cast<std::int8_t>(lc * sign[i]);
      auto [it, inserted] = label_.emplace(pack(next), ln);
      if (inserted) queue.push_back(next);
      else if (it->second != ln) consistent_ = false;
    }
  }
}

int SpinorTable::spinor(const Mat& g) const {
  auto it = label_.find(pack(g));
  if (it == label_.end()) throw MathError("SpinorTable: element is not in the reflection group");
  return it->second;
}

NormCount count_norm(const Quadratic& q, int value) {
  NormCount c;
  for (std::size_t k = 1; k < kVectors; ++k) {
    Vec v = vec_at(k);
    if (q.q(v) != md(value)) continue;
    ++c.vectors;
    if (projective_normal(v) == v) ++c.projective;
  }
  return c;
}

std::optional<EVec> lift_small_norm(const Vec& v, const HermGram& a) {
  if (a.dim() != kDim) throw MathError("lift_small_norm: expected a rank-5 lattice");
  // Residue lifts 0, 1, −1 plus θ·k for k in {0, ±1, ±ω, ±ω̄}.
  const EisInt th = EisInt::theta();
  std::vector<EisInt> shifts{EisInt(0L)};
  for (int u = 0; u < 6; ++u) shifts.push_back(th * EisInt::unit(u));
  std::vector<std::vector<EisInt>> options(kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    const EisInt base = v[i] == 2 ? EisInt(-1L) : EisInt(static_cast<long>(v[i]));
    for (const auto& s : shifts) options[i].push_back(base + s);
  }
  std::array<std::size_t, kDim> idx{};
  for (;;) {
    EVec x(kDim);
    for (std::size_t i = 0; i < kDim; ++i) x[i] = options[i][idx[i]];
    const Int n = norm(x, a);
    if (n == 1 || n == -1 || n == 2 || n == -2) return x;
    std::size_t i = 0;
    while (i < kDim && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == kDim) return std::nullopt;
  }
}

}  // namespace eislat::f3
