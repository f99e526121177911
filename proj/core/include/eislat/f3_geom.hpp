#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "eislat/herm_lattice.hpp"

// The quadratic space V = Λ/θΛ ≅ F₃⁵ and its orthogonal group.
namespace eislat::f3 {

constexpr std::size_t kDim = 5;
constexpr std::size_t kVectors = 243;  // 3⁵

/// Entries in {0, 1, 2}.
using Vec = std::array<std::uint8_t, kDim>;
/// Row-major 5×5 matrix over F₃, acting on column vectors.
using Mat = std::array<std::uint8_t, kDim * kDim>;

Mat identity();
Mat scalar(int c);
Mat mul(const Mat& x, const Mat& y);
Vec apply(const Mat& m, const Vec& v);
std::size_t rank(Mat m);
/// dim ker(g − 1).
std::size_t fixed_dim(const Mat& g);

/// Base-3 packing, injective on matrices; used as a hash key.
std::uint64_t pack(const Mat& m);
Mat unpack(std::uint64_t key);

std::size_t index_of(const Vec& v);
Vec vec_at(std::size_t index);
bool is_zero(const Vec& v);
/// Scales v so that its first nonzero coordinate is 1.
Vec projective_normal(const Vec& v);

Vec reduce(const EVec& v);
Mat reduce(const EMat& m);
inline Mat reduce(const Isometry& g) { return reduce(g.matrix()); }

/// Symmetric bilinear form b(x, y) = yᵀ·B·x; q(x) = b(x, x).
class Quadratic {
 public:
  explicit Quadratic(const Mat& b);
  /// Reduction mod θ of a hermitian Gram (conjugation is trivial on F₃).
  static Quadratic from_gram(const HermGram& a);

  int bilinear(const Vec& x, const Vec& y) const;
  int q(const Vec& x) const { return bilinear(x, x); }
  const Mat& matrix() const { return b_; }
  bool nondegenerate() const { return rank(b_) == kDim; }

 private:
  Mat b_;
};

bool preserves(const Mat& g, const Quadratic& q);

/// x ↦ x − 2·b(x, v)/q(v)·v. Throws MathError for isotropic v.
Mat reflection(const Vec& v, const Quadratic& q);

/// One representative per projective class of anisotropic vectors, in index order.
std::vector<Vec> anisotropic_classes(const Quadratic& q);

/// Vectors v_1..v_k with g = s_{v_1}·…·s_{v_k}, each q(v_i) ≠ 0, k ≤ 6.
/// Each step fixes an anisotropic vector y by reflecting in g·y − y and
/// recurses on y⊥; when every g·y − y is isotropic one extra reflection is
/// spent first. Throws MathError if g is not an isometry.
std::vector<Vec> cartan_dieudonne(const Mat& g, const Quadratic& q);

/// ±1: the square class of the product of q(v_i).
int spinor_norm(const std::vector<Vec>& reflection_vectors, const Quadratic& q);
int spinor_norm(const Mat& g, const Quadratic& q);

/// A finite matrix group closed under the given generators.
class Group {
 public:
  std::size_t order() const { return keys_.size(); }
  bool contains(const Mat& m) const { return index_.count(pack(m)) != 0; }
  /// Packed elements in sorted order.
  const std::vector<std::uint64_t>& elements() const { return keys_; }
  /// Number of classes {g, −g}.
  std::size_t projective_order() const;

  friend Group bfs_closure(const std::vector<Mat>& gens);

 private:
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

Group bfs_closure(const std::vector<Mat>& gens);

/// Spinor norms of the whole reflection group, labelled along a BFS tree and
/// then checked on every Cayley-graph edge, so the labelling is a
/// well-defined homomorphism independent of any decomposition.
class SpinorTable {
 public:
  explicit SpinorTable(const Quadratic& q);

  std::size_t order() const { return label_.size(); }
  /// ±1; throws MathError if g is not in the reflection group.
  int spinor(const Mat& g) const;
  bool consistent() const { return consistent_; }

 private:
  std::unordered_map<std::uint64_t, std::int8_t> label_;
  bool consistent_ = true;
};

struct NormCount {
  std::size_t vectors = 0;
  std::size_t projective = 0;
};
/// Vectors with q(v) = value, excluding 0.
NormCount count_norm(const Quadratic& q, int value);

/// A lattice vector of norm ±1 or ±2 reducing to v, found by a bounded search
/// over lifts v + θ·k with small k; nullopt when the search fails.
std::optional<EVec> lift_small_norm(const Vec& v, const HermGram& a);

}  // namespace eislat::f3
