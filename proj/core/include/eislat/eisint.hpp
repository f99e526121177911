#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace eislat {

using Int = mpz_class;

/// Raised for contract violations on mathematical input (bad dimensions,
/// division by zero, non-integral reflections, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of F3 = E / θE.
class F3 {
 public:
  constexpr F3() = default;
  constexpr explicit F3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr int value() const { return v_; }

  friend constexpr F3 operator+(F3 x, F3 y) { return F3(x.v_ + y.v_); }
  friend constexpr F3 operator-(F3 x, F3 y) { return F3(x.v_ + 3 - y.v_); }
  friend constexpr F3 operator*(F3 x, F3 y) { return F3(x.v_ * y.v_); }
  constexpr F3 operator-() const { return F3(3 - v_); }
  F3& operator+=(F3 o) { return *this = *this + o; }
  F3& operator-=(F3 o) { return *this = *this - o; }
  F3& operator*=(F3 o) { return *this = *this * o; }

  // 1 and 2 are their own inverses.
  F3 inverse() const {
    if (v_ == 0) throw MathError("F3: inverse of zero");
    return *this;
  }
  constexpr bool is_square() const { return v_ != 2; }

  friend constexpr bool operator==(F3, F3) = default;

 private:
  std::uint8_t v_ = 0;
};

/// An Eisenstein integer a + bω with ω² + ω + 1 = 0, arbitrary precision.
class EisInt {
 public:
  EisInt() = default;
  EisInt(long a) : a_(a) {}  // NOLINT: implicit from rational integers
  EisInt(Int a) : a_(std::move(a)) {}  // NOLINT
  EisInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
  EisInt(long a, long b) : a_(a), b_(b) {}

  static EisInt omega() { return {0L, 1L}; }
  static EisInt omega_bar() { return {-1L, -1L}; }
  /// θ = ω − ω̄ = 1 + 2ω, a square root of −3.
  static EisInt theta() { return {1L, 2L}; }
  /// (−ω)^k; k = 0..5 enumerates the six units.
  static EisInt unit(int k);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_unit() const { return norm() == 1; }

  EisInt conj() const { return {a_ - b_, -b_}; }
  /// a² − ab + b², the ring norm |x|².
  Int norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  EisInt operator-() const { return {-a_, -b_}; }
  EisInt& operator+=(const EisInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  EisInt& operator-=(const EisInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  EisInt& operator*=(const EisInt& o) { return *this = *this * o; }

  friend EisInt operator+(EisInt x, const EisInt& y) { return x += y; }
  friend EisInt operator-(EisInt x, const EisInt& y) { return x -= y; }
  friend EisInt operator*(const EisInt& x, const EisInt& y) {
    Int bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
  }

  friend bool operator==(const EisInt& x, const EisInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Lexicographic on (a, b); used only for canonical ordering.
  friend std::strong_ordering operator<=>(const EisInt& x, const EisInt& y) {
    int c = cmp(x.a_, y.a_);
    if (c == 0) c = cmp(x.b_, y.b_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a+b*w" style rendering.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const EisInt& x) { return os << x.str(); }

 private:
  Int a_ = 0;
  Int b_ = 0;
};

struct DivResult {
  EisInt quotient;
  EisInt remainder;
};

/// The Eisenstein integer closest to n/d; ties broken towards the
/// lexicographically smallest (a, b). Guarantees 3·norm(n − q·d) ≤ norm(d).
EisInt nearest_quotient(const EisInt& n, const EisInt& d);

/// n = q·d + r with norm(r) < norm(d).
DivResult euclid_div(const EisInt& n, const EisInt& d);

/// n / d when d divides n exactly, otherwise throws MathError.
EisInt exact_div(const EisInt& n, const EisInt& d);
bool divides(const EisInt& d, const EisInt& n);

/// Ring homomorphism E → F3 with kernel θE (ω ↦ 1).
F3 mod_theta(const EisInt& x);

/// The associate u·x (u a unit) with 0 <= arg < π/3, i.e. a > b >= 0.
EisInt canonical_associate(const EisInt& x);
/// The unit u with u·x == canonical_associate(x); 1 for x = 0.
EisInt canonical_unit(const EisInt& x);

EisInt gcd(EisInt x, EisInt y);

struct Bezout {
  EisInt g;
  EisInt s;
  EisInt t;  // s·x + t·y == g
};
Bezout ext_gcd(const EisInt& x, const EisInt& y);

/// k with (−ω)^k == u, or -1 if u is not a unit.
int unit_index(const EisInt& u);

}  // namespace eislat
