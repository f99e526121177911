#include "eislat/eisint.hpp"

#include <sstream>

namespace eislat {

EisInt EisInt::unit(int k) {
  static const std::array<EisInt, 6> units = [] {
    std::array<EisInt, 6> u;
    EisInt minus_omega{0L, -1L};
    u[0] = EisInt(1L);
    for (int i = 1; i < 6; ++i) u[i] = u[i - 1] * minus_omega;
    return u;
  }();
  return units[static_cast<std::size_t>(((k % 6) + 6) % 6)];
}

std::string EisInt::str() const {
  std::ostringstream os;
  if (sgn(b_) == 0) {
    os << a_;
    return os.str();
  }
  if (sgn(a_) != 0) os << a_ << (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) os << "-";
  Int mag = abs(b_);
  if (mag != 1) os << mag << "*";
  os << "w";
  return os.str();
}

namespace {

Int floor_div(const Int& x, const Int& y) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

}  // namespace

EisInt nearest_quotient(const EisInt& n, const EisInt& d) {
  if (d.is_zero()) throw MathError("nearest_quotient: division by zero");
  const Int den = d.norm();
  const EisInt num = n * d.conj();
  const Int a0 = floor_div(num.a(), den);
  const Int b0 = floor_div(num.b(), den);

  // n/d lies in the parallelogram spanned from a0 + b0ω by 1 and ω, which is a
  // union of two equilateral triangles; one of its corners is nearest.
  EisInt best;
  Int best_norm = -1;
  for (int da = 0; da <= 1; ++da) {
    for (int db = 0; db <= 1; ++db) {
      EisInt q(a0 + da, b0 + db);
      Int r = (n - q * d).norm();
      if (best_norm < 0 || r < best_norm || (r == best_norm && q < best)) {
        best = q;
        best_norm = r;
      }
    }
  }
  return best;
}

DivResult euclid_div(const EisInt& n, const EisInt& d) {
  EisInt q = nearest_quotient(n, d);
  EisInt r = n - q * d;
  return {std::move(q), std::move(r)};
}

bool divides(const EisInt& d, const EisInt& n) {
  if (d.is_zero()) return n.is_zero();
  const Int den = d.norm();
  const EisInt num = n * d.conj();
  return mpz_divisible_p(num.a().get_mpz_t(), den.get_mpz_t()) != 0 &&
         mpz_divisible_p(num.b().get_mpz_t(), den.get_mpz_t()) != 0;
}

EisInt exact_div(const EisInt& n, const EisInt& d) {
  if (d.is_zero()) throw MathError("exact_div: division by zero");
  if (d.is_rational()) {
    const Int& r = d.a();
    if (mpz_divisible_p(n.a().get_mpz_t(), r.get_mpz_t()) == 0 ||
        mpz_divisible_p(n.b().get_mpz_t(), r.get_mpz_t()) == 0)
      throw MathError("exact_div: " + d.str() + " does not divide " + n.str());
    Int qa, qb;
    mpz_divexact(qa.get_mpz_t(), n.a().get_mpz_t(), r.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), n.b().get_mpz_t(), r.get_mpz_t());
    return {std::move(qa), std::move(qb)};
  }
  const Int den = d.norm();
  const EisInt num = n * d.conj();
  if (mpz_divisible_p(num.a().get_mpz_t(), den.get_mpz_t()) == 0 ||
      mpz_divisible_p(num.b().get_mpz_t(), den.get_mpz_t()) == 0)
    throw MathError("exact_div: " + d.str() + " does not divide " + n.str());
  Int qa, qb;
  mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), den.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), den.get_mpz_t());
  return {std::move(qa), std::move(qb)};
}

F3 mod_theta(const EisInt& x) {
  Int s = x.a() + x.b();
  return F3(static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), 3)));
}

EisInt canonical_unit(const EisInt& x) {
  if (x.is_zero()) return EisInt(1L);
  // The sector 0 <= arg < π/3 is {a > b >= 0}; exactly one associate lies in it.
  for (int k = 0; k < 6; ++k) {
    EisInt u = EisInt::unit(k);
    EisInt y = u * x;
    if (sgn(y.b()) >= 0 && y.a() > y.b()) return u;
  }
  throw MathError("canonical_unit: unreachable");
}

EisInt canonical_associate(const EisInt& x) { return canonical_unit(x) * x; }

EisInt gcd(EisInt x, EisInt y) {
  while (!y.is_zero()) {
    EisInt r = euclid_div(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

Bezout ext_gcd(const EisInt& x, const EisInt& y) {
  EisInt r0 = x, r1 = y;
  EisInt s0(1L), s1(0L), t0(0L), t1(1L);
  while (!r1.is_zero()) {
    DivResult qr = euclid_div(r0, r1);
    EisInt s2 = s0 - qr.quotient * s1;
    EisInt t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  EisInt u = canonical_unit(r0);
  return {u * r0, u * s0, u * t0};
}

int unit_index(const EisInt& u) {
  for (int k = 0; k < 6; ++k)
    if (EisInt::unit(k) == u) return k;
  return -1;
}

}  // namespace eislat
