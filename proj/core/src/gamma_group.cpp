#include "eislat/gamma_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "eislat/f3_geom.hpp"
#include "eislat/linalg.hpp"

namespace eislat::gamma {

namespace {

EisInt unit_pow(int k) { return EisInt::unit(((k % 6) + 6) % 6); }

Int round_div(const Int& a, const Int& b) {
  // Nearest integer to a/b for b > 0, halves rounded up.
  Int num = 2 * a + b;
  Int den = 2 * b;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

long to_long(const Int& x, const char* what) {
  if (!x.fits_slong_p()) throw MathError(std::string(what) + ": exponent does not fit in a long");
  return x.get_si();
}

EVec vec(std::initializer_list<EisInt> xs) { return EVec(xs); }

TranslationParams scaled(const TranslationParams& p, long e) {
  // Im⟨λ|λ⟩ = 0, so T_{λ,k}^e = T_{eλ, ek}.
  std::array<EisInt, 3> l;
  for (std::size_t i = 0; i < 3; ++i) l[i] = EisInt(e) * p.lambda[i];
  return {l, Int(e) * p.k};
}

void apply_translation(const TranslationParams& p, EVec& v) {
  const EisInt mu = v[3];
  EisInt nu = v[4];
  Int half = p.k - p.lambda_norm();
  mpz_divexact_ui(half.get_mpz_t(), half.get_mpz_t(), 2);
  nu += EisInt(half, p.k) * mu;
  for (std::size_t i = 0; i < 3; ++i) {
    nu -= p.lambda[i].conj() * v[i];
    v[i] += p.lambda[i] * mu;
  }
  v[4] = nu;
}

const std::array<EMat, 6>& reflection_powers(int i) {
  static const std::array<std::array<EMat, 6>, 7> table = [] {
    std::array<std::array<EMat, 6>, 7> t;
    for (int g = 0; g < 7; ++g) {
      EMat r = generator(g + 1).matrix();
      t[g][0] = EMat::identity(5);
      for (int e = 1; e < 6; ++e) t[g][e] = r * t[g][e - 1];
    }
    return t;
  }();
  return table[i];
}

std::size_t gen_index(Gen g) { return static_cast<std::size_t>(g); }

const TranslationParams& base_params(Gen g) {
  const auto& gens = translation_generators();
  return gens[gen_index(g) - kReflections].params;
}

/// The translation word for λ built from A/B letters only, with its params.
std::pair<Word, TranslationParams> lambda_word(const std::array<EisInt, 3>& lambda) {
  static const Gen as[3] = {Gen::A0, Gen::A1, Gen::A2};
  static const Gen bs[3] = {Gen::B0, Gen::B1, Gen::B2};
  Word w;
  TranslationParams p({EisInt(), EisInt(), EisInt()}, Int(0));
  for (std::size_t i = 0; i < 3; ++i) {
    // x + yω = (y − x)·ω + x·(−ω̄).
    const Int& x = lambda[i].a();
    const Int& y = lambda[i].b();
    long a = to_long(y - x, "translation_word");
    long b = to_long(x, "translation_word");
    if (a != 0) {
      w = Word::letter(as[i], a) * w;
      p = compose(scaled(base_params(as[i]), a), p);
    }
    if (b != 0) {
      w = Word::letter(bs[i], b) * w;
      p = compose(scaled(base_params(bs[i]), b), p);
    }
  }
  return {w, p};
}

bool is_unit_multiple(const EVec& v, const EVec& target) {
  for (int k = 0; k < 6; ++k) {
    EVec t = target;
    for (auto& x : t) x = unit_pow(k) * x;
    if (t == v) return true;
  }
  return false;
}

bool is_primitive(const EVec& v) {
  EisInt g;
  for (const auto& x : v) g = gcd(g, x);
  return g.is_unit();
}

EMat block11(const EMat& m) { return m.block(3, 3, 2, 2); }

bool identity_on_lambda(const EMat& m) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i >= 3 && j >= 3) continue;
      if (m(i, j) != EisInt(i == j ? 1L : 0L)) return false;
    }
  return true;
}

// ---- shared height-reduction machinery -------------------------------------

struct State {
  EVec v;
  Word word;
  std::vector<Step> steps;

  void act(const Word& w, StepKind kind) {
    if (w.empty()) return;
    v = w.apply(std::move(v));
    word = w * word;
    steps.push_back({kind, w, v[3].norm()});
  }
};

/// C^m with m chosen so that Im(ν·H̄) is reduced mod θ·norm(H).
Word centring_word(const EVec& v) {
  const EisInt& H = v[3];
  // C adds mθ·H to ν, i.e. 2mN to the ω-coefficient of ν·H̄.
  const EisInt x = v[4] * H.conj();
  const long m = to_long(-round_div(x.b(), 2 * H.norm()), "reduce");
  return m == 0 ? Word() : Word::letter(Gen::C, m);
}

/// Translate so that each 3·norm(vi) ≤ norm(H), then centre Im(ν·H̄) with C.
void prepare(State& s) {
  const EisInt H = s.v[3];
  const Int N = H.norm();
  std::array<EisInt, 3> lambda;
  for (std::size_t i = 0; i < 3; ++i) lambda[i] = -nearest_quotient(s.v[i], H);
  Word w = lambda_word(lambda).first;
  w = centring_word(w.apply(s.v)) * w;
  s.act(w, StepKind::translate);
  for (std::size_t i = 0; i < 3; ++i)
    if (3 * s.v[i].norm() > N) throw MathError("reduce: translation bound violated");
}

/// The reflection C^n·R3^j·C^−n (in the root (0,0,0;1,nθ−ω)) minimizing the
/// new height, if it strictly beats the current one.
std::optional<Word> reducing_reflection(const EVec& v) {
  const EisInt H = v[3];
  const Int N = H.norm();
  const EisInt base = v[4] - EisInt::omega_bar() * H;  // h(v, r_0)
  const EisInt tH = EisInt::theta() * H;
  std::optional<std::pair<Int, Word>> best;
  auto consider = [&](long n, int j, const EisInt& alpha, const EisInt& beta) {
    EisInt h = alpha + EisInt(n) * beta;
    Int hn = h.norm();
    if (hn < N && (!best || hn < best->first)) {
      Word w = Word::letter(Gen::C, n) * Word::letter(Gen::R3, j) * Word::letter(Gen::C, -n);
      best.emplace(hn, w);
    }
  };
  for (int j = 1; j < 6; ++j) {
    // H' = H − (1 − ζ^j)·h(v, r_n) with h(v, r_n) = base − nθH.
    const EisInt c = EisInt(1L) - unit_pow(j);
    const EisInt alpha = H - c * base;
    const EisInt beta = c * tH;
    for (long n = -2; n <= 2; ++n) consider(n, j, alpha, beta);
  }
  if (best) return best->second;
  // Outside the window: H' is affine in n, so the best integer n is the
  // rounding of the real minimizer. This covers every n ∈ Z.
  for (int j = 1; j < 6; ++j) {
    const EisInt c = EisInt(1L) - unit_pow(j);
    const EisInt alpha = H - c * base;
    const EisInt beta = c * tH;
    EisInt ab = alpha * beta.conj();  // Re = a − b/2
    Int n0 = round_div(-(2 * ab.a() - ab.b()), 2 * beta.norm());
    for (long d = -1; d <= 1; ++d) consider(to_long(n0, "reduce") + d, j, alpha, beta);
  }
  if (best) return best->second;
  return std::nullopt;
}

/// A prepared v can be orthogonal to every height-1 root only when each vi
/// sits on a vertex of its Voronoi cell, where three translates tie. Tries
/// the other tied translates: a translation word and the reflection it enables.
std::optional<std::pair<Word, Word>> tie_breaking_reflection(const EVec& v) {
  const EisInt H = v[3];
  const Int N = H.norm();
  std::array<std::vector<EisInt>, 3> options;
  for (std::size_t i = 0; i < 3; ++i) {
    options[i].push_back(EisInt());
    for (int k = 0; k < 6; ++k) {
      const EisInt u = EisInt::unit(k);
      if (3 * (v[i] + u * H).norm() <= N) options[i].push_back(u);
    }
  }
  for (const auto& a : options[0])
    for (const auto& b : options[1])
      for (const auto& c : options[2]) {
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        Word w = lambda_word({a, b, c}).first;
        w = centring_word(w.apply(v)) * w;
        if (auto r = reducing_reflection(w.apply(v))) return std::make_pair(w, *r);
      }
  return std::nullopt;
}

/// Short words (≤ 2 reflection letters) lowering the height; the best one.
std::optional<Word> searched_reduction(const EVec& v) {
  const Int N = v[3].norm();
  std::optional<std::pair<Int, Word>> best;
  auto consider = [&](const Word& w) {
    EVec u = w.apply(v);
    Int hn = u[3].norm();
    if (hn < N && (!best || hn < best->first)) best.emplace(hn, w);
  };
  for (int g = 1; g <= 7; ++g)
    for (int e = 1; e < 6; ++e) {
      Word w1 = Word::letter(reflection_gen(g), e);
      consider(w1);
      for (int g2 = 1; g2 <= 7; ++g2) {
        if (g2 == g) continue;
        for (int e2 = 1; e2 < 6; ++e2) consider(Word::letter(reflection_gen(g2), e2) * w1);
      }
    }
  if (best) return best->second;
  return std::nullopt;
}

/// A primitive null vector orthogonal to v, searched over small coefficients
/// on a saturated basis of v⊥ (radius 1, then 2).
std::optional<EVec> small_null_in_complement(const EVec& v) {
  const HermGram& a = HermGram::hyp41();
  const Sublattice c = orthogonal_complement(v, a);
  const EMat& g = c.gram();
  const std::size_t k = c.rank();
  for (long radius = 1; radius <= 2; ++radius) {
    std::vector<EisInt> box;
    for (long x = -radius; x <= radius; ++x)
      for (long y = -radius; y <= radius; ++y) box.emplace_back(x, y);
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      EVec coeffs(k);
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        coeffs[i] = box[idx[i]];
        zero = zero && coeffs[i].is_zero();
      }
      if (!zero) {
        EisInt h;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) h += coeffs[j].conj() * g(j, i) * coeffs[i];
        if (h.is_zero()) {
          EVec z = c.combine(coeffs);
          EisInt d;
          for (const auto& x : z) d = gcd(d, x);
          for (auto& x : z) x = exact_div(x, d);
          return z;
        }
      }
      std::size_t i = 0;
      while (i < k && ++idx[i] == box.size()) idx[i++] = 0;
      if (i == k) break;
    }
  }
  return std::nullopt;
}

constexpr std::size_t kMaxRounds = 100000;

}  // namespace

// ---- letters and words ------------------------------------------------------

bool is_reflection(Gen g) { return gen_index(g) < kReflections; }

std::string gen_name(Gen g) {
  static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "A0", "B0", "A1", "B1", "A2", "B2", "C"};
  return names[gen_index(g)];
}

Gen reflection_gen(int i) {
  if (i < 1 || i > kReflections) throw MathError("reflection_gen: index out of range");
  return static_cast<Gen>(i - 1);
}

Word::Word(const std::vector<Token>& tokens) {
  for (const auto& t : tokens) push(t);
}

Word Word::letter(Gen g, long exp) {
  Word w;
  w.push({g, exp});
  return w;
}

void Word::push(const Token& t) {
  Token u = t;
  if (is_reflection(u.gen)) u.exp = ((u.exp % 6) + 6) % 6;
  if (u.exp == 0) return;
  if (!tokens_.empty() && tokens_.back().gen == u.gen) {
    Token& b = tokens_.back();
    b.exp += u.exp;
    if (is_reflection(b.gen)) b.exp %= 6;
    if (b.exp == 0) tokens_.pop_back();
    return;
  }
  tokens_.push_back(u);
}

Word Word::inverse() const {
  Word w;
  for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) w.push({it->gen, -it->exp});
  return w;
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Word operator*(const Word& x, const Word& y) {
  Word w = x;
  for (const auto& t : y.tokens_) w.push(t);
  return w;
}

Word Word::expanded(std::size_t max_tokens) const {
  static const std::map<Gen, Word> defs = [] {
    auto R = [](int i, long e = 1) { return Word::letter(reflection_gen(i), e); };
    std::map<Gen, Word> d;
    d[Gen::A0] = R(2, -1) * R(1);
    d[Gen::B0] = R(1) * R(2, -1);
    d[Gen::A1] = R(4, -1) * R(5);
    d[Gen::B1] = R(5) * R(4, -1);
    d[Gen::A2] = R(6, -1) * R(7);
    d[Gen::B2] = R(7) * R(6, -1);
    d[Gen::C] = d[Gen::A0] * d[Gen::B0] * d[Gen::A0].inverse() * d[Gen::B0].inverse();
    return d;
  }();
  Word out;
  for (const auto& t : tokens_) {
    if (is_reflection(t.gen)) {
      out.push(t);
    } else {
      const Word& d = defs.at(t.gen);
      Word piece = t.exp > 0 ? d : d.inverse();
      long reps = t.exp > 0 ? t.exp : -t.exp;
      for (long i = 0; i < reps; ++i) {
        for (const auto& u : piece.tokens_) out.push(u);
        if (out.size() > max_tokens) throw MathError("Word::expanded: too long");
      }
    }
  }
  return out;
}

std::size_t Word::reflection_count() const {
  std::size_t n = 0;
  for (const auto& t : tokens_)
    if (is_reflection(t.gen)) ++n;
  return n;
}

EVec Word::apply(EVec v) const {
  if (v.size() != 5) throw MathError("Word::apply: expected a vector of length 5");
  for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) {
    if (is_reflection(it->gen))
      v = reflection_powers(static_cast<int>(gen_index(it->gen)))[it->exp] * v;
    else
      apply_translation(scaled(base_params(it->gen), it->exp), v);
  }
  return v;
}

EMat Word::matrix() const {
  EMat m = EMat::identity(5);
  for (const auto& t : tokens_) m = m * letter_matrix(t.gen, t.exp);
  return m;
}

Isometry Word::isometry() const { return {matrix(), HermGram::hyp41()}; }

std::string Word::str() const {
  if (tokens_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) os << ' ';
    os << gen_name(tokens_[i].gen);
    if (tokens_[i].exp != 1) os << '^' << tokens_[i].exp;
  }
  return os.str();
}

const std::array<EVec, 7>& roots() {
  static const std::array<EVec, 7> r = [] {
    const EisInt o, one(1L), w = EisInt::omega();
    return std::array<EVec, 7>{
        vec({one, o, o, o, o}),   vec({one, o, o, o, one}), vec({o, o, o, one, -w}),
        vec({o, one, o, o, one}), vec({o, one, o, o, o}),   vec({o, o, one, o, one}),
        vec({o, o, one, o, o}),
    };
  }();
  return r;
}

const Isometry& generator(int i) {
  static const std::vector<Isometry> gens = [] {
    std::vector<Isometry> g;
    for (const auto& r : roots()) g.push_back(hexflection(r, HermGram::hyp41()));
    return g;
  }();
  if (i < 1 || i > kReflections) throw MathError("generator: index out of range");
  return gens[static_cast<std::size_t>(i - 1)];
}

EMat letter_matrix(Gen g, long exp) {
  if (is_reflection(g)) return reflection_powers(static_cast<int>(gen_index(g)))[((exp % 6) + 6) % 6];
  return translation(scaled(base_params(g), exp)).matrix();
}

bool diagram_adjacent(int i, int j) {
  if (i > j) std::swap(i, j);
  static const std::pair<int, int> edges[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}};
  return std::find(std::begin(edges), std::end(edges), std::make_pair(i, j)) != std::end(edges);
}

// ---- relations --------------------------------------------------------------

std::vector<Check> verify_braid_table() {
  std::vector<Check> out;
  const HermGram& a = HermGram::hyp41();
  for (int i = 1; i <= kReflections; ++i)
    for (int j = i + 1; j <= kReflections; ++j) {
      const EMat& x = generator(i).matrix();
      const EMat& y = generator(j).matrix();
      bool adj = diagram_adjacent(i, j);
      bool rel = adj ? x * y * x == y * x * y : x * y == y * x;
      Int hn = inner(roots()[i - 1], roots()[j - 1], a).norm();
      bool gram = hn == (adj ? 1 : 0);
      std::ostringstream name;
      name << "R" << i << " R" << j << (adj ? " braid" : " commute");
      std::ostringstream detail;
      detail << "|h(r" << i << ", r" << j << ")|^2 = " << hn;
      out.push_back({name.str(), rel && gram, detail.str()});
    }
  return out;
}

std::vector<Check> verify_named_identities() {
  const HermGram& a = HermGram::hyp41();
  const EisInt o, one(1L), w = EisInt::omega(), wb = EisInt::omega_bar();
  std::vector<Check> out;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  auto T = [](std::array<EisInt, 3> l, long k) { return translation(TranslationParams(l, Int(k))).matrix(); };
  auto R = [](int i, long e = 1) { return Word::letter(reflection_gen(i), e); };

  const EMat a0 = (R(2, -1) * R(1)).matrix();
  add("R2^-1 R1 = T(w,0,0; theta/2)", a0 == T({w, o, o}, 1));
  add("R1 R2^-1 = T(-wb,0,0; theta/2)", (R(1) * R(2, -1)).matrix() == T({-wb, o, o}, 1));
  add("R4^-1 R5 = T(0,w,0; theta/2)", (R(4, -1) * R(5)).matrix() == T({o, w, o}, 1));
  add("R5 R4^-1 = T(0,-wb,0; theta/2)", (R(5) * R(4, -1)).matrix() == T({o, -wb, o}, 1));
  add("R6^-1 R7 = T(0,0,w; theta/2)", (R(6, -1) * R(7)).matrix() == T({o, o, w}, 1));
  add("R7 R6^-1 = T(0,0,-wb; theta/2)", (R(7) * R(6, -1)).matrix() == T({o, o, -wb}, 1));

  EMat x = T({w, o, o}, 1), y = T({-wb, o, o}, 1);
  EMat comm = x * y * translation(inverse(TranslationParams({w, o, o}, Int(1)))).matrix() *
              translation(inverse(TranslationParams({-wb, o, o}, Int(1)))).matrix();
  add("[T(w,0,0; theta/2), T(-wb,0,0; theta/2)] = T(0; theta)", comm == T({o, o, o}, 2));
  add("(R1 R2)^3 = T(0; -theta)", power((R(1) * R(2)).matrix(), 3) == T({o, o, o}, -2));

  const EMat r3 = generator(3).matrix();
  EMat r3_expected{{EisInt::theta() * wb, wb}, {wb, o}};
  add("R3 on I11 = [[theta*wb, wb], [wb, 0]]", identity_on_lambda(r3) && block11(r3) == r3_expected);

  const EMat f = f_word().matrix();
  add("F = R3 T(0; -theta) on I11 = [[0, wb], [wb, 0]]",
      identity_on_lambda(f) && block11(f) == EMat{{o, wb}, {wb, o}});
  add("F^2 = w on I11", block11(f * f) == EMat{{w, o}, {o, w}});

  const EVec b = vec({one, -one, o, o, o});
  const EVec bp = vec({o, o, o, one, one});
  EVec lhs = T({w, -w, o}, 0) * (f * (T({one, o, o}, 1) * b));
  EVec rhs = bp;
  for (auto& c : rhs) c = -wb * c;
  add("T(w,-w,0; 0) F T(1,0,0; theta/2) b = -wb b'", lhs == rhs);

  const EMat bf = biflection(bp, a).matrix() * f;
  add("B' F = -wb on I11", block11(bf) == EMat{{-wb, o}, {o, -wb}});

  EVec r6r7 = generator(6).apply(roots()[6]);
  add("R6(r7) = (0,0,-w; 0,wb)", r6r7 == vec({o, o, -w, o, wb}));

  add("scalar w is a word", scalar_omega_word().matrix() == EMat::identity(5).scaled(w),
      scalar_omega_word().str());
  add("escape word carries r3 to a unit multiple of r7",
      is_unit_multiple(escape_word().apply(roots()[2]), roots()[6]), escape_word().str());

  bool distinct = true;
  for (int i = 1; i <= kReflections; ++i)
    for (int j = i + 1; j <= kReflections; ++j)
      if (generator(i) == generator(j)) distinct = false;
  add("R1..R7 pairwise distinct", distinct);

  bool orders = true;
  for (int i = 1; i <= kReflections; ++i) {
    const EMat& g = generator(i).matrix();
    for (int e = 1; e < 6; ++e) orders = orders && !power(g, static_cast<unsigned>(e)).is_identity();
    orders = orders && power(g, 6).is_identity();
  }
  add("each Ri has order 6", orders);
  return out;
}

// ---- translations -----------------------------------------------------------

const std::vector<NamedTranslation>& translation_generators() {
  static const std::vector<NamedTranslation> gens = [] {
    auto R = [](int i, long e = 1) { return Word::letter(reflection_gen(i), e); };
    auto params = [](const Word& word) {
      auto p = translation_params_of(word.matrix());
      if (!p) throw MathError("translation_generators: word is not a translation");
      return *p;
    };
    std::vector<NamedTranslation> g;
    const Word a0 = R(2, -1) * R(1), b0 = R(1) * R(2, -1);
    g.push_back({Gen::A0, params(a0)});
    g.push_back({Gen::B0, params(b0)});
    g.push_back({Gen::A1, params(R(4, -1) * R(5))});
    g.push_back({Gen::B1, params(R(5) * R(4, -1))});
    g.push_back({Gen::A2, params(R(6, -1) * R(7))});
    g.push_back({Gen::B2, params(R(7) * R(6, -1))});
    g.push_back({Gen::C, params(a0 * b0 * a0.inverse() * b0.inverse())});
    return g;
  }();
  return gens;
}

Word translation_word(const TranslationParams& p) {
  auto [w, q] = lambda_word(p.lambda);
  // Same λ, so k − q.k is even; C = T_{0,θ} adds 2 to k.
  Int diff = p.k - q.k;
  mpz_divexact_ui(diff.get_mpz_t(), diff.get_mpz_t(), 2);
  const Int ck = base_params(Gen::C).k;
  if (ck != 2) throw MathError("translation_word: unexpected central generator");
  return Word::letter(Gen::C, to_long(diff, "translation_word")) * w;
}

Word f_word() { return Word::letter(Gen::R3) * Word::letter(Gen::C, -1); }

Word scalar_omega_word() {
  return f_word() * f_word() * Word::letter(Gen::R1, 4) * Word::letter(Gen::R5, 4) * Word::letter(Gen::R7, 4);
}

Word escape_word() {
  return Word::letter(Gen::R6) * Word::letter(Gen::R7) * Word::letter(Gen::R3) * Word::letter(Gen::R6);
}

const Word& unit_word(int k) {
  static const std::array<Word, 6> words = [] {
    // ω comes from F²; an odd unit needs one word moving ρ to −ρ (up to ω).
    // Such words are rare among short ones, so reduce images of ρ under a
    // fixed pseudo-random sequence of words until one lands on an odd unit.
    const Word om = scalar_omega_word();
    std::optional<std::pair<Word, int>> odd;
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100000 && !odd; ++t) {
      Word w = random_word(rng, 12);
      ReductionCertificate c = reduce_null(w.apply(rho()));
      int idx = unit_index(c.unit);
      if (idx % 2 == 1) odd.emplace(c.word * w, idx);
    }
    if (!odd) throw MathError("unit_word: no word reaches an odd unit multiple of rho");
    std::array<Word, 6> out;
    // ω = (−ω)^4, so ω^m has index 4m mod 6.
    for (int m = 0; m < 3; ++m) {
      out[(4 * m) % 6] = om.pow(m);
      out[(odd->second + 4 * m) % 6] = odd->first * om.pow(m);
    }
    return out;
  }();
  if (k < 0 || k > 5) throw MathError("unit_word: index out of range");
  return words[static_cast<std::size_t>(k)];
}

// ---- reduction --------------------------------------------------------------

std::string step_name(StepKind k) {
  switch (k) {
    case StepKind::translate: return "translate";
    case StepKind::reflect: return "reflect";
    case StepKind::escape: return "escape";
    case StepKind::search: return "search";
  }
  return "?";
}

std::vector<Int> ReductionCertificate::heights() const {
  std::vector<Int> h{input[3].norm()};
  for (const auto& s : steps)
    if (s.kind != StepKind::translate) h.push_back(s.height_norm);
  return h;
}

std::size_t ReductionCertificate::escapes() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const Step& s) { return s.kind == StepKind::escape; }));
}

ReductionCertificate reduce_null(const EVec& v, bool tie_breaking) {
  const HermGram& a = HermGram::hyp41();
  if (v.size() != 5) throw MathError("reduce_null: expected 5 coordinates");
  if (norm(v, a) != 0) throw MathError("reduce_null: vector is not null");
  if (!is_primitive(v)) throw MathError("reduce_null: vector is zero or not primitive");

  State s{v, {}, {}};
  std::size_t escapes = 0;
  for (std::size_t round = 0; !s.v[3].is_zero(); ++round) {
    if (round > kMaxRounds) throw MathError("reduce_null: no convergence");
    prepare(s);
    if (auto w = reducing_reflection(s.v)) {
      s.act(*w, StepKind::reflect);
      continue;
    }
    if (auto alt = tie_breaking ? tie_breaking_reflection(s.v) : std::nullopt) {
      s.act(alt->first, StepKind::translate);
      s.act(alt->second, StepKind::reflect);
      continue;
    }
    // Stuck: v is orthogonal to r_n for n = (ν − ω̄H)/(θH).
    const EisInt H = s.v[3];
    const EisInt num = s.v[4] - EisInt::omega_bar() * H;
    const EisInt den = EisInt::theta() * H;
    if (!divides(den, num) || !exact_div(num, den).is_rational())
      throw MathError("reduce_null: no reducing reflection and no orthogonal height-1 root");
    if (++escapes > 3) throw MathError("reduce_null: repeated escape");
    long n = to_long(exact_div(num, den).a(), "reduce_null");
    s.act(escape_word() * Word::letter(Gen::C, -n), StepKind::escape);
  }
  ReductionCertificate c;
  c.input = v;
  c.word = s.word;
  c.steps = std::move(s.steps);
  c.final_vector = s.v;
  c.unit = s.v[4];
  return c;
}

bool verify(const ReductionCertificate& c, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const HermGram& a = HermGram::hyp41();
  if (c.input.size() != 5 || norm(c.input, a) != 0) return fail("input is not null");
  EVec v = c.input;
  Word total;
  Int h = v[3].norm();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Step& s = c.steps[i];
    v = s.word.apply(v);
    total = s.word * total;
    Int hn = v[3].norm();
    if (hn != s.height_norm) return fail("step " + std::to_string(i) + ": recorded height is wrong");
    if (s.kind == StepKind::translate && hn != h) return fail("translation changed the height");
    if ((s.kind == StepKind::reflect || s.kind == StepKind::search) && !(hn < h))
      return fail("step " + std::to_string(i) + ": height did not decrease");
    h = hn;
  }
  if (!(total == c.word)) return fail("steps do not compose to the word");
  if (v != c.final_vector || c.word.apply(c.input) != c.final_vector) return fail("word does not reach the final vector");
  EVec target = rho();
  target[4] = c.unit;
  if (!c.unit.is_unit() || c.final_vector != target) return fail("final vector is not a unit multiple of rho");
  if (!preserves(c.word.matrix(), a)) return fail("word matrix is not an isometry");
  return true;
}

std::optional<Word> root_normal_form(const EVec& r) {
  const HermGram& a = HermGram::hyp41();
  if (r.size() != 5) throw MathError("root_normal_form: expected 5 coordinates");
  const Int n = norm(r, a);
  if (n != 1 && n != 2) return std::nullopt;

  State s{r, {}, {}};
  for (std::size_t round = 0; !s.v[3].is_zero(); ++round) {
    if (round > kMaxRounds) return std::nullopt;
    prepare(s);
    if (auto w = reducing_reflection(s.v)) {
      s.act(*w, StepKind::reflect);
    } else if (auto z = small_null_in_complement(s.v)) {
      // Carrying a null vector z ⊥ v to a multiple of ρ puts v at height 0.
      s.act(reduce_null(*z).word, StepKind::search);
    } else if (auto w2 = searched_reduction(s.v)) {
      s.act(*w2, StepKind::search);
    } else {
      return std::nullopt;
    }
  }
  // Height 0: v = (λ; 0, ν) with ⟨λ|λ⟩ = n, so λ has n unit entries.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < 3; ++i)
    if (!s.v[i].is_zero()) support.push_back(i);
  if (support.size() != static_cast<std::size_t>(n.get_si())) return std::nullopt;
  if (!s.v[4].is_zero()) {
    // T_{λ'} sends ν to ν − Σ conj(λ'_i)·λ_i when μ = 0.
    std::array<EisInt, 3> l;
    std::size_t i = support.front();
    l[i] = s.v[4].conj() * s.v[i];
    s.act(translation_word(TranslationParams(l, l[i].norm() % 2)), StepKind::translate);
  }
  const Word p10 = Word({{Gen::R2, 1}, {Gen::R1, 1}, {Gen::R3, 1}, {Gen::R2, 1},
                         {Gen::R4, 1}, {Gen::R3, 1}, {Gen::R5, 1}, {Gen::R4, 1}});  // e2 → e1, fixes e3
  const Word p21 = Word({{Gen::R4, 1}, {Gen::R5, 1}, {Gen::R3, 1}, {Gen::R4, 1},
                         {Gen::R6, 1}, {Gen::R3, 1}, {Gen::R7, 1}, {Gen::R6, 1}});  // e3 → e2, fixes e1
  auto has = [&](std::size_t i) { return std::find(support.begin(), support.end(), i) != support.end(); };
  if (n == 1) {
    if (has(2)) s.act(p10 * p21, StepKind::translate);
    else if (has(1)) s.act(p10, StepKind::translate);
  } else {
    if (!has(0)) s.act(p21 * p10, StepKind::translate);
    else if (!has(1)) s.act(p21, StepKind::translate);
  }
  // Fix the units with R1 (scales e1 by −ω) and R5 (scales e2).
  for (int c = 0; c < (n == 1 ? 1 : 2); ++c) {
    const EisInt u = s.v[static_cast<std::size_t>(c)];
    int k = unit_index(u);
    if (k < 0) return std::nullopt;
    s.act(Word::letter(c == 0 ? Gen::R1 : Gen::R5, 6 - k), StepKind::translate);
  }
  EVec target = roots()[0];
  if (n == 2) target[1] = EisInt(1L);
  if (s.v != target || s.word.apply(r) != target) return std::nullopt;
  return s.word;
}

Transport orbit_transport(const EVec& x, const EVec& y, std::size_t budget) {
  const HermGram& a = HermGram::hyp41();
  const Int n = norm(x, a);
  if (n != norm(y, a)) throw MathError("orbit_transport: norms differ");
  Transport t;
  auto done = [&](const Word& w, std::string method) {
    if (w.apply(x) != y) return false;
    t.word = w;
    t.method = std::move(method);
    return true;
  };
  if (n == 0 && is_primitive(x) && is_primitive(y)) {
    ReductionCertificate cx = reduce_null(x), cy = reduce_null(y);
    // Bridge u_x·ρ to u_y·ρ with the unit word for u_y/u_x.
    int k = (unit_index(cy.unit) - unit_index(cx.unit) + 6) % 6;
    if (done(cy.word.inverse() * unit_word(k) * cx.word, "null")) return t;
  }
  if (n == 1 || n == 2) {
    auto wx = root_normal_form(x), wy = root_normal_form(y);
    if (wx && wy && done(wy->inverse() * *wx, "root")) return t;
  }
  // Bidirectional breadth-first search over single reflection letters.
  auto key = [](const EVec& v) {
    std::string s;
    for (const auto& c : v) s += c.str() + ",";
    return s;
  };
  std::map<std::string, Word> from_x, from_y;
  std::deque<std::pair<EVec, Word>> qx, qy;
  from_x[key(x)] = Word();
  from_y[key(y)] = Word();
  qx.emplace_back(x, Word());
  qy.emplace_back(y, Word());
  auto expand = [&](std::deque<std::pair<EVec, Word>>& q, std::map<std::string, Word>& seen,
                    const std::map<std::string, Word>& other, bool forward) -> bool {
    std::size_t layer = q.size();
    for (std::size_t i = 0; i < layer && seen.size() < budget; ++i) {
      auto [v, w] = q.front();
      q.pop_front();
      for (int g = 1; g <= kReflections; ++g)
        for (int e = 1; e < 6; ++e) {
          Word w2 = Word::letter(reflection_gen(g), e) * w;
          EVec u = Word::letter(reflection_gen(g), e).apply(v);
          std::string k = key(u);
          if (seen.count(k)) continue;
          seen[k] = w2;
          ++t.explored;
          if (auto it = other.find(k); it != other.end()) {
            Word total = forward ? it->second.inverse() * w2 : w2.inverse() * it->second;
            if (done(total, "search")) return true;
          }
          q.emplace_back(u, w2);
        }
    }
    return false;
  };
  if (x == y && done(Word(), "search")) return t;
  while ((!qx.empty() || !qy.empty()) && (from_x.size() < budget || from_y.size() < budget)) {
    if (!qx.empty() && from_x.size() < budget && expand(qx, from_x, from_y, true)) return t;
    if (!qy.empty() && from_y.size() < budget && expand(qy, from_y, from_x, false)) return t;
    if ((qx.empty() || from_x.size() >= budget) && (qy.empty() || from_y.size() >= budget)) break;
  }
  t.method = "search";
  return t;
}

// ---- torsion ----------------------------------------------------------------

TorsionReport torsion_of(const Isometry& g) {
  TorsionReport r;
  r.element = g.matrix();
  const std::size_t dim = r.element.rows();
  r.in_congruence_subgroup = f3::reduce(r.element) == f3::identity();
  EMat p = r.element;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_identity()) {
      r.order = k;
      break;
    }
    p = p * r.element;
  }
  const EisInt eig[3] = {EisInt(1L), EisInt::omega(), EisInt::omega_bar()};
  std::vector<EVec> cols;
  for (int i = 0; i < 3; ++i) {
    auto ker = kernel(r.element - EMat::identity(dim).scaled(eig[i]));
    r.eigen_ranks[static_cast<std::size_t>(i)] = ker.size();
    cols.insert(cols.end(), ker.begin(), ker.end());
  }
  r.splits = cols.size() == dim && determinant(EMat::from_columns(cols)).is_unit();
  return r;
}

TorsionReport torsion_check(const std::vector<EVec>& rs, const HermGram& a) {
  if (rs.size() > 4) throw MathError("torsion_check: at most four roots");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (norm(rs[i], a) != 1) throw MathError("torsion_check: roots must have norm 1");
    for (std::size_t j = i + 1; j < rs.size(); ++j)
      if (!inner(rs[i], rs[j], a).is_zero()) throw MathError("torsion_check: roots are not orthogonal");
  }
  Isometry g = Isometry::identity(a);
  for (const auto& r : rs) g = g * triflection(r, a);
  return torsion_of(g);
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  // Plain modular reduction keeps corpora identical across standard libraries.
  if (max_len == 0) return {};
  std::size_t len = 1 + static_cast<std::size_t>(rng() % max_len);
  std::vector<Token> t;
  for (std::size_t i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % 7);
    long e = 1 + static_cast<long>(rng() % 5);
    t.push_back({reflection_gen(g), e});
  }
  return Word(t);
}

}  // namespace eislat::gamma
