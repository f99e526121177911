#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eislat/herm_lattice.hpp"

// The monodromy group Γ = ⟨R1, …, R7⟩ acting on the hyperbolic frame
// I_{3,1} ⊕ … with coordinates (λ1, λ2, λ3; μ, ν).
namespace eislat::gamma {

/// Letters of a word. R1..R7 are the hexflections; the rest are fixed words
/// in them that realize translations (see translation_generators()):
///   A0 = R2⁻¹R1, B0 = R1R2⁻¹, A1 = R4⁻¹R5, B1 = R5R4⁻¹, A2 = R6⁻¹R7,
///   B2 = R7R6⁻¹, C = A0·B0·A0⁻¹·B0⁻¹.
/// Translation letters commute with their own powers, so they carry arbitrary
/// integer exponents and a long translation costs one token.
enum class Gen : std::uint8_t { R1, R2, R3, R4, R5, R6, R7, A0, B0, A1, B1, A2, B2, C };

constexpr int kReflections = 7;

bool is_reflection(Gen g);
std::string gen_name(Gen g);
/// R_i for i = 1..7.
Gen reflection_gen(int i);

struct Token {
  Gen gen;
  long exp;  // 1..5 for reflections; any nonzero integer for translations
  friend bool operator==(const Token&, const Token&) = default;
};

/// A product of tokens written left to right; the rightmost acts first.
/// Adjacent equal letters are merged and trivial powers dropped.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Token>& tokens);
  static Word letter(Gen g, long exp = 1);

  const std::vector<Token>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  std::size_t size() const { return tokens_.size(); }

  Word inverse() const;
  Word pow(long k) const;
  /// x * y acts by y first.
  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

  /// Rewrites translation letters into R-letters. Throws MathError when the
  /// result would exceed `max_tokens`.
  Word expanded(std::size_t max_tokens = 1u << 20) const;
  std::size_t reflection_count() const;

  EVec apply(EVec v) const;
  EMat matrix() const;
  Isometry isometry() const;

  /// "R2^5 R1 C^-3 ..."; the empty word renders as "1".
  std::string str() const;

 private:
  void push(const Token& t);
  std::vector<Token> tokens_;
};

/// r1..r7 in the hyperbolic frame (index 0 is r1).
const std::array<EVec, 7>& roots();
/// The hexflection R_i, i = 1..7.
const Isometry& generator(int i);
EMat letter_matrix(Gen g, long exp);

/// Edges of the affine Ẽ6 diagram: 1-2, 2-3, 3-4, 4-5, 3-6, 6-7.
bool diagram_adjacent(int i, int j);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// For every pair i < j: RiRjRi = RjRiRj when adjacent, RiRj = RjRi otherwise,
/// plus the matching Gram entry |h(ri, rj)| ∈ {1, 0}.
std::vector<Check> verify_braid_table();
std::vector<Check> verify_named_identities();

struct NamedTranslation {
  Gen gen;
  TranslationParams params;
};
/// A0..C with the translation each one realizes; together they generate all
/// translations of the frame.
const std::vector<NamedTranslation>& translation_generators();
/// A word realizing T_{λ,k}, built from the letters above.
Word translation_word(const TranslationParams& p);

/// F = R3·T_{0,−θ}; acts on (μ, ν) by [[0, ω̄], [ω̄, 0]].
Word f_word();
/// A word equal to the scalar ω on the whole lattice: F²·R1⁴R5⁴R7⁴.
Word scalar_omega_word();
/// Word carrying r3 to a unit multiple of r7: R6·R7·R3·R6.
Word escape_word();
/// Words U_k with U_k(ρ) = (−ω)^k·ρ, k = 0..5.
const Word& unit_word(int k);

enum class StepKind { translate, reflect, escape, search };
std::string step_name(StepKind k);

struct Step {
  StepKind kind;
  Word word;
  Int height_norm;  // norm of the height after the step
};

/// Carries a primitive null vector to a unit multiple of ρ.
struct ReductionCertificate {
  EVec input;
  Word word;
  std::vector<Step> steps;
  EVec final_vector;
  EisInt unit;

  /// Norm of the height at the start and after each reflection step.
  std::vector<Int> heights() const;
  std::size_t escapes() const;
};

/// The reduction loop: translate so 3·norm(vi) ≤ norm(H), then reflect in a
/// root (0, 0, 0; 1, nθ − ω) that strictly shrinks the height. When no such
/// root exists every vi lies on a Voronoi vertex; the other tied translates
/// are tried first (`tie_breaking`). Failing that, v is orthogonal to one of
/// the roots, which is moved to r3, and the escape word puts v into r7⊥ where
/// the loop continues. Escapes may raise the height.
/// Throws MathError for non-null or imprimitive input.
ReductionCertificate reduce_null(const EVec& v, bool tie_breaking = true);

/// Re-applies the word literally and checks every stated property.
bool verify(const ReductionCertificate& c, std::string* why = nullptr);

/// W with W(r) equal to (1, 0, 0; 0, 0) for norm 1 or (1, 1, 0; 0, 0) for
/// norm 2. The height is lowered by the same reflections as in reduce_null;
/// where none helps, a small null vector z ⊥ r is carried to ρ, which leaves r
/// at height 0. nullopt when both fail.
std::optional<Word> root_normal_form(const EVec& r);

struct Transport {
  std::optional<Word> word;
  std::string method;  // "null", "root", "search"
  std::size_t explored = 0;
};

/// A word carrying x to y. Null vectors go through ρ, roots through their
/// normal form; anything else (or a failure there) falls back to a
/// bidirectional search over generator words visiting at most `budget`
/// vectors per side. An empty result means "not found within budget".
Transport orbit_transport(const EVec& x, const EVec& y, std::size_t budget = 20000);

struct TorsionReport {
  bool in_congruence_subgroup = false;
  int order = 0;
  /// Ranks of the eigenlattices for 1, ω, ω̄.
  std::array<std::size_t, 3> eigen_ranks{};
  bool splits = false;
  EMat element;
};

/// The product of the triflections (ζ = ω) in pairwise orthogonal short roots.
TorsionReport torsion_check(const std::vector<EVec>& roots, const HermGram& a);
/// The same analysis for an arbitrary isometry of finite order.
TorsionReport torsion_of(const Isometry& g);

/// Uniform length in [1, max_len], letters R1..R7 with exponents 1..5.
Word random_word(std::mt19937_64& rng, std::size_t max_len);

}  // namespace eislat::gamma
