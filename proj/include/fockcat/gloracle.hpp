#pragma once

#include "fockcat/core.hpp"

#include <map>
#include <vector>

// Finite-rank oracle for gl_M with a block Levi: Shapovalov Gram matrices on parabolic Verma
// modules computed by commutator straightening, and the classical equivariant Jantzen product.
// The highest weight is λ + s, with λ an explicit integer vector and one symbol s_b per block.
namespace fockcat::gl {

using Weight = std::vector<int>;

// Polynomial in s_1..s_n with rational coefficients.
class Poly {
 public:
  using Exponents = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);  // 0-based

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& r);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Rational eval(const std::vector<Rational>& point) const;
  // Replaces variable i by q.
  Poly substitute(int i, const Poly& q) const;
  // Quotient by (x_i - r) when r does not involve x_i and the division is exact.
  std::optional<Poly> divide_linear(int i, const Poly& r) const;

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

Poly determinant(const std::vector<std::vector<Poly>>& m, int nvars);

struct Setup {
  int M = 0;
  std::vector<int> blocks;  // composition of M
  Weight lambda;            // weakly decreasing inside each block

  // M <= 12; PBW and Gram computations need M <= 4.
  static Setup make(std::vector<int> blocks, Weight lambda);
  int nblocks() const { return static_cast<int>(blocks.size()); }
  int block_of(int a) const;  // 0-based coordinate -> 0-based block
  // Height of λ - η counted in block-level simple roots; nullopt unless that is a nonnegative
  // combination with equal totals.
  std::optional<int> degree_of(const Weight& eta) const;
};

// A negative root vector E_ab with a > b, 0-based.
struct Root {
  int a, b;
  auto operator<=>(const Root&) const = default;
};
using PBWMonomial = std::vector<Root>;  // sorted

struct WeightPiece {
  Weight weight;
  int degree;
  // Representatives of a basis of this weight space of the parabolic Verma module.
  std::vector<PBWMonomial> basis;
};

// Weight spaces of the parabolic Verma module M(λ + s) down to the given degree.
std::vector<WeightPiece> pbw_basis(const Setup& st, int degree);

// Gram matrix of the Shapovalov form on the η-weight space.
std::vector<std::vector<Poly>> weight_gram(const Setup& st, const Weight& eta);
// Gram matrix on the Levi-highest vectors of weight μ, i.e. the μ-isotypic multiplicity space.
std::vector<std::vector<Poly>> isotypic_gram(const Setup& st, const Weight& mu);
Poly gram_determinant(const Setup& st, const Weight& mu);

// A factor s_I - s_J + c (I < J) with its exponent.
struct LinearFactor {
  ParamExpr factor;
  Integer exponent;
  bool operator==(const LinearFactor&) const = default;
};

struct Factorization {
  Rational scalar;
  std::vector<LinearFactor> factors;  // sorted by factor
  Poly remainder;                     // constant 1 when fully split
  bool complete() const { return remainder.is_constant(); }
};

// Splits off every factor s_I - s_J + c with |c| <= bound.
Factorization factor_linear(const Poly& p, int bound);

// Levi-dominant μ of degree 1..degree whose μ-isotypic part is nonzero, with that multiplicity.
std::vector<std::pair<Weight, Integer>> isotypic_labels(const Setup& st, int degree);

// Multiplicity of X(μ) in the parabolic Verma with highest weight ϑ (integral parts only).
Integer parabolic_isotypic(const Setup& st, const Weight& theta, const Weight& mu);

// Σ over non-Levi positive roots α and k >= 1 of the factor (Θ + ρ, α∨) - k with exponent
// sgn · r((Θ - kα)_+, μ); merged and sorted.
std::vector<LinearFactor> classical_jantzen(const Setup& st, const Weight& mu);

// Factors of the Gram determinant, split with a bound large enough for the given μ.
Factorization gram_factors(const Setup& st, const Weight& mu);

std::string weight_str(const Weight& w);
Weight parse_weight(std::string_view text);

}  // namespace fockcat::gl
