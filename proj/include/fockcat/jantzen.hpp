#pragma once

#include "fockcat/strata.hpp"

#include <array>

namespace fockcat {

// psi_{2i-1,p} = λ_{2i-1,p} + R_i - p and psi_{2i,q} = -λ_{2i,q} + R_{i+1} + q - 1,
// where R_i = (t + 1)/2 - T_i and t is the total rank.
struct RhoShiftedWeight {
  int n = 0;
  Multipartition lambda;
  std::vector<ParamExpr> R;  // R[i] for i = 1..n+1; R[0] unused

  ParamExpr psi(int i, int p) const;
};

RhoShiftedWeight rho_shifted(const Multipartition& lambda, const ParameterPoint& p);

// ζ = (i, j, p, q, k), all 1-based.
struct Zeta {
  int i, j, p, q, k;
};

struct Reflected {
  Multipartition label;
  int sign;
};

// Label and sign of (Θ(λ) - kα)_+ for the root attached to ζ; absent when the reflected
// rho-shifted weight has a repeated entry inside a Levi block. `extra_rank` enlarges the
// auxiliary block ranks beyond the minimum that makes the answer rank independent.
std::optional<Reflected> reflect_label(const Multipartition& lambda, const Zeta& z, int extra_rank = 0);

struct DetFactor {
  ParamExpr factor;
  Integer exponent;
  bool operator==(const DetFactor&) const = default;
};

struct FactorBounds {
  int p_max;
  int k_max;
};

FactorBounds shapovalov_bounds(const Multipartition& lambda, const Multipartition& mu);

// Factors of the isotypic Shapovalov determinant D(λ)_μ, merged by factor and sorted.
// `extra` inflates both enumeration bounds.
std::vector<DetFactor> shapovalov_factors(const Multipartition& lambda, const Multipartition& mu,
                                          const ParameterPoint& p, int extra = 0);

struct JantzenTerm {
  Multipartition label;
  int sign;
  int part;                 // 1-based index of Γ_ℓ
  std::array<int, 4> chi;   // (j1, j2, p, q)
  bool operator==(const JantzenTerm&) const = default;
};

struct JantzenSum {
  std::vector<JantzenTerm> terms;
  // False when some Γ_ℓ carries an infinite family (a contravariant index before a covariant
  // one in a later block). Terms are then listed for k up to the cutoff, which makes the
  // merged sum exact on labels with at most `exact_up_to` boxes.
  bool complete = true;
  int exact_up_to = 0;

  FormalCombination<Multipartition> merged() const;
};

inline constexpr int kDefaultLabelCap = 12;

JantzenSum jantzen_sum(const Multipartition& lambda, const ParameterPoint& p, int label_cap = kDefaultLabelCap);

// M(λ) is simple iff its Jantzen sum cancels formally. For infinite families the test is made
// on the exact window of labels with at most `label_cap` boxes.
bool is_verma_simple(const Multipartition& lambda, const ParameterPoint& p, int label_cap = kDefaultLabelCap);

}  // namespace fockcat
