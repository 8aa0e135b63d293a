#pragma once

#include "fockcat/orders.hpp"

namespace fockcat {

struct ParameterPoint {
  int n = 0;
  std::vector<ParamExpr> t;
  std::vector<ParamExpr> s;

  static ParameterPoint make(std::vector<ParamExpr> t, std::vector<ParamExpr> s);
  // T_i = t_1 + ... + t_{i-1}, 1-based, valid for 1 <= i <= n+1.
  ParamExpr T(int i) const;
  // s of the block containing index i in 1..2n.
  const ParamExpr& block_s(int i) const { return s[(i + 1) / 2 - 1]; }
  // gamma_i for i in 1..2n.
  ParamExpr gamma(int i) const;
};

// Throws IntegerRank if some t_i is an integer.
void require_nonintegral_ranks(const ParameterPoint& p);

struct StratumData {
  std::vector<ParamExpr> gammas;
  std::vector<std::vector<int>> parts;  // 1-based indices, increasing; parts ordered by first index
  std::vector<SignedTypeFactor> factors;
  std::vector<AdmissibilityVerdict> verdicts;
  bool admissible = true;

  int arity() const { return static_cast<int>(gammas.size()); }
  // Position of index i (1-based) as (part, slot), both 0-based.
  std::pair<int, int> locate(int i) const;
  // Components of lambda belonging to part l.
  Multipartition restrict(const Multipartition& lambda, int l) const;
};

StratumData derive_stratum(const ParameterPoint& p);

bool inadmissible_triple_check(const ParameterPoint& p);

struct Eigenvalue {
  int index;  // slot 1..2n that produced it
  ParamExpr value;
};

std::vector<Eigenvalue> translation_eigenvalues(const Multipartition& lambda, const ParameterPoint& p);

}  // namespace fockcat
