#include "fockcat/strata.hpp"

namespace fockcat {

ParameterPoint ParameterPoint::make(std::vector<ParamExpr> t, std::vector<ParamExpr> s) {
  if (t.empty()) fail(ErrorKind::InvalidArgument, "need at least one block");
  if (t.size() != s.size()) fail(ErrorKind::ArityMismatch, "t and s must have the same length");
  ParameterPoint p;
  p.n = static_cast<int>(t.size());
  p.t = std::move(t);
  p.s = std::move(s);
  return p;
}

ParamExpr ParameterPoint::T(int i) const {
  ParamExpr acc;
  for (int k = 1; k < i; ++k) acc += t[k - 1];
  return acc;
}

ParamExpr ParameterPoint::gamma(int i) const {
  const int block = (i + 1) / 2;
  return s[block - 1] - T(i % 2 == 1 ? block : block + 1);
}

void require_nonintegral_ranks(const ParameterPoint& p) {
  for (int i = 0; i < p.n; ++i)
    if (expr_is_integer(p.t[i]))
      fail(ErrorKind::IntegerRank, "t" + std::to_string(i + 1) + " = " + p.t[i].str() + " is an integer");
}

std::pair<int, int> StratumData::locate(int i) const {
  for (int l = 0; l < static_cast<int>(parts.size()); ++l)
    for (int k = 0; k < static_cast<int>(parts[l].size()); ++k)
      if (parts[l][k] == i) return {l, k};
  fail(ErrorKind::InvalidArgument, "index outside the stratum");
}

Multipartition StratumData::restrict(const Multipartition& lambda, int l) const {
  if (static_cast<int>(lambda.size()) != arity())
    fail(ErrorKind::ArityMismatch, "multipartition arity " + std::to_string(lambda.size()) + " does not match 2n = " +
                                       std::to_string(arity()));
  Multipartition out;
  for (int i : parts[l]) out.push_back(lambda[i - 1]);
  return out;
}

StratumData derive_stratum(const ParameterPoint& p) {
  require_nonintegral_ranks(p);
  StratumData sd;
  for (int i = 1; i <= 2 * p.n; ++i) sd.gammas.push_back(p.gamma(i));
  std::vector<int> owner(2 * p.n, -1);
  for (int i = 1; i <= 2 * p.n; ++i) {
    if (owner[i - 1] >= 0) continue;
    owner[i - 1] = static_cast<int>(sd.parts.size());
    std::vector<int> part{i};
    SignedTypeFactor f{{0}, {i % 2 == 1 ? 0 : 1}};
    for (int j = i + 1; j <= 2 * p.n; ++j) {
      if (owner[j - 1] >= 0) continue;
      auto d = expr_is_integer(sd.gammas[j - 1] - sd.gammas[i - 1]);
      if (!d) continue;
      owner[j - 1] = owner[i - 1];
      part.push_back(j);
      f.sigma.push_back(static_cast<int>(d->get_si()));
      f.c.push_back(j % 2 == 1 ? 0 : 1);
    }
    auto v = classify_admissible(f.c);
    sd.admissible = sd.admissible && v.kind != AdmissibleKind::Inadmissible;
    sd.parts.push_back(std::move(part));
    sd.factors.push_back(std::move(f));
    sd.verdicts.push_back(v);
  }
  return sd;
}

bool inadmissible_triple_check(const ParameterPoint& p) {
  require_nonintegral_ranks(p);
  // Hyperplane H_k(i,j): T_{tau(j)} - T_{tau(i)} + s_{b(i)} - s_{b(j)} = k for some integer k,
  // with b(i) the block of i and tau(i) the T-index attached to i.
  auto tau = [](int i) { return (i + 2) / 2; };
  auto on_some_hyperplane = [&](int i, int j) {
    ParamExpr e = p.T(tau(j)) - p.T(tau(i)) + p.block_s(i) - p.block_s(j);
    return expr_is_integer(e).has_value();
  };
  const int m = 2 * p.n;
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1 + 1; i2 <= m; ++i2) {
      if ((i1 - i2) % 2 == 0 || !on_some_hyperplane(i1, i2)) continue;
      for (int i3 = i2 + 1; i3 <= m; i3 += 2)
        if (on_some_hyperplane(i2, i3)) return true;
    }
  return false;
}

std::vector<Eigenvalue> translation_eigenvalues(const Multipartition& lambda, const ParameterPoint& p) {
  require_nonintegral_ranks(p);
  if (static_cast<int>(lambda.size()) != 2 * p.n) fail(ErrorKind::ArityMismatch, "multipartition arity must be 2n");
  std::vector<Eigenvalue> out;
  for (int i = 1; i <= p.n; ++i) {
    const ParamExpr g_odd = p.gamma(2 * i - 1), g_even = p.gamma(2 * i);
    for (const auto& b : addable_boxes(lambda[2 * i - 2])) out.push_back({2 * i - 1, g_odd + ParamExpr(b.content)});
    for (const auto& b : removable_boxes(lambda[2 * i - 1])) out.push_back({2 * i, g_even - ParamExpr(b.content)});
  }
  return out;
}

}  // namespace fockcat
