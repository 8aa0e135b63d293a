#include "fockcat/jantzen.hpp"

#include "fockcat/isotypic.hpp"

#include <algorithm>
#include <climits>

namespace fockcat {

namespace {

void check_arity(const Multipartition& m, int n) {
  if (static_cast<int>(m.size()) != 2 * n)
    fail(ErrorKind::ArityMismatch,
         "multipartition arity " + std::to_string(m.size()) + " does not match 2n = " + std::to_string(2 * n));
}

int block_of_index(int i) { return (i + 1) / 2; }

// Entries Θ_pos - pos of one Levi block of rank m, with the block's s dropped.
std::vector<long> local_entries(const Partition& cov, const Partition& contra, int m) {
  std::vector<long> v(m);
  for (int pos = 1; pos <= m; ++pos) {
    long theta = 0;
    if (pos <= cov.length()) theta = cov.row(pos);
    else if (pos > m - contra.length()) theta = -contra.row(m - pos + 1);
    v[pos - 1] = theta - pos;
  }
  return v;
}

// Sorts strictly decreasing; returns the sign of the sorting permutation, or 0 on a repeat.
int sort_block(std::vector<long>& v) {
  int inversions = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] < v[b]) ++inversions;
    }
  std::sort(v.begin(), v.end(), std::greater<>());
  return inversions % 2 == 0 ? 1 : -1;
}

std::pair<Partition, Partition> read_back(const std::vector<long>& v) {
  const int m = static_cast<int>(v.size());
  std::vector<int> cov, contra;
  for (int pos = 1; pos <= m; ++pos) {
    long theta = v[pos - 1] + pos;
    if (theta > 0) cov.push_back(static_cast<int>(theta));
  }
  for (int pos = m; pos >= 1; --pos) {
    long theta = v[pos - 1] + pos;
    if (theta < 0) contra.push_back(static_cast<int>(-theta));
  }
  return {Partition(cov), Partition(contra)};
}

int content_span(const Multipartition& a, const Multipartition& b) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto* m : {&a, &b})
    for (const auto& part : *m)
      for (const auto& box : part.boxes()) {
        lo = std::min(lo, box.content);
        hi = std::max(hi, box.content);
      }
  return lo > hi ? 0 : hi - lo;
}

}  // namespace

ParamExpr RhoShiftedWeight::psi(int i, int p) const {
  const int b = block_of_index(i);
  const int row = lambda[i - 1].row(p);
  if (i % 2 == 1) return ParamExpr(row - p) + R[b];
  return ParamExpr(-row + p - 1) + R[b + 1];
}

RhoShiftedWeight rho_shifted(const Multipartition& lambda, const ParameterPoint& p) {
  check_arity(lambda, p.n);
  RhoShiftedWeight w;
  w.n = p.n;
  w.lambda = lambda;
  const ParamExpr half_t1 = (p.T(p.n + 1) + ParamExpr(1)) * Rational(1, 2);
  w.R.resize(p.n + 2);
  for (int i = 1; i <= p.n + 1; ++i) w.R[i] = half_t1 - p.T(i);
  return w;
}

std::optional<Reflected> reflect_label(const Multipartition& lambda, const Zeta& z, int extra_rank) {
  if (lambda.size() % 2 != 0 || lambda.empty()) fail(ErrorKind::ArityMismatch, "multipartition arity must be even");
  const int n = static_cast<int>(lambda.size()) / 2;
  if (z.i < 1 || z.j < 1 || z.i > 2 * n || z.j > 2 * n || z.i >= z.j)
    fail(ErrorKind::InvalidArgument, "need 1 <= i < j <= 2n");
  if (z.p < 1 || z.q < 1 || z.k < 1) fail(ErrorKind::InvalidArgument, "p, q, k must be positive");
  const int I = block_of_index(z.i), J = block_of_index(z.j);

  auto rank = [&](int b) {
    return lambda[2 * b - 2].length() + lambda[2 * b - 1].length() + z.p + z.q + z.k + extra_rank;
  };
  auto position = [&](int index, int row, int m) { return index % 2 == 1 ? row : m - row + 1; };

  Multipartition out = lambda;
  int sign = 1;
  std::vector<int> touched{I};
  if (J != I) touched.push_back(J);
  std::map<int, std::vector<long>> blocks;
  for (int b : touched) blocks[b] = local_entries(lambda[2 * b - 2], lambda[2 * b - 1], rank(b));
  blocks[I][position(z.i, z.p, rank(I)) - 1] -= z.k;
  blocks[J][position(z.j, z.q, rank(J)) - 1] += z.k;
  for (auto& [b, v] : blocks) {
    int sg = sort_block(v);
    if (sg == 0) return std::nullopt;
    sign *= sg;
    auto [cov, contra] = read_back(v);
    out[2 * b - 2] = cov;
    out[2 * b - 1] = contra;
  }
  return Reflected{out, sign};
}

FactorBounds shapovalov_bounds(const Multipartition& lambda, const Multipartition& mu) {
  int max_row = 0, max_col = 0;
  for (const auto* m : {&lambda, &mu})
    for (const auto& part : *m) {
      max_row = std::max(max_row, part.row(1));
      max_col = std::max(max_col, part.length());
    }
  const int sizes = total_size(lambda) + total_size(mu);
  return {sizes + max_row + max_col + 2, content_span(lambda, mu) + sizes + 2};
}

std::vector<DetFactor> shapovalov_factors(const Multipartition& lambda, const Multipartition& mu,
                                          const ParameterPoint& p, int extra) {
  check_arity(lambda, p.n);
  check_arity(mu, p.n);
  if (!interpolated_dominance_leq(mu, lambda)) return {};
  const auto height = displacement_height(block_displacement(lambda, mu));
  if (!height) return {};
  const auto bounds = shapovalov_bounds(lambda, mu);
  const int P = bounds.p_max + extra, K = bounds.k_max + extra;
  const auto rho = rho_shifted(lambda, p);

  std::map<ParamExpr, Integer> merged;
  for (int i = 1; i <= 2 * p.n; ++i)
    for (int j = i + 1; j <= 2 * p.n; ++j) {
      const int I = block_of_index(i), J = block_of_index(j);
      if (I == J) continue;  // Levi roots do not enter
      const ParamExpr base = p.s[I - 1] - p.s[J - 1];
      for (int k = 1; k <= K && k * (J - I) <= *height; ++k)
        for (int a = 1; a <= P; ++a)
          for (int b = 1; b <= P; ++b) {
            auto refl = reflect_label(lambda, {i, j, a, b, k});
            if (!refl) continue;
            Integer r = verma_isotypic(refl->label, mu, p.n);
            if (r == 0) continue;
            ParamExpr f = rho.psi(i, a) - rho.psi(j, b) + base - ParamExpr(k);
            merged[f] += refl->sign * r;
          }
    }
  std::vector<DetFactor> out;
  for (auto& [f, e] : merged)
    if (e != 0) out.push_back({f, e});
  return out;
}

FormalCombination<Multipartition> JantzenSum::merged() const {
  FormalCombination<Multipartition> out;
  for (const auto& t : terms) out.add(t.label, t.sign);
  return out;
}

JantzenSum jantzen_sum(const Multipartition& lambda, const ParameterPoint& p, int label_cap) {
  const StratumData sd = derive_stratum(p);
  check_arity(lambda, p.n);
  const auto rho = rho_shifted(lambda, p);
  JantzenSum out;
  out.exact_up_to = INT_MAX;
  const int k_cut = label_cap + total_size(lambda);

  for (int l = 0; l < static_cast<int>(sd.parts.size()); ++l) {
    const auto& part = sd.parts[l];
    for (int j1 = 0; j1 < static_cast<int>(part.size()); ++j1)
      for (int j2 = j1 + 1; j2 < static_cast<int>(part.size()); ++j2) {
        const int i1 = part[j1], i2 = part[j2];
        const int I = block_of_index(i1), J = block_of_index(i2);
        if ((p.T(J) - p.T(I)).is_zero()) continue;
        const ParamExpr base = p.s[I - 1] - p.s[J - 1];
        auto delta = [&](int a, int b) -> long {
          auto d = expr_is_integer(rho.psi(i1, a) - rho.psi(i2, b) + base);
          if (!d) fail(ErrorKind::InvalidArgument, "non-integral delta inside a stratum class");
          return d->get_si();
        };
        auto emit = [&](int a, int b) {
          const long k = delta(a, b);
          if (k <= 0) return;
          auto refl = reflect_label(lambda, {i1, i2, a, b, static_cast<int>(k)});
          if (!refl) return;
          if (refl->label == lambda) fail(ErrorKind::InvalidArgument, "reflection returned the original label");
          out.terms.push_back({refl->label, refl->sign, l + 1, {j1 + 1, j2 + 1, a, b}});
        };
        const Partition& L1 = lambda[i1 - 1];
        const Partition& L2 = lambda[i2 - 1];
        // Outside these windows the moved entry always collides with an untouched one.
        if (i1 % 2 == 1) {
          for (int a = 1; a <= L1.length(); ++a) {
            const long kb = L1.row(a) - a + L1.length();
            if (i2 % 2 == 0) {
              for (int b = 1; b <= L2.length(); ++b) emit(a, b);
            } else {
              for (long b = 1; b <= kb - delta(a, 1) + 1; ++b) emit(a, static_cast<int>(b));
            }
          }
        } else if (i2 % 2 == 0) {
          for (int b = 1; b <= L2.length(); ++b) {
            const long kb = L2.row(b) - b + L2.length();
            for (long a = 1; a <= kb - delta(1, b) + 1; ++a) emit(static_cast<int>(a), b);
          }
        } else {
          // δ grows in both rows: an infinite family, cut at k <= k_cut.
          out.complete = false;
          out.exact_up_to = label_cap;
          const long d11 = delta(1, 1);
          for (long a = 1; d11 + (a - 1) <= k_cut; ++a)
            for (long b = 1; d11 + (a - 1) + (b - 1) <= k_cut; ++b) emit(static_cast<int>(a), static_cast<int>(b));
        }
      }
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const JantzenTerm& x, const JantzenTerm& y) {
    return std::tie(x.part, x.chi) < std::tie(y.part, y.chi);
  });
  return out;
}

bool is_verma_simple(const Multipartition& lambda, const ParameterPoint& p, int label_cap) {
  const auto sum = jantzen_sum(lambda, p, label_cap);
  const auto merged = sum.merged();
  for (const auto& [label, c] : merged.terms())
    if (sum.complete || total_size(label) <= sum.exact_up_to) return false;
  return true;
}

}  // namespace fockcat
