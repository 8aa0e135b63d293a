#include "fockcat/multiplicity.hpp"

#include <algorithm>

namespace fockcat {

namespace {

struct Layout {
  bool lower;
  int kappa;
  // Per slot: is the slot in the leading (♯) group, its shifted σ, and whether its rows use
  // the covariant form (λ + σ', then σ') rather than the padded form (N, …, N, N - λ reversed).
  std::vector<char> sharp;
  std::vector<int> shifted_sigma;
  std::vector<char> cov_form;
};

Layout layout(const SignedTypeFactor& f) {
  auto v = classify_admissible(f.c);
  if (v.kind == AdmissibleKind::Inadmissible)
    fail(ErrorKind::InadmissibleStratum, "type " + f.str() + " is not admissible");
  Layout l{v.kind == AdmissibleKind::Lower, *v.swap_index, {}, {}, {}};
  for (int i = 0; i < f.arity(); ++i) {
    const bool sharp = i < l.kappa;
    l.sharp.push_back(sharp);
    l.shifted_sigma.push_back(sharp == l.lower ? f.sigma[i] : -f.sigma[i]);
    l.cov_form.push_back(sharp == l.lower);
  }
  return l;
}

void check_arity(const Multipartition& m, const SignedTypeFactor& f) {
  if (static_cast<int>(m.size()) != f.arity())
    fail(ErrorKind::ArityMismatch, "multipartition arity " + std::to_string(m.size()) + " does not match type arity " +
                                       std::to_string(f.arity()));
}

int strict_bound(int m, const Layout& l) {
  int ms = 0, mf = 0;
  for (std::size_t i = 0; i < l.sharp.size(); ++i) {
    int& slot = l.sharp[i] ? ms : mf;
    slot = std::max(slot, std::abs(l.shifted_sigma[i]));
  }
  return m + 1 + ms + mf;
}

}  // namespace

bool linkage_leq(const Multipartition& mu, const Multipartition& lambda, const StratumData& sd) {
  for (int l = 0; l < static_cast<int>(sd.parts.size()); ++l)
    if (!inv_dominance_leq(sd.restrict(mu, l), sd.restrict(lambda, l), sd.factors[l])) return false;
  return true;
}

int rank_bound(int m, const SignedTypeFactor& f) { return strict_bound(m, layout(f)); }

VirtualMultipartition virtual_multipartition(const Multipartition& lambda, const SignedTypeFactor& f, int N) {
  check_arity(lambda, f);
  const Layout l = layout(f);
  if (N <= strict_bound(total_size(lambda), l))
    fail(ErrorKind::RankTooSmall, "N = " + std::to_string(N) + " must exceed " +
                                      std::to_string(strict_bound(total_size(lambda), l)));
  VirtualMultipartition v;
  for (int i = 0; i < f.arity(); ++i) {
    const int size = l.shifted_sigma[i] + N;
    const Partition& part = lambda[i];
    std::vector<long> rows(size);
    for (int j = 1; j <= size; ++j) {
      if (l.cov_form[i])
        rows[j - 1] = static_cast<long>(part.row(j)) + l.shifted_sigma[i];
      else
        rows[j - 1] = static_cast<long>(N) - part.row(size - j + 1);
    }
    v.blocks.push_back(std::move(rows));
  }
  return v;
}

IntegralWeight virtual_realization(const Multipartition& lambda, const SignedTypeFactor& f, int N) {
  auto v = virtual_multipartition(lambda, f, N);
  IntegralWeight w;
  for (const auto& rows : v.blocks) {
    for (std::size_t j = 1; j <= rows.size(); ++j) w.entries.push_back(rows[j - 1] - static_cast<long>(j) + 1);
    w.blocks.push_back(static_cast<int>(rows.size()));
  }
  return w;
}

std::optional<Multipartition> devirtualize(const IntegralWeight& w, const SignedTypeFactor& f, int N) {
  const Layout l = layout(f);
  if (static_cast<int>(w.blocks.size()) != f.arity()) return std::nullopt;
  Multipartition out;
  std::size_t pos = 0;
  for (int i = 0; i < f.arity(); ++i) {
    const int size = w.blocks[i];
    if (size != l.shifted_sigma[i] + N) return std::nullopt;
    std::vector<long> rows(size);
    for (int j = 1; j <= size; ++j) rows[j - 1] = w.entries[pos + j - 1] + j - 1;
    pos += size;
    std::vector<int> parts;
    if (l.cov_form[i]) {
      for (long r : rows) {
        if (r < l.shifted_sigma[i]) return std::nullopt;
        if (r > l.shifted_sigma[i]) parts.push_back(static_cast<int>(r - l.shifted_sigma[i]));
      }
    } else {
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (*it > N) return std::nullopt;
        if (*it < N) parts.push_back(static_cast<int>(N - *it));
      }
    }
    if (!std::is_sorted(parts.rbegin(), parts.rend())) return std::nullopt;
    out.push_back(Partition(parts));
  }
  return out;
}

Integer factor_multiplicity(const Multipartition& lambda, const Multipartition& mu, const SignedTypeFactor& f, int N) {
  return parabolic_verma_multiplicity(virtual_realization(lambda, f, N), virtual_realization(mu, f, N));
}

namespace {

StratumData admissible_stratum(const Multipartition& lambda, const Multipartition& mu, const ParameterPoint& p) {
  StratumData sd = derive_stratum(p);
  for (const auto* m : {&lambda, &mu})
    if (static_cast<int>(m->size()) != sd.arity())
      fail(ErrorKind::ArityMismatch, "multipartition arity " + std::to_string(m->size()) + " does not match 2n = " +
                                         std::to_string(sd.arity()));
  if (!sd.admissible) fail(ErrorKind::InadmissibleStratum, "the stratum of this parameter point is not admissible");
  return sd;
}

int working_rank(const Multipartition& a, const Multipartition& b, const SignedTypeFactor& f,
                 const MultiplicityOptions& opt) {
  if (opt.rank_buffer < 0) fail(ErrorKind::InvalidArgument, "rank_buffer must be nonnegative");
  return rank_bound(std::max(total_size(a), total_size(b)), f) + opt.rank_buffer;
}

}  // namespace

Integer verma_multiplicity(const Multipartition& lambda, const Multipartition& mu, const ParameterPoint& p,
                           const MultiplicityOptions& opt) {
  const StratumData sd = admissible_stratum(lambda, mu, p);
  if (lambda == mu) return 1;
  if (!linkage_leq(mu, lambda, sd)) return 0;
  Integer product = 1;
  for (int l = 0; l < static_cast<int>(sd.parts.size()) && product != 0; ++l) {
    auto a = sd.restrict(lambda, l), b = sd.restrict(mu, l);
    if (a == b) continue;
    product *= factor_multiplicity(a, b, sd.factors[l], working_rank(a, b, sd.factors[l], opt));
  }
  return product;
}

std::vector<StabilizationRow> stabilization_report(const Multipartition& lambda, const Multipartition& mu,
                                                   const ParameterPoint& p, int extra,
                                                   const MultiplicityOptions& opt) {
  if (extra < 0) fail(ErrorKind::InvalidArgument, "extra must be nonnegative");
  const StratumData sd = admissible_stratum(lambda, mu, p);
  std::vector<StabilizationRow> rows;
  for (int l = 0; l < static_cast<int>(sd.parts.size()); ++l) {
    auto a = sd.restrict(lambda, l), b = sd.restrict(mu, l);
    const auto& f = sd.factors[l];
    const int N = working_rank(a, b, f, opt);
    StabilizationRow r{l + 1, N, factor_multiplicity(a, b, f, N), factor_multiplicity(a, b, f, N + extra),
                       virtual_realization(a, f, N), virtual_realization(b, f, N)};
    rows.push_back(std::move(r));
  }
  return rows;
}

bool check_stabilization(const Multipartition& lambda, const Multipartition& mu, const ParameterPoint& p, int extra,
                         const MultiplicityOptions& opt) {
  for (const auto& r : stabilization_report(lambda, mu, p, extra, opt))
    if (r.at_N != r.at_N_extra) return false;
  return true;
}

}  // namespace fockcat
