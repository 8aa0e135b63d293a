#include "fockcat/orders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fockcat {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad integer '" + item + "'");
    }
  }
  return out;
}

// Signed content profile of one slot: b -> contribution to the prefix sums.
void add_slot(std::map<int, int>& acc, const Partition& p, int sigma, int c) {
  for (const auto& box : p.boxes()) {
    if (c == 0)
      acc[box.content + sigma] += 1;
    else
      acc[sigma - box.content] -= 1;
  }
}

// a <= b pointwise on the union of supports; equality when `exact`.
bool profile_leq(const std::map<int, int>& a, const std::map<int, int>& b, bool exact) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    int va, vb;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      va = ia->second;
      vb = 0;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      va = 0;
      vb = ib->second;
      ++ib;
    } else {
      va = ia->second;
      vb = ib->second;
      ++ia;
      ++ib;
    }
    if (exact ? va != vb : va > vb) return false;
  }
  return true;
}

std::vector<std::map<int, int>> prefix_profiles(const Multipartition& m, const SignedTypeFactor& f) {
  std::vector<std::map<int, int>> out;
  std::map<int, int> acc;
  for (int i = 0; i < f.arity(); ++i) {
    add_slot(acc, m[i], f.sigma[i], f.c[i]);
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    out.push_back(acc);
  }
  return out;
}

void check_arity(const Multipartition& m, const SignedTypeFactor& f) {
  if (static_cast<int>(m.size()) != f.arity())
    fail(ErrorKind::ArityMismatch, "multipartition arity " + std::to_string(m.size()) + " does not match type arity " +
                                       std::to_string(f.arity()));
}

// Slot-by-slot enumeration. `caps[i]` bounds |mu_i|; `keep(N, profile)` prunes after slot N (1-based).
std::vector<Multipartition> enumerate_slots(const SignedTypeFactor& f, const std::vector<int>& caps,
                                            const std::function<bool(int, const std::map<int, int>&)>& keep) {
  std::vector<Multipartition> out;
  Multipartition cur;
  std::vector<std::vector<Partition>> pools;
  for (int cap : caps) pools.push_back(partitions_up_to(std::max(cap, 0)));
  std::function<void(int, const std::map<int, int>&)> rec = [&](int i, const std::map<int, int>& acc) {
    if (i == f.arity()) {
      out.push_back(cur);
      return;
    }
    for (const auto& p : pools[i]) {
      std::map<int, int> next = acc;
      add_slot(next, p, f.sigma[i], f.c[i]);
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      if (!keep(i + 1, next)) continue;
      cur.push_back(p);
      rec(i + 1, next);
      cur.pop_back();
    }
  };
  rec(0, {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string SignedTypeFactor::str() const {
  std::string s;
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

SignedTypeFactor SignedTypeFactor::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) fail(ErrorKind::Parse, "type must look like 'sigma;c'");
  SignedTypeFactor f{parse_int_list(text.substr(0, semi)), parse_int_list(text.substr(semi + 1))};
  if (f.sigma.empty() || f.sigma.size() != f.c.size())
    fail(ErrorKind::Parse, "type needs equally long nonempty sigma and c");
  for (int x : f.c)
    if (x != 0 && x != 1) fail(ErrorKind::Parse, "c entries must be 0 or 1");
  return f;
}

const char* admissible_kind_name(AdmissibleKind k) {
  switch (k) {
    case AdmissibleKind::Lower: return "lower";
    case AdmissibleKind::Upper: return "upper";
    case AdmissibleKind::Inadmissible: return "inadmissible";
  }
  return "?";
}

AdmissibilityVerdict classify_admissible(const std::vector<int>& c) {
  const int a = static_cast<int>(c.size());
  int zeros_prefix = 0;
  while (zeros_prefix < a && c[zeros_prefix] == 0) ++zeros_prefix;
  if (std::all_of(c.begin() + zeros_prefix, c.end(), [](int x) { return x == 1; }))
    return {AdmissibleKind::Lower, zeros_prefix};
  int ones_prefix = 0;
  while (ones_prefix < a && c[ones_prefix] == 1) ++ones_prefix;
  if (std::all_of(c.begin() + ones_prefix, c.end(), [](int x) { return x == 0; }))
    return {AdmissibleKind::Upper, ones_prefix};
  return {AdmissibleKind::Inadmissible, std::nullopt};
}

bool inv_dominance_leq(const Multipartition& lambda, const Multipartition& mu, const SignedTypeFactor& f) {
  check_arity(lambda, f);
  check_arity(mu, f);
  auto pl = prefix_profiles(lambda, f);
  auto pm = prefix_profiles(mu, f);
  for (int n = 0; n < f.arity(); ++n)
    if (!profile_leq(pl[n], pm[n], n + 1 == f.arity())) return false;
  return true;
}

bool in_restricted(const Multipartition& lambda, const SignedTypeFactor& f, int m1, int m2) {
  check_arity(lambda, f);
  auto v = classify_admissible(f.c);
  if (v.kind == AdmissibleKind::Inadmissible) fail(ErrorKind::InadmissibleStratum, "type is not admissible");
  int first = 0, second = 0;
  for (int i = 0; i < f.arity(); ++i) (i < *v.swap_index ? first : second) += lambda[i].size();
  return first <= m1 && second <= m2;
}

namespace {

std::vector<Multipartition> one_sided_set(const Multipartition& lambda, const SignedTypeFactor& f, int extra,
                                          bool below) {
  check_arity(lambda, f);
  auto v = classify_admissible(f.c);
  const bool ok = below ? v.kind == AdmissibleKind::Lower
                        : (v.kind == AdmissibleKind::Upper ||
                           std::all_of(f.c.begin(), f.c.end(), [&](int x) { return x == f.c[0]; }));
  if (!ok) fail(ErrorKind::InadmissibleStratum, below ? "down_set needs lower admissible c" : "up_set needs upper admissible c");
  // Summing the defining inequalities over b bounds the covariant and the contravariant
  // box totals by those of lambda; each slot is capped by its group total.
  int cov = 0, contra = 0;
  for (int i = 0; i < f.arity(); ++i) (f.c[i] == 0 ? cov : contra) += lambda[i].size();
  std::vector<int> caps;
  for (int i = 0; i < f.arity(); ++i) caps.push_back((f.c[i] == 0 ? cov : contra) + extra);
  auto target = prefix_profiles(lambda, f);
  auto res = enumerate_slots(f, caps, [&](int n, const std::map<int, int>& prof) {
    const bool last = n == f.arity();
    return below ? profile_leq(prof, target[n - 1], last) : profile_leq(target[n - 1], prof, last);
  });
  std::vector<Multipartition> out;
  for (auto& m : res) {
    int c0 = 0, c1 = 0;
    for (int i = 0; i < f.arity(); ++i) (f.c[i] == 0 ? c0 : c1) += m[i].size();
    if (c0 <= cov + extra && c1 <= contra + extra) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Multipartition> down_set(const Multipartition& lambda, const SignedTypeFactor& f, int extra) {
  return one_sided_set(lambda, f, extra, true);
}

std::vector<Multipartition> up_set(const Multipartition& lambda, const SignedTypeFactor& f, int extra) {
  return one_sided_set(lambda, f, extra, false);
}

std::vector<Multipartition> interval(const Multipartition& lambda, const Multipartition& mu,
                                     const SignedTypeFactor& f) {
  check_arity(lambda, f);
  check_arity(mu, f);
  if (!inv_dominance_leq(mu, lambda, f)) return {};
  // Signed size prefix sums of nu are squeezed between those of mu and lambda,
  // which bounds each slot.
  auto signed_prefix = [&](const Multipartition& m) {
    std::vector<int> z(f.arity() + 1, 0);
    for (int i = 0; i < f.arity(); ++i) z[i + 1] = z[i] + (f.c[i] == 0 ? 1 : -1) * m[i].size();
    return z;
  };
  auto zl = signed_prefix(lambda), zm = signed_prefix(mu);
  std::vector<int> caps;
  for (int n = 1; n <= f.arity(); ++n)
    caps.push_back(std::max(std::abs(zl[n] - zm[n - 1]), std::abs(zm[n] - zl[n - 1])));
  auto top = prefix_profiles(lambda, f);
  auto bottom = prefix_profiles(mu, f);
  return enumerate_slots(f, caps, [&](int n, const std::map<int, int>& prof) {
    const bool last = n == f.arity();
    return profile_leq(bottom[n - 1], prof, last) && profile_leq(prof, top[n - 1], last);
  });
}

bool interpolated_dominance_leq(const Multipartition& mu, const Multipartition& lambda, int extra_rank) {
  if (mu.size() != lambda.size()) fail(ErrorKind::ArityMismatch, "arity mismatch");
  if (mu.size() % 2 != 0 || mu.empty()) fail(ErrorKind::ArityMismatch, "interpolated dominance needs even arity");
  const int n = static_cast<int>(mu.size() / 2);
  int len = 0;
  for (int i = 0; i < n; ++i) {
    len = std::max(len, lambda[2 * i].length() + lambda[2 * i + 1].length());
    len = std::max(len, mu[2 * i].length() + mu[2 * i + 1].length());
  }
  const int N = len + 1 + extra_rank;
  auto phi = [&](const Multipartition& m) {
    std::vector<long> v;
    for (int i = 0; i < n; ++i) {
      const auto& a = m[2 * i];
      const auto& b = m[2 * i + 1];
      for (int r = 1; r <= N; ++r) {
        if (r <= a.length())
          v.push_back(a.row(r));
        else if (r > N - b.length())
          v.push_back(-b.row(N - r + 1));
        else
          v.push_back(0);
      }
    }
    return v;
  };
  auto pm = phi(mu), pl = phi(lambda);
  long sm = 0, sl = 0;
  for (std::size_t k = 0; k < pm.size(); ++k) {
    sm += pm[k];
    sl += pl[k];
    if (sm > sl) return false;
  }
  return sm == sl;
}

}  // namespace fockcat
