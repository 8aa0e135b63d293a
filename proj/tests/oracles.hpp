#pragma once

// Independent brute-force references shared by the unit tests and the acceptance suite.

#include "fockcat/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using fockcat::Integer;
using fockcat::LaurentPoly;
using Perm = std::vector<int>;

inline int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

// Bruhat order as the transitive closure of length-increasing transpositions.
inline std::map<Perm, std::vector<Perm>> bruhat_up_sets(int d) {
  std::vector<Perm> all;
  Perm p(d);
  std::iota(p.begin(), p.end(), 1);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::sort(all.begin(), all.end(), [](const Perm& a, const Perm& b) { return inversions(a) > inversions(b); });
  std::map<Perm, std::vector<Perm>> up;
  for (const auto& x : all) {
    std::vector<Perm> above{x};
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        Perm y = x;
        std::swap(y[i], y[j]);
        if (inversions(y) <= inversions(x)) continue;
        for (const auto& z : up[y]) above.push_back(z);
      }
    std::sort(above.begin(), above.end());
    above.erase(std::unique(above.begin(), above.end()), above.end());
    up[x] = std::move(above);
  }
  return up;
}

// Hecke algebra of S_d in the normalisation (H_s + v)(H_s - v^{-1}) = 0, elements as maps
// from permutations to Laurent polynomials in v.
using HeckeElt = std::map<Perm, LaurentPoly>;

inline void hecke_add(HeckeElt& a, const Perm& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = a[p];
  slot += c;
  if (slot.is_zero()) a.erase(p);
}

// a * H_s (s 1-based, acting on positions).
inline HeckeElt hecke_right(const HeckeElt& a, int s) {
  HeckeElt out;
  const LaurentPoly vinv_minus_v = LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(1, 1);
  for (const auto& [y, c] : a) {
    Perm ys = y;
    std::swap(ys[s - 1], ys[s]);
    if (y[s - 1] < y[s]) {
      hecke_add(out, ys, c);
    } else {
      hecke_add(out, ys, c);
      hecke_add(out, y, c * vinv_minus_v);
    }
  }
  return out;
}

// bar(H_w) = bar(H_{s_1}) ... bar(H_{s_k}) with bar(H_s) = H_s + v - v^{-1}.
inline HeckeElt bar_of_standard(const Perm& w) {
  const int d = static_cast<int>(w.size());
  Perm e(d);
  std::iota(e.begin(), e.end(), 1);
  // Reduced word of w read off by bubble-sorting from the right.
  std::vector<int> word;
  Perm cur = w;
  while (true) {
    int s = 0;
    for (int i = 1; i < d; ++i)
      if (cur[i - 1] > cur[i]) { s = i; break; }
    if (!s) break;
    std::swap(cur[s - 1], cur[s]);
    word.push_back(s);
  }
  std::reverse(word.begin(), word.end());
  HeckeElt acc{{e, LaurentPoly(1)}};
  const LaurentPoly shift = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
  for (int s : word) {
    HeckeElt next = hecke_right(acc, s);
    for (const auto& [y, c] : acc) hecke_add(next, y, c * shift);
    acc = std::move(next);
  }
  return acc;
}

// Self-dual element H_w + sum_{y<w} h_{y,w} H_y with h_{y,w} in vZ[v], solved from the bar matrix.
inline HeckeElt kl_basis_element(const Perm& w, std::map<Perm, HeckeElt>& bar_cache) {
  auto bar = [&](const Perm& y) -> const HeckeElt& {
    auto it = bar_cache.find(y);
    if (it == bar_cache.end()) it = bar_cache.emplace(y, bar_of_standard(y)).first;
    return it->second;
  };
  HeckeElt h{{w, LaurentPoly(1)}};
  HeckeElt acc;
  for (const auto& [z, r] : bar(w))
    if (z != w) hecke_add(acc, z, r);
  for (int len = inversions(w) - 1; len >= 0; --len) {
    std::vector<Perm> level;
    for (const auto& [z, r] : acc)
      if (inversions(z) == len) level.push_back(z);
    for (const auto& z : level) {
      LaurentPoly hz;
      for (const auto& [e, c] : acc.at(z).coeffs())
        if (e > 0) hz += LaurentPoly::monomial(c, e);
      if (hz.is_zero()) continue;
      h[z] = hz;
      for (const auto& [u, r] : bar(z))
        if (u != z) hecke_add(acc, u, hz.bar() * r);
    }
  }
  return h;
}

// P_{y,w}(q) from h_{y,w} = v^{l(w)-l(y)} P_{y,w}(v^{-2}).
inline LaurentPoly h_to_p(const LaurentPoly& h, int span) {
  LaurentPoly p;
  for (const auto& [e, c] : h.coeffs()) p += LaurentPoly::monomial(c, (span - e) / 2);
  return p;
}

}  // namespace oracle
