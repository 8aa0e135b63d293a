#include "fockcat/isotypic.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace fockcat {

namespace {

// Read-mostly memo: concurrent lookups, serialized insertion.
template <class K, class V>
class Memo {
 public:
  template <class F>
  V get(const K& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, V> map_;
};

// Counts LR tableaux of shape nu/lambda with content mu: rows filled top to bottom,
// each row right to left, so the reading word is built in order.
long count_lr_tableaux(const Partition& nu, const Partition& lambda, const Partition& mu) {
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int r = 1; r <= nu.length(); ++r)
    for (int c = nu.row(r); c > lambda.row(r); --c) cells.push_back({r, c});
  std::map<std::pair<int, int>, int> filled;
  std::vector<int> count(mu.length() + 2, 0);
  long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[k];
    int hi = mu.length();
    if (auto it = filled.find({r, c + 1}); it != filled.end()) hi = std::min(hi, it->second);
    int lo = 1;
    if (auto it = filled.find({r - 1, c}); it != filled.end()) lo = it->second + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu.row(v)) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      filled[{r, c}] = v;
      rec(k + 1);
      filled.erase({r, c});
      --count[v];
    }
  };
  rec(0);
  return total;
}

Memo<std::tuple<Partition, Partition, Partition>, Integer>& lr_memo() {
  static Memo<std::tuple<Partition, Partition, Partition>, Integer> m;
  return m;
}

void add_to(BipartitionCombination& acc, const Bipartition& b, const Integer& c) {
  if (c == 0) return;
  auto& slot = acc[b];
  slot += c;
  if (slot == 0) acc.erase(b);
}

std::vector<Partition> partitions_containing(const Partition& inner, int size) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(size))
    if (p.contains(inner)) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer, int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  for (auto& p : partitions_of(size))
    if (outer.contains(p)) out.push_back(std::move(p));
  return out;
}

using FactorList = std::vector<std::pair<Partition, int>>;

Memo<std::pair<Bipartition, FactorList>, BipartitionCombination>& block_memo() {
  static Memo<std::pair<Bipartition, FactorList>, BipartitionCombination> m;
  return m;
}

// Decomposition of (⊗ S^{π}(V or V*)) ⊗ X(start).
BipartitionCombination apply_factors(const Bipartition& start, const FactorList& factors) {
  return block_memo().get({start, factors}, [&] {
    BipartitionCombination cur{{start, Integer(1)}};
    for (const auto& [pi, dir] : factors) {
      BipartitionCombination next;
      for (const auto& [b, c] : cur)
        for (const auto& [b2, c2] : schur_tensor(pi, dir == 0 ? TensorDirection::V : TensorDirection::Vdual, b))
          add_to(next, b2, c * c2);
      cur = std::move(next);
    }
    return cur;
  });
}

struct Pair {
  int i, j;  // block i > block j, 1-based
};

std::vector<Pair> root_pairs(int n) {
  std::vector<Pair> out;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.push_back({i, j});
  return out;
}

// All m_{ij} >= 0 with sum m_{ij}(i - j) <= max_height (== when exact), optionally with the
// block constraint against d.
void for_each_config(int n, int max_height, const std::vector<int>* d,
                     const std::function<void(const std::vector<int>&)>& visit) {
  auto pairs = root_pairs(n);
  std::vector<int> m(pairs.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == pairs.size()) {
      if (d) {
        if (left != 0) return;
        std::vector<int> got(n, 0);
        for (std::size_t q = 0; q < pairs.size(); ++q) {
          got[pairs[q].i - 1] += m[q];
          got[pairs[q].j - 1] -= m[q];
        }
        if (got != *d) return;
      }
      visit(m);
      return;
    }
    const int w = pairs[k].i - pairs[k].j;
    for (int v = 0; v * w <= left; ++v) {
      m[k] = v;
      rec(k + 1, left - v * w);
    }
    m[k] = 0;
  };
  rec(0, max_height);
}

// For a fixed configuration, visits every choice of partitions π_{ij} with |π_{ij}| = m_{ij}
// together with the per-block factor lists.
void for_each_pi_choice(int n, const std::vector<int>& m,
                        const std::function<void(const std::vector<FactorList>&)>& visit) {
  auto pairs = root_pairs(n);
  std::vector<std::vector<Partition>> pools;
  for (int v : m) pools.push_back(partitions_of(v));
  std::vector<const Partition*> pick(pairs.size(), nullptr);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pairs.size()) {
      std::vector<FactorList> per_block(n);
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        if (m[q] == 0) continue;
        per_block[pairs[q].i - 1].push_back({*pick[q], 0});
        per_block[pairs[q].j - 1].push_back({*pick[q], 1});
      }
      visit(per_block);
      return;
    }
    for (const auto& p : pools[k]) {
      pick[k] = &p;
      rec(k + 1);
    }
  };
  rec(0);
}

Bipartition block_of(const Multipartition& m, int k) { return {m[2 * k], m[2 * k + 1]}; }

void check_arity(const Multipartition& m, int n) {
  if (static_cast<int>(m.size()) != 2 * n) fail(ErrorKind::ArityMismatch, "multipartition arity must be 2n");
}

}  // namespace

std::string Bipartition::str() const { return "(" + cov.str() + "," + contra.str() + ")"; }

Integer lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  if (lambda.empty()) return nu == mu ? 1 : 0;
  return lr_memo().get({nu, lambda, mu}, [&] { return Integer(count_lr_tableaux(nu, lambda, mu)); });
}

std::vector<Bipartition> tensor_with_V(const Bipartition& bp, TensorDirection dir) {
  std::vector<Bipartition> out;
  const bool cov_side = dir == TensorDirection::V;
  const Partition& grow = cov_side ? bp.cov : bp.contra;
  const Partition& shrink = cov_side ? bp.contra : bp.cov;
  for (const auto& b : addable_boxes(grow)) {
    Bipartition x = bp;
    (cov_side ? x.cov : x.contra) = grow.add_box(b.row);
    out.push_back(x);
  }
  for (const auto& b : removable_boxes(shrink)) {
    Bipartition x = bp;
    (cov_side ? x.contra : x.cov) = shrink.remove_box(b.row);
    out.push_back(x);
  }
  return out;
}

BipartitionCombination schur_tensor(const Partition& pi, TensorDirection dir, const Bipartition& bp) {
  // S^π(V) ⊗ X(α,β) = Σ c^π_{ζρ} c^{α'}_{αρ} c^{β}_{β'ζ} X(α',β'): ρ grows the covariant
  // side, ζ cancels against the contravariant side. V* swaps the two roles.
  const bool cov_side = dir == TensorDirection::V;
  const Partition& grow = cov_side ? bp.cov : bp.contra;
  const Partition& shrink = cov_side ? bp.contra : bp.cov;
  BipartitionCombination out;
  const int n = pi.size();
  for (int r = 0; r <= n; ++r) {
    for (const auto& rho : partitions_of(r)) {
      if (!pi.contains(rho)) continue;
      for (const auto& zeta : partitions_inside(pi, n - r)) {
        Integer c1 = lr_coefficient(pi, zeta, rho);
        if (c1 == 0) continue;
        auto shrunk = partitions_inside(shrink, shrink.size() - zeta.size());
        if (shrunk.empty()) continue;
        for (const auto& g : partitions_containing(grow, grow.size() + r)) {
          Integer c2 = lr_coefficient(g, grow, rho);
          if (c2 == 0) continue;
          for (const auto& s : shrunk) {
            Integer c3 = lr_coefficient(shrink, s, zeta);
            if (c3 == 0) continue;
            add_to(out, cov_side ? Bipartition{g, s} : Bipartition{s, g}, c1 * c2 * c3);
          }
        }
      }
    }
  }
  return out;
}

std::vector<int> block_displacement(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.size() != mu.size() || lambda.size() % 2 != 0) fail(ErrorKind::ArityMismatch, "arity mismatch");
  std::vector<int> d;
  for (std::size_t k = 0; k < lambda.size() / 2; ++k)
    d.push_back((mu[2 * k].size() - mu[2 * k + 1].size()) - (lambda[2 * k].size() - lambda[2 * k + 1].size()));
  return d;
}

std::optional<int> displacement_height(const std::vector<int>& d) {
  // ω(λ) − ω(μ) = −d must be Σ c_k (e_k − e_{k+1}) with c_k = −(d_1 + ... + d_k) ≥ 0.
  int prefix = 0, height = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    prefix -= d[k];
    if (k + 1 == d.size()) {
      if (prefix != 0) return std::nullopt;
    } else {
      if (prefix < 0) return std::nullopt;
      height += prefix;
    }
  }
  return height;
}

Integer verma_isotypic(const Multipartition& lambda, const Multipartition& mu, int n) {
  check_arity(lambda, n);
  check_arity(mu, n);
  auto d = block_displacement(lambda, mu);
  auto h = displacement_height(d);
  if (!h) return 0;
  Integer total = 0;
  for_each_config(n, *h, &d, [&](const std::vector<int>& m) {
    for_each_pi_choice(n, m, [&](const std::vector<FactorList>& per_block) {
      Integer prod = 1;
      for (int k = 0; k < n && prod != 0; ++k) {
        auto dist = apply_factors(block_of(lambda, k), per_block[k]);
        auto it = dist.find(block_of(mu, k));
        prod *= it == dist.end() ? Integer(0) : it->second;
      }
      total += prod;
    });
  });
  return total;
}

FormalCombination<Multipartition> verma_character_truncated(const Multipartition& lambda, int depth, int n) {
  check_arity(lambda, n);
  if (depth < 0) fail(ErrorKind::InvalidArgument, "depth must be nonnegative");
  FormalCombination<Multipartition> out;
  for_each_config(n, depth, nullptr, [&](const std::vector<int>& m) {
    for_each_pi_choice(n, m, [&](const std::vector<FactorList>& per_block) {
      std::vector<BipartitionCombination> dists;
      for (int k = 0; k < n; ++k) dists.push_back(apply_factors(block_of(lambda, k), per_block[k]));
      Multipartition cur(2 * n);
      std::function<void(int, const Integer&)> rec = [&](int k, const Integer& c) {
        if (k == n) {
          out.add(cur, c);
          return;
        }
        for (const auto& [b, x] : dists[k]) {
          cur[2 * k] = b.cov;
          cur[2 * k + 1] = b.contra;
          rec(k + 1, c * x);
        }
      };
      rec(0, 1);
    });
  });
  return out;
}

}  // namespace fockcat
