#include "fockcat/klengine.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

namespace fockcat {

// ---------------------------------------------------------------- permutations

Permutation parse_permutation(std::string_view text) {
  Permutation p;
  std::string s(text);
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        p.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad permutation entry '" + item + "'");
      }
    }
  } else {
    for (char ch : s) {
      if (ch < '1' || ch > '9') fail(ErrorKind::Parse, "bad permutation '" + s + "'");
      p.push_back(ch - '0');
    }
  }
  std::vector<int> seen(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]++)
      fail(ErrorKind::Parse, "'" + s + "' is not a permutation of 1..d");
  }
  if (p.empty()) fail(ErrorKind::Parse, "empty permutation");
  return p;
}

std::string permutation_str(const Permutation& p) {
  const bool compact = p.size() < 10;
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!compact && i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

ReflectionSet parse_reflection_set(std::string_view text, int d) {
  ReflectionSet j = 0;
  std::string s(text);
  if (s.empty()) return 0;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad reflection index '" + item + "'");
    }
    if (v < 1 || v >= d) fail(ErrorKind::Parse, "reflection index " + item + " outside 1.." + std::to_string(d - 1));
    j |= ReflectionSet(1) << (v - 1);
  }
  return j;
}

std::string reflection_set_str(ReflectionSet j) {
  std::string s;
  for (int i = 1; i <= 32; ++i)
    if (j >> (i - 1) & 1) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

Permutation identity_permutation(int d) {
  Permutation p(d);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

int perm_length(const Permutation& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Permutation right_mult(const Permutation& p, int s) {
  Permutation q = p;
  std::swap(q[s - 1], q[s]);
  return q;
}

Permutation left_mult(int s, const Permutation& p) {
  Permutation q = p;
  for (int& v : q) {
    if (v == s)
      v = s + 1;
    else if (v == s + 1)
      v = s;
  }
  return q;
}

bool has_right_descent(const Permutation& p, int s) { return p[s - 1] > p[s]; }

bool has_left_descent(const Permutation& p, int s) {
  // s*p is shorter iff the value s+1 sits left of the value s.
  for (int v : p) {
    if (v == s) return false;
    if (v == s + 1) return true;
  }
  return false;
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(d);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const Permutation& a, const Permutation& b) { return perm_length(a) < perm_length(b); });
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) fail(ErrorKind::ArityMismatch, "permutations of different sizes");
  std::vector<int> a, b;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), x[i]), x[i]);
    b.insert(std::upper_bound(b.begin(), b.end(), w[i]), w[i]);
    for (std::size_t k = 0; k <= i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- regular KL polynomials

namespace {

struct RegularTable {
  std::shared_mutex mu;
  std::map<std::pair<Permutation, Permutation>, LaurentPoly> memo;
  std::vector<Permutation> elems;
  std::vector<int> lengths;
};

RegularTable& regular_table(int d) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<RegularTable>> tables;
  std::lock_guard lock(guard);
  auto& t = tables[d];
  if (!t) {
    t = std::make_unique<RegularTable>();
    t->elems = all_permutations(d);
    for (const auto& p : t->elems) t->lengths.push_back(perm_length(p));
  }
  return *t;
}

LaurentPoly kl_rec(RegularTable& tab, const Permutation& x, const Permutation& w) {
  if (x == w) return LaurentPoly(1);
  if (!bruhat_leq(x, w)) return LaurentPoly();
  {
    std::shared_lock lock(tab.mu);
    auto it = tab.memo.find({x, w});
    if (it != tab.memo.end()) return it->second;
  }
  int s = 1;
  while (!has_right_descent(w, s)) ++s;
  const Permutation v = right_mult(w, s);
  const Permutation xs = right_mult(x, s);
  const int c = has_right_descent(x, s) ? 1 : 0;
  LaurentPoly res = LaurentPoly::monomial(1, 1 - c) * kl_rec(tab, xs, v) + LaurentPoly::monomial(1, c) * kl_rec(tab, x, v);
  const int lw = perm_length(w), lv = lw - 1;
  for (std::size_t k = 0; k < tab.elems.size(); ++k) {
    const int lz = tab.lengths[k];
    if (lz >= lv) break;
    if ((lv - lz) % 2 == 0) continue;
    const Permutation& z = tab.elems[k];
    if (!has_right_descent(z, s) || !bruhat_leq(x, z) || !bruhat_leq(z, v)) continue;
    Integer mu = kl_rec(tab, z, v).coeff((lv - lz - 1) / 2);
    if (mu == 0) continue;
    res -= LaurentPoly::monomial(mu, (lw - lz) / 2) * kl_rec(tab, x, z);
  }
  std::unique_lock lock(tab.mu);
  tab.memo.emplace(std::make_pair(x, w), res);
  return res;
}

}  // namespace

LaurentPoly kl_polynomial(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) fail(ErrorKind::ArityMismatch, "permutations of different sizes");
  KLKey key{static_cast<int>(x.size()), x, w, 0, 0};
  if (auto hit = kl_cache().find(key)) return *hit;
  LaurentPoly p = kl_rec(regular_table(key.d), x, w);
  kl_cache().insert(key, p);
  return p;
}

// ---------------------------------------------------------------- double cosets

Permutation min_double_coset_rep(const Permutation& p, ReflectionSet jl, ReflectionSet jr) {
  Permutation q = p;
  const int d = static_cast<int>(p.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 1; s < d; ++s) {
      if ((jl >> (s - 1) & 1) && has_left_descent(q, s)) {
        q = left_mult(s, q);
        changed = true;
      }
      if ((jr >> (s - 1) & 1) && has_right_descent(q, s)) {
        q = right_mult(q, s);
        changed = true;
      }
    }
  }
  return q;
}

Permutation longest_in_right_coset(const Permutation& p, ReflectionSet jr) {
  Permutation q = p;
  const int d = static_cast<int>(p.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 1; s < d; ++s)
      if ((jr >> (s - 1) & 1) && !has_right_descent(q, s)) {
        q = right_mult(q, s);
        changed = true;
      }
  }
  return q;
}

// ---------------------------------------------------------------- sign-induced module

namespace {

const LaurentPoly& v_minus_vinv() {
  static const LaurentPoly p = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
  return p;
}

using SparseVec = std::map<int, LaurentPoly>;

void axpy(SparseVec& acc, int idx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = acc[idx];
  slot += c;
  if (slot.is_zero()) acc.erase(idx);
}

LaurentPoly positive_part(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs())
    if (e > 0) out += LaurentPoly::monomial(c, e);
  return out;
}

std::size_t coset_count(int d, ReflectionSet jl) {
  // d! / |W_jl|
  double total = 1;
  for (int k = 2; k <= d; ++k) total *= k;
  int run = 1;
  for (int s = 1; s <= d; ++s) {
    if (s < d && (jl >> (s - 1) & 1)) {
      ++run;
    } else {
      for (int k = 2; k <= run; ++k) total /= k;
      run = 1;
    }
  }
  return static_cast<std::size_t>(total + 0.5);
}

// Basis m_y, y minimal in W_I y; H_s acts on the right, parabolic generators by -v.
class SignModule {
 public:
  SignModule(int d, ReflectionSet jl) : d_(d), jl_(jl) {
    if (coset_count(d, jl) > kMaxModuleRank)
      fail(ErrorKind::ScaleLimit, "parabolic module of rank " + std::to_string(coset_count(d, jl)) +
                                      " exceeds the engine limit " + std::to_string(kMaxModuleRank));
    std::vector<Permutation> frontier{identity_permutation(d)};
    index_[frontier[0]] = 0;
    elems_.push_back(frontier[0]);
    lengths_.push_back(0);
    for (int len = 1; !frontier.empty(); ++len) {
      std::vector<Permutation> next;
      for (const auto& y : frontier)
        for (int s = 1; s < d; ++s) {
          if (has_right_descent(y, s)) continue;
          Permutation ys = right_mult(y, s);
          if (!minimal(ys) || index_.count(ys)) continue;
          index_[ys] = static_cast<int>(elems_.size());
          elems_.push_back(ys);
          lengths_.push_back(len);
          next.push_back(std::move(ys));
        }
      frontier = std::move(next);
    }
    psi_.resize(elems_.size());
    psi_[0][0] = LaurentPoly(1);
    for (std::size_t k = 1; k < elems_.size(); ++k) {
      const Permutation& y = elems_[k];
      int s = 1;
      while (!has_right_descent(y, s)) ++s;
      // psi(m_y) = psi(m_{ys}) * (H_s + v - v^{-1})
      const SparseVec& parent = psi_[index_.at(right_mult(y, s))];
      SparseVec out;
      for (const auto& [z, c] : parent) {
        for (const auto& [z2, c2] : act(z, s)) axpy(out, z2, c * c2);
        axpy(out, z, c * v_minus_vinv());
      }
      psi_[k] = std::move(out);
    }
  }

  bool minimal(const Permutation& y) const {
    for (int s = 1; s < d_; ++s)
      if ((jl_ >> (s - 1) & 1) && has_left_descent(y, s)) return false;
    return true;
  }

  std::optional<int> index(const Permutation& y) const {
    auto it = index_.find(y);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int length(int idx) const { return lengths_[idx]; }

  // m_y H_s
  SparseVec act(int idx, int s) const {
    const Permutation& y = elems_[idx];
    Permutation ys = right_mult(y, s);
    SparseVec out;
    if (has_right_descent(y, s)) {
      out[index_.at(ys)] = LaurentPoly(1);
      axpy(out, idx, -v_minus_vinv());
    } else if (auto j = index(ys)) {
      out[*j] = LaurentPoly(1);
    } else {
      out[idx] = LaurentPoly::monomial(-1, 1);
    }
    return out;
  }

  const SparseVec& canonical(int w) {
    {
      std::shared_lock lock(mu_);
      auto it = canon_.find(w);
      if (it != canon_.end()) return it->second;
    }
    // c_z - bar(c_z) = sum_{y > z} bar(c_y) r_{z,y}, solved level by level downward.
    SparseVec c{{w, LaurentPoly(1)}};
    SparseVec acc;
    for (const auto& [z, r] : psi_[w])
      if (z != w) axpy(acc, z, r);
    for (int len = lengths_[w] - 1; len >= 0; --len) {
      std::vector<int> fresh;
      for (const auto& [z, r] : acc)
        if (lengths_[z] == len) fresh.push_back(z);
      for (int z : fresh) {
        LaurentPoly cz = positive_part(acc.at(z));
        if (cz.is_zero()) continue;
        c[z] = cz;
        LaurentPoly bc = cz.bar();
        for (const auto& [u, r] : psi_[z])
          if (u != z) axpy(acc, u, bc * r);
      }
    }
    std::unique_lock lock(mu_);
    return canon_.try_emplace(w, std::move(c)).first->second;
  }

 private:
  int d_;
  ReflectionSet jl_;
  std::vector<Permutation> elems_;
  std::vector<int> lengths_;
  std::map<Permutation, int> index_;
  std::vector<SparseVec> psi_;
  std::shared_mutex mu_;
  std::map<int, SparseVec> canon_;
};

SignModule& sign_module(int d, ReflectionSet jl) {
  static std::mutex guard;
  static std::map<std::pair<int, ReflectionSet>, std::unique_ptr<SignModule>> modules;
  std::lock_guard lock(guard);
  auto& m = modules[{d, jl}];
  if (!m) m = std::make_unique<SignModule>(d, jl);
  return *m;
}

}  // namespace

LaurentPoly canonical_coeff(ReflectionSet jl, ReflectionSet jr, const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) fail(ErrorKind::ArityMismatch, "permutations of different sizes");
  const int d = static_cast<int>(x.size());
  const ReflectionSet all = d >= 2 ? (ReflectionSet(1) << (d - 1)) - 1 : 0;
  if ((jl | jr) & ~all) fail(ErrorKind::InvalidArgument, "reflection set outside 1..d-1");
  if (min_double_coset_rep(x, jl, jr) != x || min_double_coset_rep(w, jl, jr) != w)
    fail(ErrorKind::InvalidArgument, "x and w must be shortest double coset representatives");
  KLKey key{d, x, w, jl, jr};
  if (auto hit = kl_cache().find(key)) return *hit;
  const Permutation top = longest_in_right_coset(w, jr);
  SignModule& mod = sign_module(d, jl);
  auto wi = mod.index(top);
  auto xi = mod.index(x);
  if (!wi || !xi) fail(ErrorKind::InvalidArgument, "double coset of " + permutation_str(w) + " is not free");
  const SparseVec& cw = mod.canonical(*wi);
  LaurentPoly out;
  if (auto it = cw.find(*xi); it != cw.end()) {
    const int span = mod.length(*wi) - mod.length(*xi);
    for (const auto& [e, c] : it->second.coeffs()) {
      if ((span - e) % 2 != 0 || span - e < 0) fail(ErrorKind::InvalidArgument, "canonical coefficient off parity");
      out += LaurentPoly::monomial(c, (span - e) / 2);
    }
  }
  kl_cache().insert(key, out);
  return out;
}

// ---------------------------------------------------------------- weights to multiplicities

std::string IntegralWeight::str() const {
  std::string s = "(";
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += " | ";
    for (int k = 0; k < blocks[b]; ++k, ++pos) s += (k ? "," : "") + std::to_string(entries[pos]);
  }
  return s + ")";
}

namespace {

void validate(const IntegralWeight& w) {
  int total = 0;
  for (int b : w.blocks) {
    if (b <= 0) fail(ErrorKind::InvalidArgument, "block sizes must be positive");
    total += b;
  }
  if (total != static_cast<int>(w.entries.size()))
    fail(ErrorKind::InvalidArgument, "block sizes do not add up to the weight length");
  std::size_t pos = 0;
  for (int b : w.blocks) {
    for (int k = 1; k < b; ++k)
      if (w.entries[pos + k - 1] <= w.entries[pos + k])
        fail(ErrorKind::InvalidArgument, "weight " + w.str() + " is not strictly decreasing within its blocks");
    pos += b;
  }
}

ReflectionSet levi_set(const std::vector<int>& blocks) {
  ReflectionSet j = 0;
  int pos = 0;
  for (int b : blocks) {
    for (int k = 1; k < b; ++k) j |= ReflectionSet(1) << (pos + k - 1);
    pos += b;
  }
  return j;
}

struct Located {
  Permutation x;
  ReflectionSet jl, jr;
};

// theta = entries sorted decreasingly; weight_g = theta_{x^{-1}(g)}.
Located locate(const IntegralWeight& w) {
  std::vector<long> theta = w.entries;
  std::sort(theta.rbegin(), theta.rend());
  const int d = static_cast<int>(theta.size());
  ReflectionSet jr = 0;
  for (int i = 1; i < d; ++i)
    if (theta[i - 1] == theta[i]) jr |= ReflectionSet(1) << (i - 1);
  Permutation xinv(d);
  std::vector<char> used(d, 0);
  for (int g = 0; g < d; ++g) {
    int k = 0;
    while (used[k] || theta[k] != w.entries[g]) ++k;
    used[k] = 1;
    xinv[g] = k + 1;
  }
  const ReflectionSet jl = levi_set(w.blocks);
  return {min_double_coset_rep(perm_inverse(xinv), jl, jr), jl, jr};
}

bool same_linkage(const IntegralWeight& a, const IntegralWeight& b) {
  auto x = a.entries, y = b.entries;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Two Levi blocks: Brundan–Stroppel cup diagrams. Values occurring only in the first block
// are ∨, only in the second ∧; shared values are ignored. Cups of the simple weight join a ∨
// with the next free ∧ to its right; the standard weight must put one ∨ and one ∧ on every
// cup and read ∧…∧∨…∨ along the rays.
Integer two_block_multiplicity(const IntegralWeight& delta, const IntegralWeight& simple) {
  auto symbols = [](const IntegralWeight& w) {
    std::map<long, int> sym;  // +1 first block only, -1 second only, 0 both
    for (int k = 0; k < w.blocks[0]; ++k) sym[w.entries[k]] += 1;
    for (std::size_t k = w.blocks[0]; k < w.entries.size(); ++k) sym[w.entries[k]] -= 1;
    std::vector<std::pair<long, int>> out;
    for (const auto& [v, s] : sym)
      if (s != 0) out.push_back({v, s});
    return out;
  };
  auto ds = symbols(delta), ls = symbols(simple);
  if (ds.size() != ls.size()) return 0;
  for (std::size_t k = 0; k < ds.size(); ++k)
    if (ds[k].first != ls[k].first) return 0;
  std::vector<int> stack, rays;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (ls[k].second > 0) {
      stack.push_back(static_cast<int>(k));
    } else if (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      if (ds[a].second == ds[k].second) return 0;
    } else {
      rays.push_back(static_cast<int>(k));
    }
  }
  rays.insert(rays.end(), stack.begin(), stack.end());
  std::sort(rays.begin(), rays.end());
  bool seen_down = false;
  for (int k : rays) {
    if (ds[k].second > 0)
      seen_down = true;
    else if (seen_down)
      return 0;
  }
  return 1;
}

Integer general_multiplicity(const IntegralWeight& delta, const IntegralWeight& simple) {
  Located a = locate(delta), b = locate(simple);
  return canonical_coeff(a.jl, a.jr, a.x, b.x).at_one();
}

// Drops every value that occurs in all Levi blocks. Such a value occurs in every block of
// every weight in the linkage class, and deleting it is an equivalence of the blocks of O.
std::pair<IntegralWeight, IntegralWeight> drop_full_values(const IntegralWeight& delta, const IntegralWeight& simple) {
  std::map<long, std::size_t> count;
  for (long v : delta.entries) ++count[v];
  auto strip = [&](const IntegralWeight& w) {
    IntegralWeight out;
    std::size_t pos = 0;
    for (int b : w.blocks) {
      int kept = 0;
      for (int k = 0; k < b; ++k, ++pos)
        if (count[w.entries[pos]] < w.blocks.size()) {
          out.entries.push_back(w.entries[pos]);
          ++kept;
        }
      out.blocks.push_back(kept);
    }
    return out;
  };
  auto a = strip(delta), b = strip(simple);
  // Empty blocks carry no Levi factor.
  for (std::size_t k = a.blocks.size(); k-- > 0;)
    if (a.blocks[k] == 0) {
      a.blocks.erase(a.blocks.begin() + static_cast<long>(k));
      b.blocks.erase(b.blocks.begin() + static_cast<long>(k));
    }
  return {a, b};
}

void check_pair(const IntegralWeight& delta, const IntegralWeight& simple) {
  validate(delta);
  validate(simple);
  if (delta.blocks != simple.blocks) fail(ErrorKind::InvalidArgument, "weights have different Levi blocks");
}

}  // namespace

Integer parabolic_verma_multiplicity(const IntegralWeight& delta, const IntegralWeight& simple) {
  check_pair(delta, simple);
  if (!same_linkage(delta, simple)) return 0;
  if (delta.blocks.size() == 2) return two_block_multiplicity(delta, simple);
  auto [a, b] = drop_full_values(delta, simple);
  if (a.blocks.size() <= 1) return a.entries == b.entries ? 1 : 0;
  if (a.blocks.size() == 2) return two_block_multiplicity(a, b);
  return general_multiplicity(a, b);
}

Integer parabolic_verma_multiplicity_general(const IntegralWeight& delta, const IntegralWeight& simple) {
  check_pair(delta, simple);
  if (!same_linkage(delta, simple)) return 0;
  return general_multiplicity(delta, simple);
}

// ---------------------------------------------------------------- cache

std::optional<LaurentPoly> KLCache::find(const KLKey& k) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(k);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void KLCache::insert(const KLKey& k, const LaurentPoly& p) {
  std::unique_lock lock(mu_);
  map_.insert_or_assign(k, p);
}

std::size_t KLCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

void KLCache::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
}

std::string KLCache::format_record(const KLKey& k, const LaurentPoly& p) {
  std::string s = std::to_string(k.d) + ";" + permutation_str(k.x) + ";" + permutation_str(k.w) + ";" +
                  reflection_set_str(k.jl) + ";" + reflection_set_str(k.jr) + ";";
  auto dense = p.dense();
  for (std::size_t i = 0; i < dense.size(); ++i) s += (i ? "," : "") + dense[i].get_str();
  return s;
}

std::pair<KLKey, LaurentPoly> KLCache::parse_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ';') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 6) fail(ErrorKind::Parse, "expected 6 ';'-separated fields");
  KLKey k;
  try {
    std::size_t used = 0;
    k.d = std::stoi(fields[0], &used);
    if (used != fields[0].size() || k.d < 1 || k.d > 32) throw std::invalid_argument(fields[0]);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad rank field '" + fields[0] + "'");
  }
  k.x = parse_permutation(fields[1]);
  k.w = parse_permutation(fields[2]);
  if (static_cast<int>(k.x.size()) != k.d || static_cast<int>(k.w.size()) != k.d)
    fail(ErrorKind::Parse, "permutation length differs from d");
  k.jl = parse_reflection_set(fields[3], k.d);
  k.jr = parse_reflection_set(fields[4], k.d);
  std::vector<Integer> coeffs;
  if (!fields[5].empty()) {
    std::stringstream ss(fields[5]);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Integer z;
      if (item.empty() || z.set_str(item, 10) != 0) fail(ErrorKind::Parse, "bad coefficient '" + item + "'");
      coeffs.push_back(z);
    }
  }
  return {k, LaurentPoly::from_coeffs(coeffs)};
}

void KLCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  int lineno = 0;
  std::map<KLKey, LaurentPoly> loaded;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto [k, p] = parse_record(line);
      loaded.insert_or_assign(k, p);
    } catch (const Error& e) {
      fail(ErrorKind::Parse, path.string() + ":" + std::to_string(lineno) + ": corrupt cache record: " + e.what());
    }
  }
  std::unique_lock lock(mu_);
  for (auto& [k, p] : loaded) map_.insert_or_assign(k, p);
}

void KLCache::save(const std::filesystem::path& path) const {
  std::shared_lock lock(mu_);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write cache file " + path.string());
    for (const auto& [k, p] : map_) out << format_record(k, p) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

KLCache& kl_cache() {
  static KLCache cache;
  return cache;
}

}  // namespace fockcat
