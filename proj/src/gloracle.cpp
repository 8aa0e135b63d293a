#include "fockcat/gloracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace fockcat::gl {

// ---------------------------------------------------------------- polynomials

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e(out.nvars_, 0);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::substitute(int i, const Poly& q) const {
  Poly out(nvars_);
  std::vector<Poly> powers{constant(nvars_, 1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * q);
    Exponents rest = e;
    rest[i] = 0;
    Poly mono(nvars_);
    mono.add_term(rest, c);
    out += mono * powers[e[i]];
  }
  return out;
}

std::optional<Poly> Poly::divide_linear(int i, const Poly& r) const {
  // Coefficients in x_i, highest first, then synthetic division by x_i - r.
  int top = 0;
  for (const auto& [e, c] : terms_) top = std::max(top, e[i]);
  std::vector<Poly> coeff(top + 1, Poly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[i] = 0;
    coeff[e[i]].add_term(rest, c);
  }
  if (top == 0) {
    if (is_zero()) return *this;
    return std::nullopt;
  }
  std::vector<Poly> q(top, Poly(nvars_));
  q[top - 1] = coeff[top];
  for (int d = top - 1; d >= 1; --d) q[d - 1] = coeff[d] + r * q[d];
  if (!(coeff[0] + r * q[0]).is_zero()) return std::nullopt;
  Poly out(nvars_);
  for (int d = 0; d < top; ++d) {
    for (const auto& [e, c] : q[d].terms_) {
      Exponents f = e;
      f[i] += d;
      out.add_term(f, c);
    }
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "s" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    std::string coef = mono.empty() || a != 1 ? to_string(a) : "";
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

Poly determinant(const std::vector<std::vector<Poly>>& m, int nvars) {
  const int n = static_cast<int>(m.size());
  if (n > 16) fail(ErrorKind::ScaleLimit, "Gram matrix too large");
  // minors[mask]: rows 0..|mask|-1 against the columns in mask, expanded along the last row.
  std::vector<Poly> minors(std::size_t{1} << n, Poly(nvars));
  minors[0] = Poly::constant(nvars, 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int row = std::popcount(mask) - 1;
    Poly acc(nvars);
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Poly& sub = minors[mask & ~(1u << c)];
      if (sub.is_zero() || m[row][c].is_zero()) continue;
      const int above = std::popcount(mask >> (c + 1));
      Poly t = m[row][c] * sub;
      if (above % 2) acc -= t;
      else acc += t;
    }
    minors[mask] = std::move(acc);
  }
  return minors[(1u << n) - 1];
}

// ---------------------------------------------------------------- setup and weights

Setup Setup::make(std::vector<int> blocks, Weight lambda) {
  Setup st;
  st.blocks = std::move(blocks);
  st.lambda = std::move(lambda);
  for (int b : st.blocks)
    if (b <= 0) fail(ErrorKind::InvalidArgument, "block sizes must be positive");
  st.M = std::accumulate(st.blocks.begin(), st.blocks.end(), 0);
  if (st.M == 0) fail(ErrorKind::InvalidArgument, "need at least one block");
  if (st.M > 12) fail(ErrorKind::ScaleLimit, "the oracle handles gl_M with M <= 12");
  if (static_cast<int>(st.lambda.size()) != st.M)
    fail(ErrorKind::InvalidArgument, "weight has " + std::to_string(st.lambda.size()) + " entries, expected " +
                                         std::to_string(st.M));
  for (int a = 0; a + 1 < st.M; ++a)
    if (st.block_of(a) == st.block_of(a + 1) && st.lambda[a] < st.lambda[a + 1])
      fail(ErrorKind::InvalidArgument, "weight " + weight_str(st.lambda) + " is not dominant for the Levi");
  return st;
}

int Setup::block_of(int a) const {
  int b = 0, end = blocks[0];
  while (a >= end) end += blocks[++b];
  return b;
}

namespace {

std::vector<int> block_sums(const Setup& st, const Weight& w) {
  std::vector<int> s(st.nblocks(), 0);
  for (int a = 0; a < st.M; ++a) s[st.block_of(a)] += w[a];
  return s;
}

std::optional<int> block_height(const std::vector<int>& top, const std::vector<int>& bottom) {
  int partial = 0, height = 0;
  for (std::size_t k = 0; k < top.size(); ++k) {
    partial += top[k] - bottom[k];
    if (partial < 0) return std::nullopt;
    if (k + 1 < top.size()) height += partial;
  }
  if (partial != 0) return std::nullopt;
  return height;
}

}  // namespace

std::optional<int> Setup::degree_of(const Weight& eta) const {
  if (static_cast<int>(eta.size()) != M) return std::nullopt;
  return block_height(block_sums(*this, lambda), block_sums(*this, eta));
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

Weight parse_weight(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '(', ' ');
  std::replace(s.begin(), s.end(), ')', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Weight w;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad weight entry '" + tok + "'");
    }
  }
  if (w.empty()) fail(ErrorKind::Parse, "empty weight");
  return w;
}

// ---------------------------------------------------------------- straightening

namespace {

using Word = std::vector<Root>;
using Vec = std::map<Word, Poly>;

std::vector<Rational> rref_reduce(std::vector<Rational> x, const std::vector<std::vector<Rational>>& rows,
                                  const std::vector<int>& pivots) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational f = x[pivots[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < x.size(); ++c) x[c] -= f * rows[r][c];
  }
  return x;
}

// Reduced row echelon form, in place; returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& rows, std::size_t ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Rational f = rows[o][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[o][k] -= f * rows[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

struct WeightSpace {
  std::vector<Word> words;  // sorted PBW words of the Borel Verma module
  std::map<Word, int> index;
  std::vector<std::vector<Rational>> kernel_rows;  // the parabolic relations, reduced
  std::vector<int> pivots;
  std::vector<int> free;  // quotient basis = words at these columns
};

class Engine {
 public:
  explicit Engine(const Setup& st) : st_(st), nvars_(st.nblocks()) {
    for (int a = 0; a < st_.M; ++a)
      for (int b = 0; b < a; ++b) roots_.push_back({a, b});
    std::sort(roots_.begin(), roots_.end(), [&](Root x, Root y) { return less(x, y); });
  }

  int nvars() const { return nvars_; }

  bool levi(Root r) const { return st_.block_of(r.a) == st_.block_of(r.b); }

  // Fixed PBW order: non-Levi roots first by block pair and position, Levi roots last.
  bool less(Root x, Root y) const {
    auto key = [&](Root r) {
      return std::tuple(levi(r), st_.block_of(r.b), st_.block_of(r.a), r.b, r.a);
    };
    return key(x) < key(y);
  }

  Poly Lambda(int a) const {
    return Poly::constant(nvars_, st_.lambda[a]) + Poly::variable(nvars_, st_.block_of(a));
  }

  // Straightens a word of lowering operators into sorted words.
  const std::map<Word, Integer>& normalize(const Word& w) {
    auto it = norm_memo_.find(w);
    if (it != norm_memo_.end()) return it->second;
    std::map<Word, Integer> out;
    std::size_t i = 0;
    while (i + 1 < w.size() && !less(w[i + 1], w[i])) ++i;
    if (i + 1 >= w.size()) {
      out[w] = 1;
    } else {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      for (const auto& [u, c] : normalize(swapped)) out[u] += c;
      // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
      const Root x = w[i], y = w[i + 1];
      auto fold = [&](Root r, int sign) {
        Word shorter(w.begin(), w.begin() + static_cast<long>(i));
        shorter.push_back(r);
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        for (const auto& [u, c] : normalize(shorter)) out[u] += sign * c;
      };
      if (x.b == y.a) fold({x.a, y.b}, 1);
      if (y.b == x.a) fold({y.a, x.b}, -1);
      std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    }
    return norm_memo_.emplace(w, std::move(out)).first->second;
  }

  void add_normalized(Vec& dst, const Word& w, const Poly& c) {
    for (const auto& [u, k] : normalize(w)) {
      auto& slot = dst.try_emplace(u, Poly(nvars_)).first->second;
      slot += c * Rational(k);
      if (slot.is_zero()) dst.erase(u);
    }
  }

  // E_ab applied to w·v, with w any word of lowering operators; the result is straightened.
  Vec act(int a, int b, const Word& w) {
    auto key = std::tuple(a, b, w);
    auto it = act_memo_.find(key);
    if (it != act_memo_.end()) return it->second;
    Vec out;
    if (a > b) {
      Word longer{Root{a, b}};
      longer.insert(longer.end(), w.begin(), w.end());
      add_normalized(out, longer, Poly::constant(nvars_, 1));
    } else if (a == b) {
      Poly c = Lambda(a);
      for (Root r : w) c += Poly::constant(nvars_, (r.a == a) - (r.b == a));
      if (!c.is_zero()) add_normalized(out, w, c);
    } else if (!w.empty()) {
      const Root f = w.front();
      const Word rest(w.begin() + 1, w.end());
      for (const auto& [u, c] : act(a, b, rest)) {
        Word longer{f};
        longer.insert(longer.end(), u.begin(), u.end());
        add_normalized(out, longer, c);
      }
      auto commutator = [&](int x, int y, int sign) {
        for (const auto& [u, c] : act(x, y, rest)) add_normalized(out, u, c * Rational(sign));
      };
      if (b == f.a) commutator(a, f.b, 1);
      if (f.b == a) commutator(f.a, b, -1);
    }
    act_memo_.emplace(key, out);
    return out;
  }

  Vec act_vec(int a, int b, const Vec& v) {
    Vec out;
    for (const auto& [w, c] : v)
      for (const auto& [u, d] : act(a, b, w)) {
        auto& slot = out.try_emplace(u, Poly(nvars_)).first->second;
        slot += c * d;
        if (slot.is_zero()) out.erase(u);
      }
    return out;
  }

  // ⟨u v, w v⟩ through the anti-involution E_ab -> E_ba.
  Poly pairing(const Word& u, const Word& w) {
    auto key = std::pair(u, w);
    auto it = pair_memo_.find(key);
    if (it != pair_memo_.end()) return it->second;
    Vec cur{{w, Poly::constant(nvars_, 1)}};
    for (Root r : u) {
      cur = act_vec(r.b, r.a, cur);
      if (cur.empty()) break;
    }
    auto found = cur.find(Word{});
    Poly out = found == cur.end() ? Poly(nvars_) : found->second;
    pair_memo_.emplace(key, out);
    return out;
  }

  // Sorted words with Σ (ε_b - ε_a) = beta.
  std::vector<Word> words_of(const std::vector<int>& beta) {
    std::vector<Word> out;
    Word cur;
    std::vector<int> rest = beta;
    auto valid = [&]() {
      int partial = 0;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        partial += rest[k];
        if (partial < 0) return false;
      }
      return partial == 0;
    };
    if (!valid()) return out;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
        out.push_back(cur);
        return;
      }
      for (std::size_t k = from; k < roots_.size(); ++k) {
        const Root r = roots_[k];
        --rest[r.b];
        ++rest[r.a];
        if (valid()) {
          cur.push_back(r);
          self(self, k);
          cur.pop_back();
        }
        ++rest[r.b];
        --rest[r.a];
      }
    };
    rec(rec, 0);
    return out;
  }

  std::vector<int> deficit(const Weight& eta) const {
    std::vector<int> beta(st_.M);
    for (int a = 0; a < st_.M; ++a) beta[a] = st_.lambda[a] - eta[a];
    return beta;
  }

  std::vector<Rational> dense(const WeightSpace& ws, const Vec& v) const {
    std::vector<Rational> x(ws.words.size());
    for (const auto& [w, c] : v) {
      if (!c.is_constant()) fail(ErrorKind::InvalidArgument, "Levi action picked up a center parameter");
      x[ws.index.at(w)] = c.constant_term();
    }
    return x;
  }

  const WeightSpace& space(const Weight& eta) {
    auto it = spaces_.find(eta);
    if (it != spaces_.end()) return it->second;
    WeightSpace ws;
    const auto beta = deficit(eta);
    ws.words = words_of(beta);
    for (std::size_t i = 0; i < ws.words.size(); ++i) ws.index[ws.words[i]] = static_cast<int>(i);
    // Relations u · f_α^{n+1} for the Levi simple roots α.
    for (int a = 0; a + 1 < st_.M; ++a) {
      if (st_.block_of(a) != st_.block_of(a + 1)) continue;
      const int n = st_.lambda[a] - st_.lambda[a + 1] + 1;
      auto rest = beta;
      rest[a] -= n;
      rest[a + 1] += n;
      const Word power(n, Root{a + 1, a});
      for (const auto& u : words_of(rest)) {
        Word w = u;
        w.insert(w.end(), power.begin(), power.end());
        Vec v;
        add_normalized(v, w, Poly::constant(nvars_, 1));
        ws.kernel_rows.push_back(dense(ws, v));
      }
    }
    ws.pivots = rref(ws.kernel_rows, ws.words.size());
    std::set<int> piv(ws.pivots.begin(), ws.pivots.end());
    for (int c = 0; c < static_cast<int>(ws.words.size()); ++c)
      if (!piv.count(c)) ws.free.push_back(c);
    return spaces_.emplace(eta, std::move(ws)).first->second;
  }

  std::vector<Rational> quotient_coords(const WeightSpace& ws, const Vec& v) const {
    auto x = rref_reduce(dense(ws, v), ws.kernel_rows, ws.pivots);
    std::vector<Rational> out;
    for (int c : ws.free) out.push_back(x[c]);
    return out;
  }

  // Levi-highest vectors of weight μ as combinations of quotient basis words.
  std::vector<Vec> highest_vectors(const Weight& mu) {
    const WeightSpace& ws = space(mu);
    const std::size_t dim = ws.free.size();
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a + 1 < st_.M; ++a) {
      if (st_.block_of(a) != st_.block_of(a + 1)) continue;
      Weight up = mu;
      ++up[a];
      --up[a + 1];
      const WeightSpace& target = space(up);
      std::vector<std::vector<Rational>> cols;
      for (int c : ws.free) cols.push_back(quotient_coords(target, act(a, a + 1, ws.words[c])));
      for (std::size_t r = 0; r < target.free.size(); ++r) {
        std::vector<Rational> row(dim);
        for (std::size_t c = 0; c < dim; ++c) row[c] = cols[c][r];
        rows.push_back(std::move(row));
      }
    }
    const auto pivots = rref(rows, dim);
    std::set<int> piv(pivots.begin(), pivots.end());
    std::vector<Vec> out;
    for (std::size_t fcol = 0; fcol < dim; ++fcol) {
      if (piv.count(static_cast<int>(fcol))) continue;
      std::vector<Rational> x(dim);
      x[fcol] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][fcol];
      Vec v;
      for (std::size_t c = 0; c < dim; ++c)
        if (x[c] != 0) v[ws.words[ws.free[c]]] = Poly::constant(nvars_, x[c]);
      out.push_back(std::move(v));
    }
    return out;
  }

  Poly form(const Vec& x, const Vec& y) {
    Poly out(nvars_);
    for (const auto& [u, c] : x)
      for (const auto& [w, d] : y) out += c * d * pairing(u, w);
    return out;
  }

 private:
  const Setup& st_;
  int nvars_;
  std::vector<Root> roots_;
  std::map<Word, std::map<Word, Integer>> norm_memo_;
  std::map<std::tuple<int, int, Word>, Vec> act_memo_;
  std::map<std::pair<Word, Word>, Poly> pair_memo_;
  std::map<Weight, WeightSpace> spaces_;
};

// ---------------------------------------------------------------- characters

// Kostka number for one gl_m block: λ weakly decreasing, ν any content of the same length.
Integer kostka(Weight lam, Weight nu) {
  if (lam.size() != nu.size()) return 0;
  if (std::accumulate(lam.begin(), lam.end(), 0) != std::accumulate(nu.begin(), nu.end(), 0)) return 0;
  if (lam.empty()) return 1;
  const int shift = -lam.back();
  for (auto& x : lam) x += shift;
  for (auto& x : nu) {
    x += shift;
    if (x < 0) return 0;
  }
  std::sort(nu.begin(), nu.end(), std::greater<>());
  static thread_local std::map<std::pair<Weight, Weight>, Integer> memo;
  auto rec = [&](auto&& self, const Weight& shape, std::size_t len) -> Integer {
    if (len == 0) return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? 1 : 0;
    Weight content(nu.begin(), nu.begin() + static_cast<long>(len));
    auto key = std::pair(shape, content);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // Remove a horizontal strip of size nu[len-1].
    Integer total = 0;
    Weight inner = shape;
    auto strip = [&](auto&& go, std::size_t row, int left) -> void {
      if (row == shape.size()) {
        if (left == 0) total += self(self, inner, len - 1);
        return;
      }
      const int floor = row + 1 < shape.size() ? shape[row + 1] : 0;
      for (int take = 0; take <= std::min(left, shape[row] - floor); ++take) {
        inner[row] = shape[row] - take;
        go(go, row + 1, left - take);
      }
      inner[row] = shape[row];
    };
    strip(strip, 0, content.back());
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, lam, nu.size());
}

Integer levi_weight_dim(const Setup& st, const Weight& top, const Weight& nu) {
  Integer d = 1;
  int pos = 0;
  for (int b : st.blocks) {
    Weight x(top.begin() + pos, top.begin() + pos + b), y(nu.begin() + pos, nu.begin() + pos + b);
    d *= kostka(x, y);
    if (d == 0) return 0;
    pos += b;
  }
  return d;
}

std::vector<std::pair<int, int>> nilradical_roots(const Setup& st) {
  std::vector<std::pair<int, int>> out;  // ε_a - ε_b, a < b in different blocks
  for (int a = 0; a < st.M; ++a)
    for (int b = a + 1; b < st.M; ++b)
      if (st.block_of(a) != st.block_of(b)) out.push_back({a, b});
  return out;
}

// Calls visit(γ) for every multiset of nilradical roots, γ its sum, of block height <= limit.
template <class F>
void for_each_nilradical_multiset(const Setup& st, int limit, F&& visit) {
  const auto roots = nilradical_roots(st);
  Weight gamma(st.M, 0);
  auto rec = [&](auto&& self, std::size_t from, int height) -> void {
    visit(gamma);
    for (std::size_t k = from; k < roots.size(); ++k) {
      const auto [a, b] = roots[k];
      const int h = st.block_of(b) - st.block_of(a);
      if (height + h > limit) continue;
      ++gamma[a];
      --gamma[b];
      self(self, k, height + h);
      --gamma[a];
      ++gamma[b];
    }
  };
  rec(rec, 0, 0);
}

// Weight multiplicity of η in U(u⁻) ⊗ X(ϑ).
Integer verma_weight_dim(const Setup& st, const Weight& theta, const Weight& eta) {
  const auto h = block_height(block_sums(st, theta), block_sums(st, eta));
  if (!h) return 0;
  Integer total = 0;
  for_each_nilradical_multiset(st, *h, [&](const Weight& gamma) {
    Weight nu = eta;
    for (int a = 0; a < st.M; ++a) nu[a] += gamma[a];
    total += levi_weight_dim(st, theta, nu);
  });
  return total;
}

// Every permutation inside the Levi with its sign.
std::vector<std::pair<std::vector<int>, int>> levi_weyl_group(const Setup& st) {
  std::vector<std::pair<std::vector<int>, int>> out{{{}, 1}};
  int pos = 0;
  for (int b : st.blocks) {
    std::vector<int> p(b);
    std::iota(p.begin(), p.end(), pos);
    std::vector<std::pair<std::vector<int>, int>> next;
    do {
      int inv = 0;
      for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) inv += p[i] > p[j];
      for (const auto& [w, s] : out) {
        auto v = w;
        v.insert(v.end(), p.begin(), p.end());
        next.push_back({v, inv % 2 ? -s : s});
      }
    } while (std::next_permutation(p.begin(), p.end()));
    out = std::move(next);
    pos += b;
  }
  return out;
}

Weight levi_rho(const Setup& st) {
  Weight rho(st.M);
  int pos = 0;
  for (int b : st.blocks) {
    for (int p = 0; p < b; ++p) rho[pos + p] = b - p;
    pos += b;
  }
  return rho;
}

bool levi_dominant(const Setup& st, const Weight& w) {
  for (int a = 0; a + 1 < st.M; ++a)
    if (st.block_of(a) == st.block_of(a + 1) && w[a] < w[a + 1]) return false;
  return true;
}

void check_weight(const Setup& st, const Weight& w) {
  if (static_cast<int>(w.size()) != st.M)
    fail(ErrorKind::InvalidArgument, "weight " + weight_str(w) + " has the wrong length");
}

// Weights of the parabolic Verma module down to the given degree.
std::set<Weight> verma_weights(const Setup& st, int degree) {
  // Weights of X(λ): block contents dominated by λ, found through Kostka numbers.
  std::vector<std::vector<Weight>> per_block;
  int pos = 0;
  for (int b : st.blocks) {
    Weight lam(st.lambda.begin() + pos, st.lambda.begin() + pos + b);
    std::vector<Weight> found;
    Weight cur(b);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == b) {
        if (kostka(lam, cur) != 0) found.push_back(cur);
        return;
      }
      for (int v = lam.back(); v <= lam.front(); ++v) {
        cur[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    per_block.push_back(std::move(found));
    pos += b;
  }
  std::vector<Weight> levi{Weight{}};
  for (const auto& opts : per_block) {
    std::vector<Weight> next;
    for (const auto& w : levi)
      for (const auto& o : opts) {
        auto v = w;
        v.insert(v.end(), o.begin(), o.end());
        next.push_back(v);
      }
    levi = std::move(next);
  }
  std::set<Weight> out;
  for (const auto& nu : levi)
    for_each_nilradical_multiset(st, degree, [&](const Weight& gamma) {
      Weight eta = nu;
      for (int a = 0; a < st.M; ++a) eta[a] -= gamma[a];
      out.insert(eta);
    });
  return out;
}

// PBW straightening is only attempted at desk scale; the character side runs further.
void check_pbw_scale(const Setup& st) {
  if (st.M > 4) fail(ErrorKind::ScaleLimit, "PBW computations handle gl_M with M <= 4");
}

void check_degree(int degree) {
  if (degree < 0) fail(ErrorKind::InvalidArgument, "degree must be nonnegative");
  if (degree > 4) fail(ErrorKind::ScaleLimit, "the oracle handles degree <= 4");
}

ParamExpr linear_factor(int I, int J, long c) {
  return ParamExpr::var("s" + std::to_string(I + 1)) - ParamExpr::var("s" + std::to_string(J + 1)) + ParamExpr(c);
}

}  // namespace

// ---------------------------------------------------------------- public operations

std::vector<WeightPiece> pbw_basis(const Setup& st, int degree) {
  check_degree(degree);
  check_pbw_scale(st);
  Engine eng(st);
  std::vector<WeightPiece> out;
  for (const auto& eta : verma_weights(st, degree)) {
    const auto d = st.degree_of(eta);
    if (!d || *d > degree) continue;
    const auto& ws = eng.space(eta);
    WeightPiece piece{eta, *d, {}};
    for (int c : ws.free) piece.basis.push_back(ws.words[c]);
    if (!piece.basis.empty()) out.push_back(std::move(piece));
  }
  std::stable_sort(out.begin(), out.end(), [](const WeightPiece& x, const WeightPiece& y) {
    return std::tie(x.degree, y.weight) < std::tie(y.degree, x.weight);
  });
  return out;
}

std::vector<std::vector<Poly>> weight_gram(const Setup& st, const Weight& eta) {
  check_weight(st, eta);
  const auto d = st.degree_of(eta);
  if (d) check_degree(*d);
  check_pbw_scale(st);
  Engine eng(st);
  const auto& ws = eng.space(eta);
  std::vector<std::vector<Poly>> g(ws.free.size(), std::vector<Poly>(ws.free.size(), Poly(eng.nvars())));
  for (std::size_t i = 0; i < ws.free.size(); ++i)
    for (std::size_t j = 0; j < ws.free.size(); ++j) g[i][j] = eng.pairing(ws.words[ws.free[i]], ws.words[ws.free[j]]);
  return g;
}

std::vector<std::vector<Poly>> isotypic_gram(const Setup& st, const Weight& mu) {
  check_weight(st, mu);
  const auto d = st.degree_of(mu);
  if (d) check_degree(*d);
  check_pbw_scale(st);
  Engine eng(st);
  const auto hv = eng.highest_vectors(mu);
  std::vector<std::vector<Poly>> g(hv.size(), std::vector<Poly>(hv.size(), Poly(eng.nvars())));
  for (std::size_t i = 0; i < hv.size(); ++i)
    for (std::size_t j = 0; j < hv.size(); ++j) g[i][j] = eng.form(hv[i], hv[j]);
  return g;
}

Poly gram_determinant(const Setup& st, const Weight& mu) {
  return determinant(isotypic_gram(st, mu), st.nblocks());
}

Factorization factor_linear(const Poly& p, int bound) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  const int n = p.nvars();
  Poly rest = p;
  std::vector<LinearFactor> factors;
  for (int I = 0; I < n; ++I)
    for (int J = I + 1; J < n; ++J)
      for (long c = -bound; c <= bound; ++c) {
        // s_I - s_J + c = s_I - (s_J - c)
        const Poly r = Poly::variable(n, J) - Poly::constant(n, c);
        Integer e = 0;
        while (auto q = rest.divide_linear(I, r)) {
          if (q->is_zero()) break;
          rest = *q;
          ++e;
        }
        if (e != 0) factors.push_back({linear_factor(I, J, c), e});
      }
  std::sort(factors.begin(), factors.end(), [](const LinearFactor& x, const LinearFactor& y) { return x.factor < y.factor; });
  Factorization f;
  f.scalar = rest.terms().rbegin()->second;
  f.factors = std::move(factors);
  f.remainder = rest * (1 / f.scalar);
  return f;
}

Integer parabolic_isotypic(const Setup& st, const Weight& theta, const Weight& mu) {
  check_weight(st, theta);
  check_weight(st, mu);
  if (!levi_dominant(st, theta) || !levi_dominant(st, mu)) return 0;
  const auto rho = levi_rho(st);
  Integer total = 0;
  for (const auto& [w, sign] : levi_weyl_group(st)) {
    Weight eta(st.M);
    for (int a = 0; a < st.M; ++a) eta[a] = mu[a] + rho[a] - rho[w[a]];
    total += sign * verma_weight_dim(st, theta, eta);
  }
  return total;
}

std::vector<std::pair<Weight, Integer>> isotypic_labels(const Setup& st, int degree) {
  check_degree(degree);
  std::vector<std::pair<Weight, Integer>> out;
  for (const auto& eta : verma_weights(st, degree)) {
    const auto d = st.degree_of(eta);
    if (!d || *d == 0 || *d > degree || !levi_dominant(st, eta)) continue;
    Integer r = parabolic_isotypic(st, st.lambda, eta);
    if (r != 0) out.push_back({eta, r});
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return std::pair(*st.degree_of(x.first), y.first) < std::pair(*st.degree_of(y.first), x.first);
  });
  return out;
}

std::vector<LinearFactor> classical_jantzen(const Setup& st, const Weight& mu) {
  check_weight(st, mu);
  const auto height = st.degree_of(mu);
  if (!height) return {};
  check_degree(*height);
  const auto rho = levi_rho(st);
  std::map<ParamExpr, Integer> merged;
  for (const auto& [A, B] : nilradical_roots(st)) {
    const int I = st.block_of(A), J = st.block_of(B);
    for (int k = 1; k * (J - I) <= *height; ++k) {
      // (Θ + ρ) - kα, then sorted back into the Levi chamber.
      Weight v(st.M);
      for (int a = 0; a < st.M; ++a) v[a] = st.lambda[a] + rho[a];
      v[A] -= k;
      v[B] += k;
      int sign = 1;
      bool degenerate = false;
      int pos = 0;
      for (int b : st.blocks) {
        auto first = v.begin() + pos, last = first + b;
        for (auto x = first; x != last; ++x)
          for (auto y = x + 1; y != last; ++y) {
            if (*x == *y) degenerate = true;
            if (*x < *y) sign = -sign;
          }
        std::sort(first, last, std::greater<>());
        pos += b;
      }
      if (degenerate) continue;
      for (int a = 0; a < st.M; ++a) v[a] -= rho[a];
      const Integer r = parabolic_isotypic(st, v, mu);
      if (r == 0) continue;
      const long c = st.lambda[A] - st.lambda[B] + (B - A) - k;
      merged[linear_factor(I, J, c)] += sign * r;
    }
  }
  std::vector<LinearFactor> out;
  for (auto& [f, e] : merged)
    if (e != 0) out.push_back({f, e});
  return out;
}

Factorization gram_factors(const Setup& st, const Weight& mu) {
  const auto [lo, hi] = std::minmax_element(st.lambda.begin(), st.lambda.end());
  const int degree = st.degree_of(mu).value_or(0);
  return factor_linear(gram_determinant(st, mu), (*hi - *lo) + st.M + degree + 2);
}

}  // namespace fockcat::gl
