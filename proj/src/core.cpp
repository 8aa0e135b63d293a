#include "fockcat/core.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fockcat {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::IntegerRank: return "IntegerRank";
    case ErrorKind::InadmissibleStratum: return "InadmissibleStratum";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::ScaleLimit: return "ScaleLimit";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      digit = true;
    } else if (s[k] == '/' && !slash && digit && k + 1 < s.size()) {
      slash = true;
      digit = false;
    } else {
      fail(ErrorKind::Parse, "malformed rational '" + s + "'");
    }
  }
  if (!digit) fail(ErrorKind::Parse, "malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  r.set_str(s, 10);
  if (r.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

// ---------------------------------------------------------------- ParamExpr

ParamExpr ParamExpr::var(const std::string& name, const Rational& coeff) {
  ParamExpr e;
  if (coeff != 0) e.terms_[name] = coeff;
  return e;
}

Rational ParamExpr::coeff(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rational(0) : it->second;
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& o) {
  constant_ += o.constant_;
  for (const auto& [n, c] : o.terms_) {
    auto& slot = terms_[n];
    slot += c;
    if (slot == 0) terms_.erase(n);
  }
  return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [n, c] : o.terms_) {
    auto& slot = terms_[n];
    slot -= c;
    if (slot == 0) terms_.erase(n);
  }
  return *this;
}

ParamExpr& ParamExpr::operator*=(const Rational& r) {
  if (r == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= r;
  for (auto& [n, c] : terms_) c *= r;
  return *this;
}

bool ParamExpr::operator==(const ParamExpr& o) const {
  return constant_ == o.constant_ && terms_ == o.terms_;
}

bool ParamExpr::operator<(const ParamExpr& o) const {
  if (terms_ != o.terms_) return terms_ < o.terms_;
  return constant_ < o.constant_;
}

ParamExpr ParamExpr::substitute(const std::map<std::string, Rational>& values) const {
  ParamExpr out(constant_);
  for (const auto& [n, c] : terms_) {
    auto it = values.find(n);
    if (it != values.end())
      out.constant_ += c * it->second;
    else
      out.terms_[n] = c;
  }
  return out;
}

ParamExpr ParamExpr::non_constant_part() const {
  ParamExpr e = *this;
  e.constant_ = 0;
  return e;
}

std::string ParamExpr::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& name) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (name.empty())
      os << a.get_str();
    else if (a == 1)
      os << name;
    else
      os << a.get_str() << "*" << name;
    first = false;
  };
  if (constant_ != 0) emit(constant_, "");
  for (const auto& [n, c] : terms_) emit(c, n);
  if (first) os << "0";
  return os.str();
}

ParamExpr ParamExpr::parse(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::Parse, "cannot parse expression '" + s + "': " + why);
  };
  ParamExpr out;
  skip();
  if (i == s.size()) bad("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      bad("expected + or -");
    }
    first = false;
    Rational coeff = 1;
    bool have_num = false;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      coeff = parse_rational(s.substr(start, i - start));
      have_num = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
        if (i == s.size() || !std::islower(static_cast<unsigned char>(s[i]))) bad("expected name after *");
      }
    }
    std::string name;
    if (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
      std::size_t ns = i;
      while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                              std::isdigit(static_cast<unsigned char>(s[i]))))
        ++i;
      name = s.substr(ns, i - ns);
    }
    if (!have_num && name.empty()) bad("expected a term");
    coeff *= sign;
    if (name.empty())
      out += ParamExpr(coeff);
    else
      out += ParamExpr::var(name, coeff);
  }
  return out;
}

std::optional<Integer> expr_is_integer(const ParamExpr& e) {
  if (!e.is_constant()) return std::nullopt;
  if (e.constant().get_den() != 1) return std::nullopt;
  return Integer(e.constant().get_num());
}

std::vector<ParamExpr> parse_expr_list(std::string_view text) {
  std::vector<ParamExpr> out;
  std::string s(text);
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(',', start);
    out.push_back(ParamExpr::parse(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// ---------------------------------------------------------------- Partition

int box_content(int row, int col) { return col - row; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorKind::InvalidArgument, "partition parts must weakly decrease");
  }
}

Partition Partition::from_rows(const std::vector<int>& rows) {
  std::vector<int> p(rows);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

int Partition::size() const {
  int s = 0;
  for (int x : parts_) s += x;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_[0]; ++j) {
    int n = 0;
    for (int x : parts_) n += x >= j ? 1 : 0;
    c.push_back(n);
  }
  return Partition(std::move(c));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> b;
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= parts_[r - 1]; ++c) b.push_back({r, c, box_content(r, c)});
  return b;
}

std::vector<Box> Partition::addable() const {
  std::vector<Box> out;
  for (int r = 1; r <= length() + 1; ++r) {
    int c = row(r) + 1;
    if (r == 1 || row(r - 1) >= c) out.push_back({r, c, box_content(r, c)});
  }
  return out;
}

std::vector<Box> Partition::removable() const {
  std::vector<Box> out;
  for (int r = 1; r <= length(); ++r) {
    int c = row(r);
    if (row(r + 1) < c) out.push_back({r, c, box_content(r, c)});
  }
  return out;
}

Partition Partition::add_box(int r) const {
  std::vector<int> p = parts_;
  if (r == length() + 1)
    p.push_back(1);
  else if (r >= 1 && r <= length())
    ++p[r - 1];
  else
    fail(ErrorKind::InvalidArgument, "row out of range");
  return Partition(std::move(p));
}

Partition Partition::remove_box(int r) const {
  if (r < 1 || r > length()) fail(ErrorKind::InvalidArgument, "row out of range");
  std::vector<int> p = parts_;
  --p[r - 1];
  return from_rows(p);
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int i = 1; i <= o.length(); ++i)
    if (o.row(i) > row(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::Parse, "partition entries must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed array: ") + std::string(text));
  }
}

}  // namespace

Partition Partition::parse(std::string_view text) { return partition_from_json(parse_json(text)); }

int content_count(const Partition& p, int c) {
  int n = 0;
  for (int r = 1; r <= p.length(); ++r) {
    int col = c + r;
    if (col >= 1 && col <= p.row(r)) ++n;
  }
  return n;
}

namespace {
void sort_by_content(std::vector<Box>& b) {
  std::sort(b.begin(), b.end(), [](const Box& x, const Box& y) { return x.content > y.content; });
}
}  // namespace

std::vector<Box> addable_boxes(const Partition& p) {
  auto b = p.addable();
  sort_by_content(b);
  return b;
}

std::vector<Box> removable_boxes(const Partition& p) {
  auto b = p.removable();
  sort_by_content(b);
  return b;
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Integer hook_count(const Partition& p) {
  Integer num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.size()));
  Partition c = p.conjugate();
  Integer den = 1;
  for (int r = 1; r <= p.length(); ++r)
    for (int col = 1; col <= p.row(r); ++col) den *= (p.row(r) - col) + (c.row(col) - r) + 1;
  return num / den;
}

Multipartition empty_multipartition(int arity) { return Multipartition(static_cast<std::size_t>(arity)); }

Multipartition parse_multipartition(std::string_view text) {
  auto j = parse_json(text);
  if (!j.is_array()) fail(ErrorKind::Parse, "multipartition must be an array of arrays");
  Multipartition m;
  for (const auto& x : j) m.push_back(partition_from_json(x));
  return m;
}

std::string to_string(const Multipartition& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += m[i].str();
  }
  return s + "]";
}

int total_size(const Multipartition& m) {
  int s = 0;
  for (const auto& p : m) s += p.size();
  return s;
}

namespace {
void gen_multi(int arity, int left, Multipartition& cur, std::vector<Multipartition>& out) {
  if (static_cast<int>(cur.size()) == arity) {
    out.push_back(cur);
    return;
  }
  for (const auto& p : partitions_up_to(left)) {
    cur.push_back(p);
    gen_multi(arity, left - p.size(), cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Multipartition> multipartitions_up_to(int arity, int boxes) {
  std::vector<Multipartition> out;
  Multipartition cur;
  gen_multi(arity, boxes, cur, out);
  return out;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Integer>& v) {
  LaurentPoly p;
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(static_cast<int>(i), v[i]);
  return p;
}

void LaurentPoly::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Integer LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

Integer LaurentPoly::eval(const Integer& x) const {
  Integer s = 0;
  for (const auto& [e, c] : c_) {
    if (e < 0) fail(ErrorKind::InvalidArgument, "eval of a polynomial with negative exponents");
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    s += c * p;
  }
  return s;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::rescaled(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.add_term(e * k, c);
  return p;
}

std::vector<Integer> LaurentPoly::dense() const {
  if (c_.empty()) return {};
  if (min_degree() < 0) fail(ErrorKind::InvalidArgument, "dense form needs nonnegative exponents");
  std::vector<Integer> v(static_cast<std::size_t>(max_degree()) + 1, Integer(0));
  for (const auto& [e, c] : c_) v[static_cast<std::size_t>(e)] = c;
  return v;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace fockcat
