#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fockcat {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  IntegerRank,
  InadmissibleStratum,
  ArityMismatch,
  InvalidArgument,
  RankTooSmall,
  ScaleLimit,
  Parse,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Linear expression c + sum_k a_k * name_k with rational coefficients.
class ParamExpr {
 public:
  ParamExpr() = default;
  ParamExpr(long c) : constant_(c) {}
  ParamExpr(const Rational& c) : constant_(c) {}

  static ParamExpr var(const std::string& name, const Rational& coeff = 1);
  static ParamExpr parse(std::string_view text);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  Rational coeff(const std::string& name) const;
  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  ParamExpr substitute(const std::map<std::string, Rational>& values) const;
  ParamExpr non_constant_part() const;

  ParamExpr& operator+=(const ParamExpr& o);
  ParamExpr& operator-=(const ParamExpr& o);
  ParamExpr& operator*=(const Rational& r);

  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator-(ParamExpr a) { return a *= Rational(-1); }
  friend ParamExpr operator*(ParamExpr a, const Rational& r) { return a *= r; }
  friend ParamExpr operator*(const Rational& r, ParamExpr a) { return a *= r; }

  bool operator==(const ParamExpr& o) const;
  bool operator<(const ParamExpr& o) const;

  std::string str() const;

 private:
  Rational constant_{0};
  std::map<std::string, Rational> terms_;
};

std::optional<Integer> expr_is_integer(const ParamExpr& e);
std::vector<ParamExpr> parse_expr_list(std::string_view text);

struct Box {
  int row;
  int col;
  int content;
  bool operator==(const Box&) const = default;
};

int box_content(int row, int col);

// Weakly decreasing positive parts; rows are 1-based in the accessors.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Accepts a weakly decreasing sequence with trailing zeros.
  static Partition from_rows(const std::vector<int>& rows);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  Partition conjugate() const;
  std::vector<Box> boxes() const;
  std::vector<Box> addable() const;
  std::vector<Box> removable() const;
  Partition add_box(int row) const;
  Partition remove_box(int row) const;
  bool contains(const Partition& o) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  std::string str() const;

 private:
  std::vector<int> parts_;
};

int content_count(const Partition& p, int c);
std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> removable_boxes(const Partition& p);
// All partitions of exactly n.
std::vector<Partition> partitions_of(int n);
// All partitions of size at most n, smallest first.
std::vector<Partition> partitions_up_to(int n);
// Number of standard Young tableaux.
Integer hook_count(const Partition& p);

using Multipartition = std::vector<Partition>;

Multipartition empty_multipartition(int arity);
Multipartition parse_multipartition(std::string_view text);
std::string to_string(const Multipartition& m);
int total_size(const Multipartition& m);
// All multipartitions of the given arity with at most `boxes` boxes in total.
std::vector<Multipartition> multipartitions_up_to(int arity, int boxes);

// Sparse polynomial in one variable with integer exponents (negative allowed).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) c_[0] = c; }
  LaurentPoly(const Integer& c) { if (c != 0) c_[0] = c; }
  static LaurentPoly monomial(const Integer& c, int e);
  static LaurentPoly from_coeffs(const std::vector<Integer>& low_to_high);

  const std::map<int, Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int e) const;
  int min_degree() const;
  int max_degree() const;
  Integer eval(const Integer& x) const;  // requires nonnegative exponents
  Integer at_one() const;
  LaurentPoly bar() const;  // x -> x^{-1}
  LaurentPoly shifted(int e) const;
  // Substitutes x -> x^k for k = +/-2 style rescaling.
  LaurentPoly rescaled(int k) const;
  // Coefficients low to high, starting at degree 0.
  std::vector<Integer> dense() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.c_) c = -c;
    return a;
  }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "q") const;

 private:
  void add_term(int e, const Integer& c);
  std::map<int, Integer> c_;
};

template <class Label>
class FormalCombination {
 public:
  using Terms = std::map<Label, Integer>;

  void add(const Label& l, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(l, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Integer coeff(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FormalCombination& operator+=(const FormalCombination& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  FormalCombination& operator-=(const FormalCombination& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  FormalCombination& operator*=(const Integer& k) {
    if (k == 0) { terms_.clear(); return *this; }
    for (auto& [l, c] : terms_) c *= k;
    return *this;
  }
  friend FormalCombination operator+(FormalCombination a, const FormalCombination& b) { return a += b; }
  friend FormalCombination operator-(FormalCombination a, const FormalCombination& b) { return a -= b; }
  friend FormalCombination operator-(FormalCombination a) { return a *= Integer(-1); }
  bool operator==(const FormalCombination& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

}  // namespace fockcat
