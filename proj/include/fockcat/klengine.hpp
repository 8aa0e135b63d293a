#pragma once

#include "fockcat/core.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace fockcat {

// One-line notation, values 1..d.
using Permutation = std::vector<int>;
// Simple reflections s_1..s_{d-1} as a bitmask (bit i-1 for s_i).
using ReflectionSet = std::uint32_t;

Permutation parse_permutation(std::string_view text);
std::string permutation_str(const Permutation& p);
ReflectionSet parse_reflection_set(std::string_view text, int d);
std::string reflection_set_str(ReflectionSet j);

Permutation identity_permutation(int d);
int perm_length(const Permutation& p);
Permutation perm_inverse(const Permutation& p);
Permutation perm_compose(const Permutation& a, const Permutation& b);  // (a*b)(i) = a(b(i))
Permutation right_mult(const Permutation& p, int s);                    // p * s_s, swaps positions s, s+1
Permutation left_mult(int s, const Permutation& p);                     // s_s * p, swaps values s, s+1
bool has_right_descent(const Permutation& p, int s);
bool has_left_descent(const Permutation& p, int s);
std::vector<Permutation> all_permutations(int d);  // sorted by length, then lexicographically

bool bruhat_leq(const Permutation& x, const Permutation& w);

// Regular Kazhdan–Lusztig polynomial P_{x,w}(q); zero when x is not below w.
LaurentPoly kl_polynomial(const Permutation& x, const Permutation& w);

// Unique shortest element of W_{jl} p W_{jr}.
Permutation min_double_coset_rep(const Permutation& p, ReflectionSet jl, ReflectionSet jr);
// Longest element of p W_{jr}.
Permutation longest_in_right_coset(const Permutation& p, ReflectionSet jr);

// Canonical basis coefficient of the sign-induced module for W_{jl}, at x, of the basis element
// indexed by the longest element of w W_{jr}; as a polynomial in q. x and w must be shortest
// double coset representatives whose double cosets are free.
LaurentPoly canonical_coeff(ReflectionSet jl, ReflectionSet jr, const Permutation& x, const Permutation& w);

// A rho-shifted integral weight with a composition of block sizes.
struct IntegralWeight {
  std::vector<long> entries;
  std::vector<int> blocks;
  std::string str() const;
};

// [Δ(delta) : L(simple)] in the parabolic category O of gl_d with the given Levi blocks.
Integer parabolic_verma_multiplicity(const IntegralWeight& delta, const IntegralWeight& simple);
// Same quantity through the general canonical-basis engine, bypassing the two-block fast path.
Integer parabolic_verma_multiplicity_general(const IntegralWeight& delta, const IntegralWeight& simple);

// Largest sign-module basis the general engine accepts before raising ScaleLimit.
inline constexpr std::size_t kMaxModuleRank = 60000;

struct KLKey {
  int d;
  Permutation x, w;
  ReflectionSet jl, jr;
  auto operator<=>(const KLKey&) const = default;
};

// In-process store of computed polynomials with an optional file image.
class KLCache {
 public:
  std::optional<LaurentPoly> find(const KLKey& k) const;
  void insert(const KLKey& k, const LaurentPoly& p);
  std::size_t size() const;
  void clear();
  // Missing files are fine; malformed lines raise Parse errors naming the line.
  void load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  static std::string format_record(const KLKey& k, const LaurentPoly& p);
  static std::pair<KLKey, LaurentPoly> parse_record(std::string_view line);

 private:
  mutable std::shared_mutex mu_;
  std::map<KLKey, LaurentPoly> map_;
};

KLCache& kl_cache();

}  // namespace fockcat
