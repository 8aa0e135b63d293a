#pragma once

#include "fockcat/core.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace fockcat {

// Shifts sigma and 0/1 signs c, one pair per slot.
struct SignedTypeFactor {
  std::vector<int> sigma;
  std::vector<int> c;

  int arity() const { return static_cast<int>(sigma.size()); }
  bool operator==(const SignedTypeFactor&) const = default;
  std::string str() const;  // "0,1;0,1"
  static SignedTypeFactor parse(std::string_view text);
};

enum class AdmissibleKind { Lower, Upper, Inadmissible };
const char* admissible_kind_name(AdmissibleKind k);

struct AdmissibilityVerdict {
  AdmissibleKind kind = AdmissibleKind::Inadmissible;
  std::optional<int> swap_index;
  bool operator==(const AdmissibilityVerdict&) const = default;
};

AdmissibilityVerdict classify_admissible(const std::vector<int>& c);

// lambda <= mu in the inverse dominance order of type f.
bool inv_dominance_leq(const Multipartition& lambda, const Multipartition& mu, const SignedTypeFactor& f);

bool in_restricted(const Multipartition& lambda, const SignedTypeFactor& f, int m1, int m2);

// {mu : mu <= lambda} for lower admissible c. `extra` inflates the candidate bounds.
std::vector<Multipartition> down_set(const Multipartition& lambda, const SignedTypeFactor& f, int extra = 0);
// {mu : lambda <= mu} for upper admissible c.
std::vector<Multipartition> up_set(const Multipartition& lambda, const SignedTypeFactor& f, int extra = 0);

// {nu : mu <= nu <= lambda}, sorted.
std::vector<Multipartition> interval(const Multipartition& lambda, const Multipartition& mu,
                                     const SignedTypeFactor& f);

// mu ⊴ lambda in the interpolated dominance order; `extra_rank` enlarges the auxiliary rank.
bool interpolated_dominance_leq(const Multipartition& mu, const Multipartition& lambda, int extra_rank = 0);

}  // namespace fockcat
