#pragma once

#include "fockcat/orders.hpp"

#include <map>

namespace fockcat {

// sum_s a_s varpi_s + sum_b r_b alpha_b
struct FockWeight {
  std::map<int, Integer> fundamental;
  std::map<int, Integer> roots;

  void add_fundamental(int s, const Integer& k);
  void add_root(int b, const Integer& k);
  bool operator==(const FockWeight&) const = default;
  // <h_i, this>, with <h_i, alpha_b> the Cartan matrix entry.
  Integer pairing(int i) const;
  std::string str() const;
};

FockWeight operator-(const FockWeight& a, const FockWeight& b);

using FockVector = FormalCombination<Multipartition>;

FockWeight weight_of(const Multipartition& lambda, const SignedTypeFactor& f);
// Weight of the first `prefix` tensor factors.
FockWeight partial_weight(const Multipartition& lambda, const SignedTypeFactor& f, int prefix);

FockVector f_action(int i, const Multipartition& lambda, const SignedTypeFactor& f);
FockVector e_action(int i, const Multipartition& lambda, const SignedTypeFactor& f);
FockVector f_action(int i, const FockVector& v, const SignedTypeFactor& f);
FockVector e_action(int i, const FockVector& v, const SignedTypeFactor& f);

bool s_order_leq(const Multipartition& mu, const Multipartition& lambda, const SignedTypeFactor& f);

// Weight basis of the truncation: all multipartitions with at most `bound` boxes.
std::vector<Multipartition> truncated_basis(const SignedTypeFactor& f, int bound);

}  // namespace fockcat
