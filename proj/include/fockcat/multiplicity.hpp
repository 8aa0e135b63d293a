#pragma once

#include "fockcat/klengine.hpp"
#include "fockcat/strata.hpp"

namespace fockcat {

// μ ⪯ λ: on every class Γ_ℓ the restrictions compare in inverse dominance of the class type.
bool linkage_leq(const Multipartition& mu, const Multipartition& lambda, const StratumData& sd);

// Virtual row lengths per finite-rank block and the block sizes σ^♯_i + N, σ^♭_i + N.
struct VirtualMultipartition {
  std::vector<std::vector<long>> blocks;
};

// Labels with at most m boxes need N > m + 1 + max|σ^♯| + max|σ^♭|; returns that right-hand side.
int rank_bound(int m, const SignedTypeFactor& f);

VirtualMultipartition virtual_multipartition(const Multipartition& lambda, const SignedTypeFactor& f, int N);

// The ρ-shifted weight Ω(λ) of gl_{d(N)}: entry V_j - j + 1 in each block (local row j).
IntegralWeight virtual_realization(const Multipartition& lambda, const SignedTypeFactor& f, int N);

// Inverse of Ω on its image; absent for weights outside the image.
std::optional<Multipartition> devirtualize(const IntegralWeight& w, const SignedTypeFactor& f, int N);

// [Δ(Ω λ) : L(Ω μ)] at rank N for one admissible class.
Integer factor_multiplicity(const Multipartition& lambda, const Multipartition& mu, const SignedTypeFactor& f, int N);

struct MultiplicityOptions {
  int rank_buffer = 1;  // added on top of the strict rank bound
};

Integer verma_multiplicity(const Multipartition& lambda, const Multipartition& mu, const ParameterPoint& p,
                           const MultiplicityOptions& opt = {});

struct StabilizationRow {
  int part;  // 1-based class index
  int N;
  Integer at_N;
  Integer at_N_extra;
  IntegralWeight delta, simple;
};

// One row per class with the values at N and N + extra.
std::vector<StabilizationRow> stabilization_report(const Multipartition& lambda, const Multipartition& mu,
                                                   const ParameterPoint& p, int extra,
                                                   const MultiplicityOptions& opt = {});

bool check_stabilization(const Multipartition& lambda, const Multipartition& mu, const ParameterPoint& p, int extra,
                         const MultiplicityOptions& opt = {});

}  // namespace fockcat
