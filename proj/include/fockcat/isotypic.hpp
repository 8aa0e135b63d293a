#pragma once

#include "fockcat/core.hpp"

#include <map>

namespace fockcat {

struct Bipartition {
  Partition cov;
  Partition contra;
  auto operator<=>(const Bipartition&) const = default;
  bool operator==(const Bipartition&) const = default;
  std::string str() const;
};

enum class TensorDirection { V, Vdual };

using BipartitionCombination = std::map<Bipartition, Integer>;

Integer lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// Generic-rank decomposition of V ⊗ X(α,β) or V* ⊗ X(α,β); multiplicity free.
std::vector<Bipartition> tensor_with_V(const Bipartition& bp, TensorDirection dir);

// Decomposition of S^π(V) ⊗ X(α,β) (or with V*) at generic rank.
BipartitionCombination schur_tensor(const Partition& pi, TensorDirection dir, const Bipartition& bp);

// Root-lattice displacement: per block k, (|λ_{2k-1}| - |λ_{2k}|) of mu minus that of lambda.
std::vector<int> block_displacement(const Multipartition& lambda, const Multipartition& mu);
// Height of omega(lambda) - omega(mu) in simple roots, or nullopt if it is not a nonnegative combination.
std::optional<int> displacement_height(const std::vector<int>& d);

// Multiplicity r(λ, μ) of X(μ) in the parabolic Verma M(λ) = Sym(u⁻) ⊗ X(λ).
Integer verma_isotypic(const Multipartition& lambda, const Multipartition& mu, int n);

// Σ_μ r(λ, μ) e^μ over μ whose root height below λ is at most depth.
FormalCombination<Multipartition> verma_character_truncated(const Multipartition& lambda, int depth, int n);

}  // namespace fockcat
