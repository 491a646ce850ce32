#pragma once

#include <vector>

#include "mgn/divisor.hpp"
#include "mgn/fcurves.hpp"

namespace mgn {

// The contraction for T splits into divisorial steps (one per mark j with
// {[0,{j}],[1,{j}]} in the divisorial part) followed by a small contraction.
struct FactorizationDescriptor {
  std::vector<int> divisorial_steps;
  std::vector<BridgeType> small_contraction_generators;
  bool k_negative_small;
  bool small_is_identity() const { return small_contraction_generators.empty(); }
};

bool is_q_factorial(const TSubset& T, const MarkedGenus& amb);
// Equivalent to Q-factoriality for these spaces.
bool is_q_gorenstein(const TSubset& T, const MarkedGenus& amb);
bool descends(const DivisorClass& L, const TSubset& T);
FactorizationDescriptor factorize(const TSubset& T, const MarkedGenus& amb);

}  // namespace mgn
