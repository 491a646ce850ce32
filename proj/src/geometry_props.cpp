#include "mgn/geometry_props.hpp"

namespace mgn {

namespace {

void reject_20(const MarkedGenus& amb) {
  if (amb.is(2, 0)) throw DomainError("undefined on (2,0)");
}

}  // namespace

bool is_q_factorial(const TSubset& T, const MarkedGenus& amb) {
  reject_20(amb);
  return admissible_reduction(T, amb) == divisorial_part(T, amb);
}

bool is_q_gorenstein(const TSubset& T, const MarkedGenus& amb) { return is_q_factorial(T, amb); }

bool descends(const DivisorClass& L, const TSubset& T) {
  reject_20(L.ambient());
  return is_T_compatible(L, admissible_reduction(T, L.ambient()));
}

FactorizationDescriptor factorize(const TSubset& T, const MarkedGenus& amb) {
  reject_20(amb);
  const TSubset adm = admissible_reduction(T, amb);
  const TSubset div = divisorial_part(T, amb);
  FactorizationDescriptor out;
  for (int j = 1; j <= amb.n; ++j) {
    auto lo = BoundaryIndex::try_pair(0, MarkSet{1} << (j - 1), amb);
    if (lo && div.contains(*lo)) {
      auto hi = BoundaryIndex::try_pair(1, MarkSet{1} << (j - 1), amb);
      if (hi && div.contains(*hi)) out.divisorial_steps.push_back(j);
    }
  }
  for (const auto& B : bridge_curves(amb, &adm))
    if (!div.includes(B.type())) out.small_contraction_generators.push_back(B);

  bool triple = false;
  for (int j = 1; j <= amb.n && !triple; ++j) {
    MarkSet J = MarkSet{1} << (j - 1);
    auto x = BoundaryIndex::try_pair(0, J, amb), y = BoundaryIndex::try_pair(1, J, amb),
         z = BoundaryIndex::try_pair(2, J, amb);
    triple = x && y && z && adm.contains(*x) && adm.contains(*y) && adm.contains(*z);
  }
  out.k_negative_small = !triple || amb.is(3, 1) || amb.is(3, 2) || amb.is(2, 2);
  return out;
}

}  // namespace mgn
