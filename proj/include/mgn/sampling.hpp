#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "mgn/divisor.hpp"

namespace mgn {

// Seeded generator for rational test points. Values are k/24 so that walls
// with denominators 10 and 12 are hit often. The mapping from the engine's
// output is fixed here, so a seed gives the same points on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);
  Rational grid(int lo, int hi, int den = 24);

  // Half the draws put a = 0 and α_irr in the upper third, where the walls are.
  AdjointParams adjoint(Space s, const MarkedGenus& amb);
  // α_irr = (9-a+α_{1,∅})/12 exactly.
  AdjointParams on_elliptic_wall(const MarkedGenus& amb);
  // Parameters on MgnPs with equality in the contraction inequalities for
  // every minimal subset of T; nullopt when the random choices conflict.
  std::optional<AdjointParams> on_T_walls(const MarkedGenus& amb, const TSubset& T);
  DivisorClass divisor(Space s, const MarkedGenus& amb, int terms);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mgn
