#pragma once

// Closed-form F-curve formulas written independently of the library's vectors.

#include <set>
#include <vector>

#include "mgn/fcurves.hpp"

namespace oracle {

using namespace mgn;

// Every raw parameter tuple, built straight from the catalogue's ranges.
struct RawTuple {
  FCurveFamily family;
  std::vector<Part> parts;
};

inline std::vector<RawTuple> oracle_tuples(const MarkedGenus& amb) {
  const int g = amb.g;
  const MarkSet full = full_marks(amb.n);
  std::vector<RawTuple> out;
  auto nonzero = [](int i, MarkSet I) { return i != 0 || I != 0; };
  if (g >= 1) out.push_back({FCurveFamily::Ell, {}});
  if (g >= 3) out.push_back({FCurveFamily::FIrr, {}});
  for (int i = 0; i <= g - 2; ++i)
    for (MarkSet I = 0; I <= full; ++I)
      if (nonzero(i, I)) out.push_back({FCurveFamily::F3, {{i, I}}});
  for (int i = 1; i <= g - 1; ++i)
    for (MarkSet I = 0; I <= full; ++I) out.push_back({FCurveFamily::Fs, {{i, I}}});
  for (int i = 0; i <= g; ++i)
    for (int j = 0; i + j <= g - 1; ++j)
      for (MarkSet I = 0; I <= full; ++I)
        for (MarkSet J = 0; J <= full; ++J)
          if (!(I & J) && nonzero(i, I) && nonzero(j, J)) out.push_back({FCurveFamily::F5, {{i, I}, {j, J}}});
  for (int i = 0; i <= g; ++i)
    for (int j = 0; i + j <= g; ++j)
      for (int k = 0; i + j + k <= g; ++k)
        for (MarkSet I = 0; I <= full; ++I)
          for (MarkSet J = 0; J <= full; ++J)
            for (MarkSet K = 0; K <= full; ++K) {
              if ((I & J) || (I & K) || (J & K)) continue;
              if (!nonzero(i, I) || !nonzero(j, J) || !nonzero(k, K)) continue;
              if (!nonzero(g - i - j - k, full & ~(I | J | K))) continue;
              out.push_back({FCurveFamily::F6, {{i, I}, {j, J}, {k, K}}});
            }
  return out;
}

// Intersection number from the closed formulas, with L = aλ - Σ b δ.
inline Rational oracle_intersect(const DivisorClass& L, const RawTuple& t) {
  const auto& amb = L.ambient();
  auto b = [&](int i, MarkSet I) -> Rational { return -L.coefficient(canonical_index(i, I, amb)); };
  const Rational a = L.lambda(), birr = -L.irr();
  const auto& p = t.parts;
  switch (t.family) {
    case FCurveFamily::Ell: return a - 12 * birr + b(1, 0);
    case FCurveFamily::FIrr: return birr;
    case FCurveFamily::F3: return b(p[0].genus, p[0].marks);
    case FCurveFamily::Fs: return 2 * birr - b(p[0].genus, p[0].marks);
    case FCurveFamily::F5:
      return b(p[0].genus, p[0].marks) + b(p[1].genus, p[1].marks) -
             b(p[0].genus + p[1].genus, p[0].marks | p[1].marks);
    case FCurveFamily::F6: {
      const auto &x = p[0], &y = p[1], &z = p[2];
      return b(x.genus, x.marks) + b(y.genus, y.marks) + b(z.genus, z.marks) -
             b(x.genus + y.genus, x.marks | y.marks) - b(x.genus + z.genus, x.marks | z.marks) -
             b(y.genus + z.genus, y.marks | z.marks) + b(x.genus + y.genus + z.genus, x.marks | y.marks | z.marks);
    }
  }
  return 0;
}

// The functional evaluated on every basis class; equal keys mean numerically equal curves.
inline std::vector<Rational> oracle_key(const MarkedGenus& amb, const RawTuple& t) {
  std::vector<Rational> key;
  key.push_back(oracle_intersect(DivisorClass::hodge(Space::Mgn, amb), t));
  for (const auto& idx : enumerate_indices(amb)) key.push_back(oracle_intersect(DivisorClass::basis(Space::Mgn, amb, idx), t));
  return key;
}

inline std::size_t oracle_class_count(const MarkedGenus& amb) {
  std::set<std::vector<Rational>> keys;
  for (const auto& t : oracle_tuples(amb)) keys.insert(oracle_key(amb, t));
  return keys.size();
}

}  // namespace oracle
