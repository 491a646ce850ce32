#include "mgn/sampling.hpp"

#include <deque>

#include "mgn/index_set.hpp"

namespace mgn {

int Sampler::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Rational Sampler::grid(int lo, int hi, int den) { return make_rational(uniform_int(lo, hi), den); }

AdjointParams Sampler::adjoint(Space s, const MarkedGenus& amb) {
  AdjointParams p(s, amb);
  const bool focused = uniform_int(0, 1) == 0;
  p.a = focused ? Rational(0) : grid(0, 48);
  p.alpha_irr = focused ? grid(16, 24) : grid(0, 24);
  for (const auto& idx : pair_indices(s, amb)) p.alphas[idx] = grid(0, 24);
  return p;
}

AdjointParams Sampler::on_elliptic_wall(const MarkedGenus& amb) {
  AdjointParams p = adjoint(Space::Mgn, amb);
  const auto tail = elliptic_tail_index(amb);
  if (!tail) throw DomainError("no elliptic tail index on " + amb.to_string());
  // a ≤ 2 keeps (9-a+α)/12 inside [0,1].
  p.alpha_irr = (9 - p.a + p.alphas[*tail]) / 12;
  return p;
}

std::optional<AdjointParams> Sampler::on_T_walls(const MarkedGenus& amb, const TSubset& T) {
  AdjointParams p = adjoint(Space::MgnPs, amb);
  if (T.has_irr()) {
    // (7-a)/10 = α_irr forces α_irr ≤ 7/10.
    p.alpha_irr = grid(0, 16);
    p.a = 7 - 10 * p.alpha_irr;
  } else if (!T.empty()) {
    // Pick the pair sum first so that it lies in [0,2].
    p.alpha_irr = (grid(0, 48) + 7 - p.a) / 12;
  }
  const Rational s = 12 * p.alpha_irr - 7 + p.a;
  std::map<BoundaryIndex, Rational> fixed;
  auto pairs = neighbor_pairs(amb);
  for (const auto& start : pairs) {
    if (!T.contains(start.lower) || !T.contains(start.upper) || fixed.count(start.lower)) continue;
    Rational lo = s - 1 > 0 ? Rational(s - 1) : Rational(0);
    Rational hi = s < 1 ? s : Rational(1);
    if (lo > hi) return std::nullopt;
    Rational x = start.self_paired() ? Rational(s / 2) : lo + (hi - lo) * grid(0, 24);
    fixed[start.lower] = x;
    std::deque<BoundaryIndex> queue{start.lower};
    while (!queue.empty()) {
      BoundaryIndex u = queue.front();
      queue.pop_front();
      for (const auto& np : pairs) {
        if (!T.contains(np.lower) || !T.contains(np.upper)) continue;
        if (np.lower != u && np.upper != u) continue;
        BoundaryIndex v = np.lower == u ? np.upper : np.lower;
        Rational want = s - fixed[u];
        auto it = fixed.find(v);
        if (it == fixed.end()) {
          fixed[v] = want;
          queue.push_back(v);
        } else if (it->second != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (const auto& [idx, val] : fixed) {
    if (val < 0 || val > 1) return std::nullopt;
    p.alphas[idx] = val;
  }
  if (p.alpha_irr < 0 || p.alpha_irr > 1 || p.a < 0) return std::nullopt;
  return p;
}

DivisorClass Sampler::divisor(Space s, const MarkedGenus& amb, int terms) {
  DivisorClass L(s, amb);
  L.set_lambda(grid(-48, 48, 12));
  auto idx = enumerate_indices(amb);
  for (int k = 0; k < terms && !idx.empty(); ++k) {
    const auto& x = idx[static_cast<std::size_t>(uniform_int(0, static_cast<int>(idx.size()) - 1))];
    if (s == Space::MgnPs && is_elliptic_tail_index(x, amb)) continue;
    L.add(x, grid(-48, 48, 12));
  }
  return L;
}

}  // namespace mgn
