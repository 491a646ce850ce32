#include <doctest.h>

#include <algorithm>

#include "mgn/ample_model.hpp"
#include "mgn/sampling.hpp"

using namespace mgn;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

BoundaryIndex P(int i, std::initializer_list<int> I, const MarkedGenus& amb) {
  return canonical_index(i, mark_set(I), amb);
}

// Chamber hypotheses recomputed from scratch; `eq` collects the equality cases.
bool chamber_oracle(const AdjointParams& p, TSubset& eq) {
  Rational lo = 2, hi = -1;
  for (const auto& [idx, v] : p.alphas) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool ok = hi - lo < R(1, 3);
  if (p.alpha_irr == 1 && lo <= 0) ok = false;
  if (p.ambient.g >= 2) {
    const Rational w = (7 - p.a) / 10;
    if (w > p.alpha_irr) ok = false;
    if (w == p.alpha_irr) eq.insert(BoundaryIndex::irr());
  }
  for (const auto& np : neighbor_pairs(p.ambient)) {
    const Rational w = (7 - p.a + p.alphas.at(np.lower) + p.alphas.at(np.upper)) / 12;
    if (w > p.alpha_irr) ok = false;
    if (w == p.alpha_irr) {
      eq.insert(np.lower);
      eq.insert(np.upper);
    }
  }
  return ok;
}

Rational ell_wall(const AdjointParams& p) { return (9 - p.a + p.alphas.at(*elliptic_tail_index(p.ambient))) / 12; }

const std::vector<MarkedGenus> kAmbients{{2, 1}, {3, 1}, {2, 2}, {4, 0}, {1, 3}, {3, 0}};

}  // namespace

TEST_SUITE("ample_model") {

TEST_CASE("classify examples on (3,1)") {
  MarkedGenus amb(3, 1);
  auto id = classify(AdjointParams::uniform(Space::Mgn, amb, 0, 1, 1));
  CHECK(id.model == ModelKind::Identity);
  CHECK(id.certificate.clause == "A");

  auto ps = classify(AdjointParams::uniform(Space::Mgn, amb, 0, R(4, 5), 1));
  CHECK(ps.model == ModelKind::UpsilonPs);
  CHECK(ps.certificate.clause == "C2");

  auto p = AdjointParams::uniform(Space::Mgn, amb, 0, R(7, 10), R(7, 10));
  auto t = classify(p);
  REQUIRE(t.model == ModelKind::UpsilonT);
  CHECK(t.certificate.clause == "C3");
  CHECK(t.T == (TSubset{BoundaryIndex::irr(), P(0, {1}, amb), P(1, {1}, amb)}));
  CHECK(is_admissible(t.T, amb));
  CHECK(uniqueness_check(p, t));
  CHECK(t.label() == "UpsilonT{irr [0,{1}] [1,{1}]}");
  // The certificate carries both sides of every inequality.
  bool saw_irr_wall = false;
  for (const auto& q : t.certificate.checks)
    if (q.name.find("(7-a)/10") != std::string::npos) {
      saw_irr_wall = true;
      CHECK(q.lhs == R(7, 10));
      CHECK(q.rhs == R(7, 10));
      CHECK(q.holds);
    }
  CHECK(saw_irr_wall);
}

TEST_CASE("leaving the wall changes T and the old T fails the check") {
  MarkedGenus amb(3, 1);
  auto p = AdjointParams::uniform(Space::Mgn, amb, 0, R(7, 10), R(7, 10));
  auto r = classify(p);
  REQUIRE(r.model == ModelKind::UpsilonT);
  for (int sign : {1, -1}) {
    auto q = p;
    q.alphas[P(0, {1}, amb)] += sign * R(1, 1000);
    auto s = classify(q);
    CHECK_FALSE((s.model == ModelKind::UpsilonT && s.T == r.T));
    CHECK_FALSE(uniqueness_check(q, r));
  }
  auto down = p;
  down.alphas[P(0, {1}, amb)] -= R(1, 1000);
  auto s = classify(down);
  REQUIRE(s.model == ModelKind::UpsilonT);
  CHECK(s.T == TSubset{BoundaryIndex::irr()});
  CHECK(uniqueness_check(down, s));
}

TEST_CASE("a strictly larger T fails the check") {
  MarkedGenus amb(3, 1);
  auto p = AdjointParams::uniform(Space::Mgn, amb, 0, R(3, 4), 1);
  auto r = classify(p);
  REQUIRE(r.model == ModelKind::UpsilonT);
  TSubset pair{P(0, {1}, amb), P(1, {1}, amb)};
  CHECK(r.T == pair);
  CHECK(uniqueness_check(p, r));
  auto bigger = r;
  bigger.T.insert(BoundaryIndex::irr());
  REQUIRE(is_admissible(bigger.T, amb));
  CHECK_FALSE(uniqueness_check(p, bigger));
  CHECK_THROWS_AS(uniqueness_check(p, classify(AdjointParams::uniform(Space::Mgn, amb, 0, 1, 1))), DomainError);
}

TEST_CASE("on the pseudostable wall with no equalities the result is UpsilonT of the empty set") {
  MarkedGenus amb(3, 1);
  auto p = AdjointParams::uniform(Space::Mgn, amb, 0, R(3, 4), R(9, 10));
  auto r = classify(p);
  REQUIRE(r.model == ModelKind::UpsilonT);
  CHECK(r.T.empty());
  CHECK(r.label() == "UpsilonT{}");
  CHECK(r.certificate.clause == "C3");
  CHECK_FALSE(r.certificate.notes.empty());
  CHECK(uniqueness_check(p, r));
}

TEST_CASE("excluded ambients stop early") {
  for (auto [g, n] : {std::pair{1, 1}, {2, 0}}) {
    MarkedGenus amb(g, n);
    CHECK(classify(AdjointParams::uniform(Space::Mgn, amb, 0, 1, 1)).model == ModelKind::Identity);
    auto r = classify(AdjointParams::uniform(Space::Mgn, amb, 0, R(3, 4), R(1, 2)));
    CHECK(r.model == ModelKind::Unclassified);
    CHECK(r.reason == UnclassifiedReason::ExcludedCase);
  }
  // (1,2) still gets the nef-except-Ell test.
  MarkedGenus a12(1, 2);
  Sampler rng(6);
  bool saw_b = false;
  for (int k = 0; k < 400; ++k) {
    auto p = rng.adjoint(Space::Mgn, a12);
    auto r = classify(p);
    CHECK(r.certificate.clause != "C1");
    CHECK(r.certificate.clause != "C2");
    CHECK(r.certificate.clause != "C3");
    CHECK(r.certificate.clause != "D");
    if (r.certificate.clause == "B") {
      saw_b = true;
      CHECK(r.model == ModelKind::UpsilonPs);
    }
    if (r.model == ModelKind::Unclassified) CHECK(r.reason == UnclassifiedReason::ExcludedCase);
  }
  CHECK(saw_b);
}

TEST_CASE("classify rejects invalid input") {
  MarkedGenus amb(3, 1);
  CHECK_THROWS_AS(classify(AdjointParams::uniform(Space::MgnPs, amb, 0, 1, 1)), DomainError);
  CHECK_THROWS_AS(classify(AdjointParams::uniform(Space::Mgn, amb, 0, 2, 1)), DomainError);
}

TEST_CASE("search outside the chamber description") {
  // Pinned point where the chamber hypotheses fail but exactly one T matches.
  MarkedGenus amb(3, 1);
  AdjointParams p(Space::Mgn, amb);
  p.a = 0;
  p.alpha_irr = R(19, 24);
  p.alphas = {{P(0, {1}, amb), R(1, 8)}, {P(1, {}, amb), R(7, 8)}, {P(1, {1}, amb), R(7, 24)}};
  auto r = classify(p);
  CHECK(r.certificate.clause == "D");
  REQUIRE(r.model == ModelKind::UpsilonT);
  CHECK(uniqueness_check(p, r));

  ClassifyOptions tiny;
  tiny.search_cap = 1;
  auto capped = classify(p, tiny);
  CHECK(capped.model == ModelKind::Unclassified);
  CHECK(capped.reason == UnclassifiedReason::SearchCapped);

  // Above (10-a)/12 nothing is searched.
  AdjointParams high(Space::Mgn, amb);
  high.a = 0;
  high.alpha_irr = R(23, 24);
  high.alphas = {{P(0, {1}, amb), R(19, 24)}, {P(1, {}, amb), R(1)}, {P(1, {1}, amb), R(1, 2)}};
  auto rh = classify(high);
  CHECK(rh.certificate.clause == "none");
  CHECK(rh.model == ModelKind::Unclassified);
  CHECK(rh.reason == UnclassifiedReason::OutsideRegion);
}

TEST_CASE("every result agrees with brute force") {
  for (const auto& amb : kAmbients) {
    Sampler rng(1000 + static_cast<std::uint64_t>(amb.g * 10 + amb.n));
    for (int k = 0; k < 300; ++k) {
      auto p = k % 3 == 0 ? rng.on_elliptic_wall(amb) : rng.adjoint(Space::Mgn, amb);
      auto r = classify(p);
      CAPTURE(amb.to_string());
      CAPTURE(r.label());
      CAPTURE(r.certificate.clause);
      switch (r.model) {
        case ModelKind::Identity:
          CHECK(brute_force_verdict(from_adjoint(p)).status == PositivityStatus::FAmple);
          break;
        case ModelKind::UpsilonPs:
          CHECK(verdict_matches_T(from_adjoint(pushforward_params(p)), {}));
          break;
        case ModelKind::UpsilonT:
          CHECK(is_admissible(r.T, amb));
          CHECK(uniqueness_check(p, r));
          break;
        case ModelKind::Unclassified:
          CHECK(r.reason != UnclassifiedReason::None);
          break;
      }
    }
  }
}

TEST_CASE("ladder consistency with the chamber hypotheses") {
  for (const auto& amb : kAmbients) {
    Sampler rng(7 + static_cast<std::uint64_t>(amb.g * 10 + amb.n));
    for (int k = 0; k < 400; ++k) {
      auto p = k % 3 == 0 ? rng.on_elliptic_wall(amb) : rng.adjoint(Space::Mgn, amb);
      TSubset eq;
      const bool hyp = chamber_oracle(p, eq);
      auto r = classify(p);
      CAPTURE(amb.to_string());
      if (!hyp) {
        CHECK(r.certificate.clause.front() != 'C');
        continue;
      }
      if (r.certificate.clause == "A") CHECK(p.alpha_irr > ell_wall(p));
      if (r.certificate.clause == "C1") CHECK(p.alpha_irr > ell_wall(p));
      if (r.certificate.clause == "C3") {
        CHECK(p.alpha_irr <= (9 - p.a) / 12);
        CHECK(r.T == eq);
      }
      if (r.certificate.clause == "C2") {
        CHECK(p.alpha_irr > (9 - p.a) / 12);
        CHECK(p.alpha_irr <= ell_wall(p));
      }
    }
  }
}

TEST_CASE("equality walls from the sampler give the expected T") {
  // On the walls of a T the chamber clause reports that T (or, when more walls
  // happen to coincide, a superset).
  for (const auto& amb : {MarkedGenus(3, 1), MarkedGenus(2, 2), MarkedGenus(4, 0)}) {
    Sampler rng(55);
    for (const auto& T : enumerate_admissible(amb))
      for (int k = 0; k < 20; ++k) {
        auto q = rng.on_T_walls(amb, T);
        if (!q) continue;
        AdjointParams p(Space::Mgn, amb);
        p.a = q->a;
        p.alpha_irr = q->alpha_irr;
        p.alphas = q->alphas;
        p.alphas[*elliptic_tail_index(amb)] = q->alphas.begin()->second;
        auto r = classify(p);
        if (r.certificate.clause != "C3") continue;
        CAPTURE(T.to_string());
        CHECK(std::includes(r.T.begin(), r.T.end(), T.begin(), T.end()));
      }
  }
}

TEST_CASE("pushforward-only outcome is not reached on sampled points") {
  // A nonempty T forces alpha_irr <= (9-a)/12 on its bridges, below the elliptic
  // wall, so only T = {} can get there, and then clause A has already fired.
  for (const auto& amb : kAmbients) {
    Sampler rng(404);
    for (int k = 0; k < 300; ++k) {
      auto r = classify(rng.adjoint(Space::Mgn, amb));
      CHECK(r.reason != UnclassifiedReason::PushforwardOnly);
    }
  }
}

TEST_CASE("monotone degeneration across a pair wall") {
  // Uniform alpha = 1 on (3,1): the pair wall sits at alpha_irr = 3/4.
  MarkedGenus amb(3, 1);
  auto at = classify(AdjointParams::uniform(Space::Mgn, amb, 0, R(3, 4), 1));
  REQUIRE(at.model == ModelKind::UpsilonT);
  // Lower alpha slightly so the pair wall moves below 3/4: T loses exactly the pair.
  auto off = classify(AdjointParams::uniform(Space::Mgn, amb, 0, R(3, 4), R(23, 24)));
  REQUIRE(off.model == ModelKind::UpsilonT);
  CHECK(off.T.empty());
  TSubset diff;
  for (const auto& idx : at.T)
    if (!off.T.contains(idx)) diff.insert(idx);
  auto mins = minimal_subsets(amb);
  CHECK(std::find(mins.begin(), mins.end(), diff) != mins.end());
}

TEST_CASE("grid ranges") {
  RationalRange r{R(1, 2), R(1), R(1, 4)};
  CHECK(r.values() == std::vector<Rational>{R(1, 2), R(3, 4), R(1)});
  CHECK(RationalRange{R(1), R(1), R(1, 3)}.values() == std::vector<Rational>{R(1)});
  CHECK_THROWS_AS((RationalRange{R(0), R(1), R(0)}.values()), DomainError);
  CHECK_THROWS_AS((RationalRange{R(0), R(1), R(-1)}.values()), DomainError);
  CHECK_THROWS_AS((RationalRange{R(1), R(0), R(1)}.values()), DomainError);
}

TEST_CASE("grid points are row-major") {
  GridSpec grid(MarkedGenus(3, 1));
  grid.a = {R(0), R(1, 2), R(1, 2)};
  grid.alpha_irr = {R(3, 4), R(1), R(1, 4)};
  grid.uniform_alpha = RationalRange{R(1, 2), R(1), R(1, 2)};
  auto pts = grid.points();
  REQUIRE(pts.size() == 2 * 2 * 2);
  CHECK(pts[0].a == 0);
  CHECK(pts[0].alpha_irr == R(3, 4));
  CHECK(pts[1].alpha_irr == 1);
  CHECK(pts[2].alphas.begin()->second == 1);
  CHECK(pts[4].a == R(1, 2));
  CHECK(grid.profile_count() == 2);

  GridSpec both = grid;
  both.profiles.push_back({});
  CHECK_THROWS_AS(both.points(), DomainError);
  GridSpec neither(MarkedGenus(3, 1));
  neither.a = grid.a;
  neither.alpha_irr = grid.alpha_irr;
  CHECK_THROWS_AS(neither.points(), DomainError);
}

TEST_CASE("sweep along alpha_irr on (3,1)") {
  GridSpec grid(MarkedGenus(3, 1));
  grid.a = {R(0), R(0), R(1)};
  grid.alpha_irr = {R(12, 24), R(1), R(1, 24)};
  grid.uniform_alpha = RationalRange{R(1), R(1), R(1)};
  auto recs = sweep(grid, 2);
  REQUIRE(recs.size() == 13);
  std::vector<std::string> labels;
  for (const auto& rec : recs) labels.push_back(rec.result.label());
  for (std::size_t k = 0; k < 6; ++k) CHECK(labels[k] == "Unclassified(OutsideRegion)");
  CHECK(labels[6] == "UpsilonT{[0,{1}] [1,{1}]}");  // alpha_irr = 9/12
  CHECK(labels[7] == "UpsilonPs");
  CHECK(labels[8] == "UpsilonPs");  // alpha_irr = 10/12
  for (std::size_t k = 9; k < 13; ++k) CHECK(labels[k] == "Identity");
  auto summary = summarize(recs);
  CHECK(summary.at("Identity") == 4);
  CHECK(summary.at("UpsilonPs") == 2);
  CHECK(summary.at("Unclassified(OutsideRegion)") == 6);
  for (std::size_t k = 0; k < recs.size(); ++k) {
    CHECK(recs[k].index == k);
    CHECK(recs[k].result.label() == classify(recs[k].point).label());
  }
}

TEST_CASE("sweep above the elliptic wall is all Identity") {
  GridSpec grid(MarkedGenus(2, 2));
  grid.a = {R(0), R(1, 2), R(1, 4)};
  grid.alpha_irr = {R(11, 12), R(1), R(1, 24)};
  grid.uniform_alpha = RationalRange{R(1, 2), R(1), R(1, 6)};
  for (const auto& rec : sweep(grid)) {
    REQUIRE(rec.point.alpha_irr > ell_wall(rec.point));
    REQUIRE(adjoint_fnef_closed_form(rec.point, NefMode::Ample));
    CHECK(rec.result.model == ModelKind::Identity);
  }
}

TEST_CASE("a wide spread keeps the chamber clause from firing") {
  MarkedGenus amb(3, 1);
  GridSpec grid(amb);
  grid.a = {R(0), R(0), R(1)};
  grid.alpha_irr = {R(1, 2), R(3, 4), R(1, 24)};
  grid.profiles.push_back({{P(0, {1}, amb), R(0)}, {P(1, {}, amb), R(1, 2)}, {P(1, {1}, amb), R(1, 2)}});
  auto recs = sweep(grid, 1);
  CHECK(recs.size() == 7);
  for (const auto& rec : recs) {
    CHECK(rec.result.certificate.clause.front() != 'C');
    if (rec.result.model == ModelKind::Unclassified) CHECK(rec.result.reason == UnclassifiedReason::OutsideRegion);
  }
}

TEST_CASE("sweep output does not depend on the thread count") {
  GridSpec grid(MarkedGenus(2, 2));
  grid.a = {R(0), R(1, 2), R(1, 4)};
  grid.alpha_irr = {R(1, 2), R(1), R(1, 24)};
  grid.uniform_alpha = RationalRange{R(1, 2), R(1), R(1, 4)};
  auto one = sweep(grid, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    auto many = sweep(grid, t);
    REQUIRE(many.size() == one.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
      CHECK(many[k].index == one[k].index);
      CHECK(many[k].profile == one[k].profile);
      CHECK(many[k].result.label() == one[k].result.label());
      CHECK(many[k].result.certificate.clause == one[k].result.certificate.clause);
    }
  }
  CHECK(summarize(one) == summarize(sweep(grid, 4)));
}

TEST_CASE("sweep reports bad grids") {
  GridSpec grid(MarkedGenus(3, 1));
  grid.a = {R(0), R(0), R(0)};
  grid.alpha_irr = {R(1), R(1), R(1)};
  grid.uniform_alpha = RationalRange{R(1), R(1), R(1)};
  CHECK_THROWS_AS(sweep(grid), DomainError);
  grid.a.step = 1;
  grid.uniform_alpha = RationalRange{R(3, 2), R(3, 2), R(1)};
  CHECK_THROWS_AS(sweep(grid), DomainError);
}

}  // TEST_SUITE
