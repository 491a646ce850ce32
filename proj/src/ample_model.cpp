#include "mgn/ample_model.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mgn {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Identity: return "Identity";
    case ModelKind::UpsilonPs: return "UpsilonPs";
    case ModelKind::UpsilonT: return "UpsilonT";
    case ModelKind::Unclassified: return "Unclassified";
  }
  return "?";
}

std::string to_string(UnclassifiedReason r) {
  switch (r) {
    case UnclassifiedReason::None: return "None";
    case UnclassifiedReason::OutsideRegion: return "OutsideRegion";
    case UnclassifiedReason::SearchCapped: return "SearchCapped";
    case UnclassifiedReason::ExcludedCase: return "ExcludedCase";
    case UnclassifiedReason::PushforwardOnly: return "PushforwardOnly";
    case UnclassifiedReason::Ambiguous: return "Ambiguous";
  }
  return "?";
}

std::string AmpleModelResult::label() const {
  switch (model) {
    case ModelKind::UpsilonT: return "UpsilonT" + T.to_string();
    case ModelKind::Unclassified: return "Unclassified(" + to_string(reason) + ")";
    default: return to_string(model);
  }
}

namespace {

bool excluded(const MarkedGenus& amb, std::initializer_list<std::pair<int, int>> cases) {
  for (auto [g, n] : cases)
    if (amb.is(g, n)) return true;
  return false;
}

AmpleModelResult finish(ModelKind k, Certificate cert, TSubset T = {},
                        UnclassifiedReason reason = UnclassifiedReason::None) {
  AmpleModelResult r;
  r.model = k;
  r.T = std::move(T);
  r.reason = reason;
  r.certificate = std::move(cert);
  return r;
}

// Hypotheses of the chamber description; fills T from the equality cases.
bool chamber_hypotheses(const AdjointParams& p, Certificate& cert, TSubset& T) {
  const auto& amb = p.ambient;
  bool ok = true;
  if (!p.alphas.empty()) {
    auto [lo, hi] = std::minmax_element(p.alphas.begin(), p.alphas.end(),
                                        [](const auto& x, const auto& y) { return x.second < y.second; });
    auto q = evaluate("spread max α - min α < 1/3", hi->second - lo->second, "<", Rational(1, 3));
    ok = ok && q.holds;
    cert.checks.push_back(q);
    if (p.alpha_irr == 1) {
      auto z = evaluate("α_irr = 1 requires min α > 0", lo->second, ">", 0);
      ok = ok && z.holds;
      cert.checks.push_back(z);
    }
  }
  if (amb.g >= 2) {
    auto q = evaluate("(7-a)/10 <= α_irr", (7 - p.a) / 10, "<=", p.alpha_irr);
    ok = ok && q.holds;
    cert.checks.push_back(q);
    if (q.lhs == q.rhs) T.insert(BoundaryIndex::irr());
  }
  for (const auto& np : neighbor_pairs(amb)) {
    Rational lhs = (7 - p.a + p.alpha(np.lower) + p.alpha(np.upper)) / 12;
    auto q = evaluate("(7-a+α_i+α_{i+1})/12 <= α_irr for " + np.to_string(), lhs, "<=", p.alpha_irr);
    ok = ok && q.holds;
    cert.checks.push_back(q);
    if (q.lhs == q.rhs) {
      T.insert(np.lower);
      T.insert(np.upper);
    }
  }
  return ok;
}

}  // namespace

AmpleModelResult classify(const AdjointParams& p, const ClassifyOptions& opts) {
  if (p.space != Space::Mgn) throw DomainError("classify expects parameters on Mgn");
  p.validate();
  const auto& amb = p.ambient;
  if (!amb.stable()) throw DomainError(amb.to_string() + " is not stable");
  const auto tail = elliptic_tail_index(amb);
  const Rational& a = p.a;
  const Rational& ai = p.alpha_irr;
  const Rational ell_wall = (9 - a + p.alpha(*tail)) / 12;

  Certificate cert;
  if (adjoint_fnef_closed_form(p, NefMode::Ample, &cert.checks)) {
    cert.clause = "A";
    return finish(ModelKind::Identity, std::move(cert));
  }
  if (!excluded(amb, {{1, 1}, {2, 0}})) {
    std::vector<Inequality> log;
    if (adjoint_fnef_closed_form(p, NefMode::NefEllOnly, &log)) {
      cert.clause = "B";
      cert.checks = std::move(log);
      return finish(ModelKind::UpsilonPs, std::move(cert));
    }
  }
  if (excluded(amb, {{1, 1}, {2, 0}, {1, 2}})) {
    cert.clause = "none";
    cert.notes.push_back("only the F-ample test applies on " + amb.to_string());
    return finish(ModelKind::Unclassified, std::move(cert), {}, UnclassifiedReason::ExcludedCase);
  }

  Certificate chamber;
  TSubset T;
  if (chamber_hypotheses(p, chamber, T)) {
    const Rational ps_wall = (9 - a) / 12;
    if (ai > ell_wall) {
      chamber.clause = "C1";
      chamber.checks.push_back(evaluate("α_irr > (9-a+α_{1,∅})/12", ai, ">", ell_wall));
      return finish(ModelKind::Identity, std::move(chamber));
    }
    if (ai > ps_wall) {
      chamber.clause = "C2";
      chamber.checks.push_back(evaluate("α_irr > (9-a)/12", ai, ">", ps_wall));
      chamber.checks.push_back(evaluate("α_irr <= (9-a+α_{1,∅})/12", ai, "<=", ell_wall));
      return finish(ModelKind::UpsilonPs, std::move(chamber));
    }
    chamber.clause = "C3";
    chamber.checks.push_back(evaluate("α_irr <= (9-a)/12", ai, "<=", ps_wall));
    if (T.empty()) chamber.notes.push_back("T is empty: the contraction for the empty set is the pseudostable space");
    return finish(ModelKind::UpsilonT, std::move(chamber), T);
  }

  // Outside the chamber description: search the admissible subsets.
  cert.checks.insert(cert.checks.end(), chamber.checks.begin(), chamber.checks.end());
  const Rational top = (10 - a) / 12;
  auto below_top = evaluate("α_irr <= (10-a)/12", ai, "<=", top);
  cert.checks.push_back(below_top);
  if (!below_top.holds) {
    cert.clause = "none";
    return finish(ModelKind::Unclassified, std::move(cert), {}, UnclassifiedReason::OutsideRegion);
  }
  std::vector<TSubset> candidates;
  try {
    candidates = enumerate_admissible(amb, opts.search_cap);
  } catch (const DomainError& e) {
    cert.clause = "D";
    cert.notes.push_back(e.what());
    return finish(ModelKind::Unclassified, std::move(cert), {}, UnclassifiedReason::SearchCapped);
  }
  const AdjointParams q = pushforward_params(p);
  std::vector<TSubset> hits;
  for (const auto& S : candidates)
    if (ps_adjoint_fnef_for_T(q, S)) hits.push_back(S);
  cert.clause = "D";
  auto under_ell = evaluate("α_irr <= (9-a+α_{1,∅})/12", ai, "<=", ell_wall);
  cert.checks.push_back(under_ell);
  if (hits.empty()) return finish(ModelKind::Unclassified, std::move(cert), {}, UnclassifiedReason::OutsideRegion);
  if (hits.size() > 1) {
    for (const auto& h : hits) cert.notes.push_back("matching subset " + h.to_string());
    return finish(ModelKind::Unclassified, std::move(cert), {}, UnclassifiedReason::Ambiguous);
  }
  if (!under_ell.holds) {
    cert.pushforward_T = hits.front();
    cert.notes.push_back("the pushforward has ample model for " + hits.front().to_string() +
                         "; the class itself is not characterized here");
    return finish(ModelKind::Unclassified, std::move(cert), {}, UnclassifiedReason::PushforwardOnly);
  }
  return finish(ModelKind::UpsilonT, std::move(cert), hits.front());
}

bool uniqueness_check(const AdjointParams& p, const AmpleModelResult& r) {
  if (r.model != ModelKind::UpsilonT) throw DomainError("uniqueness check needs an UpsilonT result");
  const auto tail = elliptic_tail_index(p.ambient);
  if (p.alpha_irr > (9 - p.a + p.alpha(*tail)) / 12) return false;
  return verdict_matches_T(from_adjoint(pushforward_params(p)), r.T);
}

std::vector<Rational> RationalRange::values() const {
  if (step <= 0) throw DomainError("grid step must be positive");
  if (from > to) throw DomainError("empty grid range");
  std::vector<Rational> out;
  for (Rational x = from; x <= to; x += step) out.push_back(x);
  return out;
}

std::size_t GridSpec::profile_count() const {
  if (uniform_alpha) return uniform_alpha->values().size();
  return profiles.size();
}

std::vector<AdjointParams> GridSpec::points() const {
  if (uniform_alpha.has_value() == !profiles.empty())
    throw DomainError("grid needs exactly one of a uniform α range or explicit profiles");
  std::vector<AdjointParams> out;
  const auto irr_values = alpha_irr.values();
  for (const auto& av : a.values()) {
    auto emit = [&](const AdjointParams& base) {
      for (const auto& x : irr_values) {
        AdjointParams p = base;
        p.a = av;
        p.alpha_irr = x;
        out.push_back(std::move(p));
      }
    };
    if (uniform_alpha) {
      for (const auto& al : uniform_alpha->values()) emit(AdjointParams::uniform(Space::Mgn, ambient, av, 0, al));
    } else {
      for (const auto& prof : profiles) {
        AdjointParams base(Space::Mgn, ambient);
        base.alphas = prof;
        emit(base);
      }
    }
  }
  return out;
}

std::vector<ChamberRecord> sweep(const GridSpec& grid, unsigned threads, const ClassifyOptions& opts) {
  const auto pts = grid.points();
  for (const auto& p : pts) p.validate();
  const std::size_t per_profile = grid.alpha_irr.values().size();
  const std::size_t profiles = grid.profile_count();
  std::vector<std::optional<ChamberRecord>> slots(pts.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pts.size())));
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto work = [&] {
    try {
      for (std::size_t k = next++; k < pts.size(); k = next++) {
        std::size_t profile = (k / per_profile) % profiles;
        slots[k] = ChamberRecord{k, profile, pts[k], classify(pts[k], opts)};
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next = pts.size();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  std::vector<ChamberRecord> out;
  out.reserve(pts.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::map<std::string, std::size_t> summarize(const std::vector<ChamberRecord>& records) {
  std::map<std::string, std::size_t> out;
  for (const auto& r : records) ++out[r.result.label()];
  return out;
}

}  // namespace mgn
