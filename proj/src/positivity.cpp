#include "mgn/positivity.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mgn {

std::string to_string(PositivityStatus s) {
  switch (s) {
    case PositivityStatus::FAmple: return "FAmple";
    case PositivityStatus::FNefStrictExceptEll: return "FNefStrictExceptEll";
    case PositivityStatus::FNefOnExactSet: return "FNefOnExactSet";
    case PositivityStatus::FNef: return "FNef";
    case PositivityStatus::NotFNef: return "NotFNef";
  }
  return "?";
}

Inequality evaluate(std::string name, const Rational& lhs, const std::string& relation, const Rational& rhs) {
  bool holds = false;
  if (relation == "<") holds = lhs < rhs;
  else if (relation == "<=") holds = lhs <= rhs;
  else if (relation == "=") holds = lhs == rhs;
  else if (relation == ">=") holds = lhs >= rhs;
  else if (relation == ">") holds = lhs > rhs;
  else throw DomainError("unknown relation " + relation);
  return Inequality{std::move(name), lhs, relation, rhs, holds};
}

namespace {

// Keeps one instance per condition family: a failing one if any, else the tightest.
class ConditionGroup {
 public:
  void consider(Inequality q) {
    Rational slack = slack_of(q);
    const bool replace = !rep_ || (rep_->holds && !q.holds) || (rep_->holds == q.holds && slack < best_);
    if (!q.holds) ok_ = false;
    if (replace) {
      best_ = slack;
      rep_ = std::move(q);
    }
  }
  bool ok() const { return ok_; }
  void flush(std::vector<Inequality>* log) const {
    if (log && rep_) log->push_back(*rep_);
  }

 private:
  static Rational slack_of(const Inequality& q) {
    if (q.relation == "<" || q.relation == "<=") return q.rhs - q.lhs;
    if (q.relation == ">" || q.relation == ">=") return q.lhs - q.rhs;
    return -abs(q.lhs - q.rhs);
  }
  bool ok_ = true;
  Rational best_;
  std::optional<Inequality> rep_;
};

// Zero-and-negative curves of L, in catalogue order.
std::vector<Witness> witnesses_of(const DivisorClass& L, bool& negative, std::set<IntersectionVector>* zero_set) {
  negative = false;
  std::vector<Witness> out;
  for (const auto& e : fcurve_catalogue(L.ambient())) {
    Rational v = intersect(L, e.vector);
    if (v > 0) continue;
    if (v < 0) negative = true;
    if (v == 0 && zero_set) zero_set->insert(e.vector);
    out.push_back(Witness{e.curve, v});
  }
  return out;
}

}  // namespace

PositivityVerdict brute_force_verdict(const DivisorClass& L) {
  if (L.space() != Space::Mgn) throw DomainError("brute force verdict expects a class on Mgn");
  bool negative = false;
  PositivityVerdict out{PositivityStatus::FNef, witnesses_of(L, negative, nullptr)};
  if (negative)
    out.status = PositivityStatus::NotFNef;
  else if (out.witnesses.empty())
    out.status = PositivityStatus::FAmple;
  else if (out.witnesses.size() == 1 && out.witnesses[0].curve.family() == FCurveFamily::Ell)
    out.status = PositivityStatus::FNefStrictExceptEll;
  return out;
}

bool adjoint_fnef_closed_form(const AdjointParams& p, NefMode mode, std::vector<Inequality>* log) {
  if (p.space != Space::Mgn) throw DomainError("closed form expects parameters on Mgn");
  p.validate();
  const auto& amb = p.ambient;
  if (!amb.stable()) throw DomainError(amb.to_string() + " is not stable");
  auto al = [&](const Part& x) -> const Rational& { return p.alpha(BoundaryIndex::pair(x.genus, x.marks, amb)); };

  ConditionGroup c1, c2, c3, c4;
  auto tail = elliptic_tail_index(amb);
  const Rational t = (9 - p.a + p.alpha(*tail)) / 12;
  c1.consider(evaluate("(i) α_irr vs (9-a+α_{1,∅})/12", p.alpha_irr, mode == NefMode::Ample ? ">" : "=", t));

  for (const auto& C : raw_fcurve_catalogue(amb)) {
    const auto& ps = C.parts();
    switch (C.family()) {
      case FCurveFamily::Fs:
        c2.consider(evaluate("(ii) α_irr < 1 + α" + ps[0].to_string() + "/2", p.alpha_irr, "<", 1 + al(ps[0]) / 2));
        break;
      case FCurveFamily::F5: {
        Part s{ps[0].genus + ps[1].genus, ps[0].marks | ps[1].marks};
        c3.consider(evaluate("(iii) " + C.to_string(), al(ps[0]) + al(ps[1]) - al(s), "<", 2));
        break;
      }
      case FCurveFamily::F6: {
        auto all = C.all_parts();
        Rational lhs = 0;
        for (const auto& x : all) lhs += al(x);
        for (std::size_t k = 1; k < 4; ++k) lhs -= al(Part{all[0].genus + all[k].genus, all[0].marks | all[k].marks});
        c4.consider(evaluate("(iv) " + C.to_string(), lhs, "<", 2));
        break;
      }
      default:
        break;
    }
  }
  for (const auto* c : {&c1, &c2, &c3, &c4}) c->flush(log);
  return c1.ok() && c2.ok() && c3.ok() && c4.ok();
}

bool ps_adjoint_fnef_for_T(const AdjointParams& p, const TSubset& T, std::vector<Inequality>* log) {
  if (p.space != Space::MgnPs) throw DomainError("closed form expects parameters on MgnPs");
  const auto& amb = p.ambient;
  for (auto [g, n] : {std::pair{1, 1}, {2, 0}, {1, 2}})
    if (amb.is(g, n)) throw DomainError("closed form undefined on " + amb.to_string());
  if (!amb.stable()) throw DomainError(amb.to_string() + " is not stable");
  p.validate();
  check_members(T, amb);
  const TSubset R = admissible_reduction(T, amb);
  const Rational& a = p.a;
  const Rational& ai = p.alpha_irr;
  const Rational B = 11 - 12 * ai - a;

  auto cls = [&](const Part& x) { return BoundaryIndex::pair(x.genus, x.marks, amb); };
  auto is_tail = [&](const Part& x) { return is_elliptic_tail_index(cls(x), amb); };
  auto al = [&](int genus, MarkSet marks) -> const Rational& { return p.alpha(BoundaryIndex::pair(genus, marks, amb)); };
  auto alp = [&](const Part& x) -> const Rational& { return al(x.genus, x.marks); };

  ConditionGroup c_i, c_iia, c_iib, c_iiia, c_iiib, c_iiic, c_iiid;

  if (amb.g >= 2) {
    const Rational t = (7 - a) / 10;
    c_i.consider(evaluate("(i) α_irr vs (7-a)/10", ai, R.has_irr() ? "=" : ">", t));
  }
  for (const auto& np : neighbor_pairs(amb)) {
    bool inside = R.contains(np.lower) && R.contains(np.upper);
    c_iib.consider(evaluate("(ii)(b) bridge " + np.to_string(), 12 * ai - 7 + a, inside ? "=" : ">",
                            p.alpha(np.lower) + p.alpha(np.upper)));
  }

  const bool special30 = amb.is(3, 0), special40 = amb.is(4, 0);
  if (special30) c_iiid.consider(evaluate("(iii)(d) α_irr < (11-a)/12", ai, "<", (11 - a) / 12));
  if (special40) {
    Rational rhs = (Rational(19, 2) - a + Rational(3, 4) * al(2, 0)) / 12;
    c_iiid.consider(evaluate("(iii)(d) α_irr < (19/2-a+3α_{2,∅}/4)/12", ai, "<", rhs));
  }

  for (const auto& C : raw_fcurve_catalogue(amb)) {
    if (C.family() == FCurveFamily::F5) {
      const Part x = C.parts()[0], y = C.parts()[1];
      const Part s{x.genus + y.genus, x.marks | y.marks};
      const bool tx = is_tail(x), ty = is_tail(y), ts = is_tail(s);
      if (!tx && !ty && !ts) {
        c_iia.consider(evaluate("(ii)(a) " + C.to_string(), alp(x) + alp(y) - alp(s), "<", 2));
      } else if (tx != ty && !ts && !special30 && !special40) {
        const Part& o = tx ? y : x;
        Rational rhs = (11 - a + al(o.genus + 1, o.marks) - alp(o)) / 12;
        c_iiid.consider(evaluate("(iii)(d) " + C.to_string(), ai, "<", rhs));
      } else if (tx && ty && !ts && !special30 && !special40) {
        Rational rhs = (10 - a + al(2, 0) / 2) / 12;
        c_iiid.consider(evaluate("(iii)(d) " + C.to_string(), ai, "<", rhs));
      }
      continue;
    }
    if (C.family() != FCurveFamily::F6) continue;
    const auto all = C.all_parts();
    std::vector<Part> rest;
    for (const auto& x : all)
      if (!is_tail(x)) rest.push_back(x);
    const std::size_t tails = all.size() - rest.size();
    if (tails == 0) {
      Rational lhs = 0;
      for (const auto& x : all) lhs += alp(x);
      for (std::size_t k = 1; k < 4; ++k) lhs -= al(all[0].genus + all[k].genus, all[0].marks | all[k].marks);
      c_iiia.consider(evaluate("(iii)(a) " + C.to_string(), lhs, "<", 2));
    } else if (tails == 1) {
      const Part &x = rest[0], &y = rest[1];
      const int ij = x.genus + y.genus;
      const MarkSet IJ = x.marks | y.marks;
      Rational lhs = (alp(x) - al(x.genus + 1, x.marks)) + (alp(y) - al(y.genus + 1, y.marks)) +
                     (al(ij + 1, IJ) - al(ij, IJ));
      c_iiib.consider(evaluate("(iii)(b) " + C.to_string(), lhs, "<", B));
    } else if (tails == 2) {
      const Part& x = rest[0];
      Rational lhs = (alp(x) - al(x.genus + 1, x.marks)) + (al(x.genus + 2, x.marks) - al(x.genus + 1, x.marks)) -
                     al(2, 0);
      c_iiic.consider(evaluate("(iii)(c) " + C.to_string(), lhs, "<", 20 - 2 * (12 * ai + a)));
    } else if (tails == 3 && !special40) {
      Rational rhs = (Rational(29, 3) - a + al(2, 0) - al(3, 0) / 3) / 12;
      c_iiid.consider(evaluate("(iii)(d) " + C.to_string(), ai, "<", rhs));
    }
  }

  bool ok = true;
  for (const auto* c : {&c_i, &c_iia, &c_iib, &c_iiia, &c_iiib, &c_iiic, &c_iiid}) {
    c->flush(log);
    ok = ok && c->ok();
  }
  return ok;
}

PositivityVerdict ps_verdict(const DivisorClass& L, const TSubset& T) {
  if (L.space() != Space::MgnPs) throw DomainError("expects a class on MgnPs");
  const auto& amb = L.ambient();
  auto face = fcurves_in_contracted_face(amb, T);
  std::set<IntersectionVector> expected;
  for (const auto& C : face) expected.insert(intersection_vector(C));
  bool negative = false;
  std::set<IntersectionVector> zeros;
  PositivityVerdict out{PositivityStatus::FNef, witnesses_of(pullback_upsilon(L), negative, &zeros)};
  if (negative)
    out.status = PositivityStatus::NotFNef;
  else if (zeros == expected)
    out.status = PositivityStatus::FNefOnExactSet;
  return out;
}

bool verdict_matches_T(const DivisorClass& L, const TSubset& T) {
  return ps_verdict(L, T).status == PositivityStatus::FNefOnExactSet;
}

}  // namespace mgn
