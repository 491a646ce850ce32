#include "mgn/divisor.hpp"

#include <set>

namespace mgn {

std::string to_string(Space s) { return s == Space::Mgn ? "Mgn" : "MgnPs"; }

Space parse_space(const std::string& s) {
  if (s == "Mgn") return Space::Mgn;
  if (s == "MgnPs") return Space::MgnPs;
  throw ParseError("unknown space '" + s + "'");
}

DivisorClass::DivisorClass(Space space, MarkedGenus ambient) : space_(space), ambient_(ambient), lambda_(0) {}

void DivisorClass::check_index(const BoundaryIndex& idx) const {
  if (!idx.belongs_to(ambient_))
    throw DomainError(idx.to_string() + " is not a boundary index of " + ambient_.to_string());
  if (space_ == Space::MgnPs && is_elliptic_tail_index(idx, ambient_))
    throw DomainError("the pseudostable space carries no δ_{1,∅}");
}

void DivisorClass::check_compatible(const DivisorClass& o) const {
  if (space_ != o.space_ || !(ambient_ == o.ambient_))
    throw DomainError("divisor classes live on different spaces");
}

Rational DivisorClass::coefficient(const BoundaryIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::set_lambda(const Rational& c) {
  lambda_ = ambient_.g == 0 ? Rational(0) : c;
  return *this;
}

DivisorClass& DivisorClass::set(const BoundaryIndex& idx, const Rational& c) {
  check_index(idx);
  if (c == 0 || (idx.is_irr() && ambient_.g == 0))
    terms_.erase(idx);
  else
    terms_[idx] = c;
  return *this;
}

DivisorClass& DivisorClass::add(const BoundaryIndex& idx, const Rational& c) {
  return set(idx, coefficient(idx) + c);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  check_compatible(o);
  lambda_ += o.lambda_;
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  check_compatible(o);
  lambda_ -= o.lambda_;
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  if (c == 0) {
    lambda_ = 0;
    terms_.clear();
    return *this;
  }
  lambda_ *= c;
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.space_ == b.space_ && a.ambient_ == b.ambient_ && a.lambda_ == b.lambda_ && a.terms_ == b.terms_;
}

std::string DivisorClass::to_string() const {
  std::string out = mgn::to_string(lambda_) + "λ";
  for (const auto& [k, v] : terms_) out += " + " + mgn::to_string(v) + "δ" + k.to_string();
  return out;
}

DivisorClass DivisorClass::hodge(Space space, const MarkedGenus& amb) {
  DivisorClass d(space, amb);
  d.set_lambda(1);
  return d;
}

DivisorClass DivisorClass::basis(Space space, const MarkedGenus& amb, const BoundaryIndex& idx) {
  DivisorClass d(space, amb);
  d.set(idx, 1);
  return d;
}

DivisorClass DivisorClass::psi(Space space, const MarkedGenus& amb, int k) {
  DivisorClass d(space, amb);
  d.set(psi_index(k, amb), -1);
  return d;
}

DivisorClass DivisorClass::total_psi(Space space, const MarkedGenus& amb) {
  DivisorClass d(space, amb);
  for (int k = 1; k <= amb.n; ++k) d += psi(space, amb, k);
  return d;
}

DivisorClass DivisorClass::total_delta(Space space, const MarkedGenus& amb) {
  DivisorClass d(space, amb);
  d.set(BoundaryIndex::irr(), 1);
  for (const auto& idx : pair_indices(space, amb))
    if (!is_psi_index(idx, amb)) d.set(idx, 1);
  return d;
}

DivisorClass DivisorClass::canonical(Space space, const MarkedGenus& amb) {
  DivisorClass d = hodge(space, amb);
  d *= 13;
  d -= 2 * total_delta(space, amb);
  d += total_psi(space, amb);
  return d;
}

std::vector<BoundaryIndex> pair_indices(Space s, const MarkedGenus& amb) {
  std::vector<BoundaryIndex> out;
  for (const auto& idx : enumerate_indices(amb, IndexScope::WithoutIrr))
    if (!(s == Space::MgnPs && is_elliptic_tail_index(idx, amb))) out.push_back(idx);
  return out;
}

AdjointParams AdjointParams::uniform(Space s, const MarkedGenus& amb, const Rational& a, const Rational& alpha_irr,
                                     const Rational& alpha) {
  AdjointParams p(s, amb);
  p.a = a;
  p.alpha_irr = alpha_irr;
  for (const auto& idx : pair_indices(s, amb)) p.alphas[idx] = alpha;
  return p;
}

const Rational& AdjointParams::alpha(const BoundaryIndex& idx) const {
  if (idx.is_irr()) return alpha_irr;
  auto it = alphas.find(idx);
  if (it == alphas.end()) throw DomainError("no α for " + idx.to_string());
  return it->second;
}

void AdjointParams::validate() const {
  if (ambient.g == 0) throw DomainError("adjoint parameters need g ≥ 1");
  if (a < 0) throw DomainError("a must be non-negative");
  auto in_unit = [](const Rational& x) { return x >= 0 && x <= 1; };
  if (!in_unit(alpha_irr)) throw DomainError("α_irr outside [0,1]");
  auto expected = pair_indices(space, ambient);
  if (expected.size() != alphas.size()) throw DomainError("α map does not cover the index set of " + ambient.to_string());
  for (const auto& idx : expected) {
    auto it = alphas.find(idx);
    if (it == alphas.end()) throw DomainError("missing α for " + idx.to_string());
    if (!in_unit(it->second)) throw DomainError("α" + idx.to_string() + " outside [0,1]");
  }
}

DivisorClass from_adjoint(const AdjointParams& p) {
  p.validate();
  DivisorClass L(p.space, p.ambient);
  L.set_lambda(13 + p.a);
  L.set(BoundaryIndex::irr(), p.alpha_irr - 2);
  for (const auto& [idx, al] : p.alphas) L.set(idx, al - 2);
  return L;
}

std::optional<AdjointParams> to_adjoint(const DivisorClass& L) {
  if (L.ambient().g == 0) return std::nullopt;
  AdjointParams p(L.space(), L.ambient());
  p.a = L.lambda() - 13;
  p.alpha_irr = L.irr() + 2;
  for (const auto& idx : pair_indices(L.space(), L.ambient())) p.alphas[idx] = L.coefficient(idx) + 2;
  try {
    p.validate();
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return p;
}

namespace {

BoundaryIndex require_tail(const MarkedGenus& amb) {
  auto tail = elliptic_tail_index(amb);
  if (!tail) throw DomainError("no elliptic tail divisor on " + amb.to_string());
  return *tail;
}

}  // namespace

DivisorClass pushforward_upsilon(const DivisorClass& L) {
  if (L.space() != Space::Mgn) throw DomainError("pushforward expects a class on Mgn");
  auto tail = require_tail(L.ambient());
  DivisorClass out(Space::MgnPs, L.ambient());
  out.set_lambda(L.lambda());
  for (const auto& [idx, c] : L.terms())
    if (idx != tail) out.set(idx, c);
  return out;
}

DivisorClass pullback_upsilon(const DivisorClass& L) {
  if (L.space() != Space::MgnPs) throw DomainError("pullback expects a class on MgnPs");
  auto tail = require_tail(L.ambient());
  DivisorClass out(Space::Mgn, L.ambient());
  out.set_lambda(L.lambda());
  for (const auto& [idx, c] : L.terms()) out.set(idx, c);
  out.set(tail, L.lambda() + 12 * L.irr());
  return out;
}

AdjointParams pushforward_params(const AdjointParams& p) {
  if (p.space != Space::Mgn) throw DomainError("pushforward expects parameters on Mgn");
  auto tail = require_tail(p.ambient);
  AdjointParams q(Space::MgnPs, p.ambient);
  q.a = p.a;
  q.alpha_irr = p.alpha_irr;
  q.alphas = p.alphas;
  q.alphas.erase(tail);
  return q;
}

Rational push_pull_defect(const AdjointParams& p) {
  if (p.ambient.is(1, 1) || p.ambient.is(2, 0)) throw DomainError("push-pull defect undefined on " + p.ambient.to_string());
  if (p.space != Space::Mgn) throw DomainError("push-pull defect expects parameters on Mgn");
  p.validate();
  return 9 + p.alpha(require_tail(p.ambient)) - p.a - 12 * p.alpha_irr;
}

bool is_T_compatible(const DivisorClass& L, const TSubset& T) {
  if (L.space() != Space::MgnPs) throw DomainError("T-compatibility is a condition on MgnPs");
  const auto& amb = L.ambient();
  check_members(T, amb);
  const Rational& a = L.lambda();
  Rational b_irr = L.irr();
  if (amb.g >= 2 && T.has_irr() && a + 10 * b_irr != 0) return false;
  for (const auto& np : neighbor_pairs(amb)) {
    if (!T.contains(np.lower) || !T.contains(np.upper)) continue;
    if (a + 12 * b_irr - L.coefficient(np.lower) - L.coefficient(np.upper) != 0) return false;
  }
  return true;
}

DivisorClass crepant_canonical_class(const TSubset& T, const MarkedGenus& amb) {
  for (auto [g, n] : {std::pair{1, 1}, {2, 0}, {1, 2}, {2, 1}, {3, 0}})
    if (amb.is(g, n)) throw DomainError("crepant canonical class formula fails on " + amb.to_string());
  if (admissible_reduction(T, amb) != divisorial_part(T, amb))
    throw DomainError("T does not reduce to its divisorial part");
  DivisorClass K = DivisorClass::canonical(Space::MgnPs, amb);
  std::set<BoundaryIndex> exceptional;
  for (int j = 1; j <= amb.n; ++j) {
    MarkSet J = MarkSet{1} << (j - 1);
    auto lo = BoundaryIndex::try_pair(0, J, amb);
    auto hi = BoundaryIndex::try_pair(1, J, amb);
    if (lo && hi && T.contains(*lo) && T.contains(*hi)) exceptional.insert(*hi);
  }
  for (const auto& e : exceptional) K.add(e, -8);
  return K;
}

DivisorClass pullback_to_genus_zero(const DivisorClass& L) {
  if (L.space() != Space::Mgn) throw DomainError("genus-zero pullback expects a class on Mgn");
  const auto& amb = L.ambient();
  MarkedGenus target(0, amb.g + amb.n);
  DivisorClass out(Space::Mgn, target);
  // Tails sit at marks n+1..n+g; J ranges over i-element subsets of them.
  const MarkSet tails = full_marks(amb.g + amb.n) & ~full_marks(amb.n);
  for (const auto& [idx, c] : L.terms()) {
    if (idx.is_irr()) continue;
    const int i = idx.genus();
    for (MarkSet J = tails;; J = (J - 1) & tails) {
      if (mark_count(J) == i) out.add(BoundaryIndex::pair(0, idx.marks() | J, target), c);
      if (J == 0) break;
    }
  }
  return out;
}

}  // namespace mgn
