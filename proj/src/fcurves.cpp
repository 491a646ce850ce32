#include "mgn/fcurves.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

namespace mgn {

std::string to_string(FCurveFamily f) {
  switch (f) {
    case FCurveFamily::Ell: return "Ell";
    case FCurveFamily::FIrr: return "FIrr";
    case FCurveFamily::F3: return "F3";
    case FCurveFamily::Fs: return "Fs";
    case FCurveFamily::F5: return "F5";
    case FCurveFamily::F6: return "F6";
  }
  return "?";
}

FCurveFamily parse_family(const std::string& s) {
  for (auto f : {FCurveFamily::Ell, FCurveFamily::FIrr, FCurveFamily::F3, FCurveFamily::Fs, FCurveFamily::F5,
                 FCurveFamily::F6})
    if (to_string(f) == s) return f;
  throw ParseError("unknown F-curve family '" + s + "'");
}

std::string Part::to_string() const { return "(" + std::to_string(genus) + "," + marks_to_string(marks) + ")"; }

bool operator<(const Part& a, const Part& b) {
  if (a.genus != b.genus) return a.genus < b.genus;
  return mark_set_less(a.marks, b.marks);
}

void IntersectionVector::add(const BoundaryIndex& idx, const Rational& c) {
  Rational& slot = terms[idx];
  slot += c;
  if (slot == 0) terms.erase(idx);
}

bool operator<(const IntersectionVector& a, const IntersectionVector& b) {
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return std::lexicographical_compare(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

namespace {

void check_part(const MarkedGenus& amb, const Part& p) {
  if (p.genus < 0 || p.genus > amb.g || (p.marks & ~full_marks(amb.n)) != 0 || (p.genus == 0 && p.marks == 0))
    throw DomainError("invalid F-curve part " + p.to_string() + " on " + amb.to_string());
}

Part complement(const MarkedGenus& amb, int genus_used, MarkSet marks_used) {
  return Part{amb.g - genus_used, full_marks(amb.n) & ~marks_used};
}

}  // namespace

FCurve FCurve::elliptic(const MarkedGenus& amb) {
  if (amb.g < 1) throw DomainError("no elliptic tail curve in genus 0");
  return FCurve(amb, FCurveFamily::Ell, {});
}

FCurve FCurve::irreducible(const MarkedGenus& amb) {
  if (amb.g < 3) throw DomainError("FIrr needs g ≥ 3");
  return FCurve(amb, FCurveFamily::FIrr, {});
}

FCurve FCurve::single(const MarkedGenus& amb, Part p) {
  check_part(amb, p);
  if (p.genus > amb.g - 2) throw DomainError("F3 part genus must be at most g-2");
  return FCurve(amb, FCurveFamily::F3, {p});
}

FCurve FCurve::split(const MarkedGenus& amb, Part p) {
  check_part(amb, p);
  if (p.genus < 1 || p.genus > amb.g - 1) throw DomainError("Fs part genus must lie in [1, g-1]");
  return FCurve(amb, FCurveFamily::Fs, {p});
}

FCurve FCurve::pair(const MarkedGenus& amb, Part p, Part q) {
  check_part(amb, p);
  check_part(amb, q);
  if ((p.marks & q.marks) != 0) throw DomainError("F5 parts must have disjoint marks");
  if (p.genus + q.genus > amb.g - 1) throw DomainError("F5 parts exceed genus g-1");
  if (q < p) std::swap(p, q);
  return FCurve(amb, FCurveFamily::F5, {p, q});
}

FCurve FCurve::triple(const MarkedGenus& amb, Part p, Part q, Part r) {
  check_part(amb, p);
  check_part(amb, q);
  check_part(amb, r);
  if ((p.marks & q.marks) || (p.marks & r.marks) || (q.marks & r.marks))
    throw DomainError("F6 parts must have disjoint marks");
  int used = p.genus + q.genus + r.genus;
  if (used > amb.g) throw DomainError("F6 parts exceed genus g");
  Part s = complement(amb, used, p.marks | q.marks | r.marks);
  check_part(amb, s);
  std::vector<Part> all{p, q, r, s};
  std::sort(all.begin(), all.end());
  all.pop_back();
  return FCurve(amb, FCurveFamily::F6, all);
}

FCurve FCurve::make(const MarkedGenus& amb, FCurveFamily f, const std::vector<Part>& parts) {
  static const std::map<FCurveFamily, std::size_t> arity{{FCurveFamily::Ell, 0}, {FCurveFamily::FIrr, 0},
                                                         {FCurveFamily::F3, 1},  {FCurveFamily::Fs, 1},
                                                         {FCurveFamily::F5, 2},  {FCurveFamily::F6, 3}};
  if (parts.size() != arity.at(f))
    throw DomainError(mgn::to_string(f) + " takes " + std::to_string(arity.at(f)) + " parts");
  switch (f) {
    case FCurveFamily::Ell: return elliptic(amb);
    case FCurveFamily::FIrr: return irreducible(amb);
    case FCurveFamily::F3: return single(amb, parts[0]);
    case FCurveFamily::Fs: return split(amb, parts[0]);
    case FCurveFamily::F5: return pair(amb, parts[0], parts[1]);
    case FCurveFamily::F6: return triple(amb, parts[0], parts[1], parts[2]);
  }
  throw DomainError("unknown family");
}

std::vector<Part> FCurve::all_parts() const {
  std::vector<Part> out = parts_;
  int used = 0;
  MarkSet marks = 0;
  for (const auto& p : parts_) {
    used += p.genus;
    marks |= p.marks;
  }
  if (family_ == FCurveFamily::F5) out.push_back(complement(ambient_, used + 1, marks));
  if (family_ == FCurveFamily::F6) out.push_back(complement(ambient_, used, marks));
  return out;
}

std::string FCurve::to_string() const {
  std::string out = mgn::to_string(family_) + "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) out += (k ? "," : "") + parts_[k].to_string();
  return out + ")";
}

bool operator<(const FCurve& a, const FCurve& b) {
  if (a.family_ != b.family_) return a.family_ < b.family_;
  return a.parts_ < b.parts_;
}

IntersectionVector intersection_vector(const FCurve& C) {
  const auto& amb = C.ambient();
  IntersectionVector v;
  auto idx = [&](int genus, MarkSet marks) { return BoundaryIndex::pair(genus, marks, amb); };
  const auto irr = BoundaryIndex::irr();
  const auto& ps = C.parts();
  switch (C.family()) {
    case FCurveFamily::Ell:
      v.lambda = 1;
      v.add(irr, 12);
      if (auto tail = elliptic_tail_index(amb)) v.add(*tail, -1);
      break;
    case FCurveFamily::FIrr:
      v.add(irr, -1);
      break;
    case FCurveFamily::F3:
      v.add(idx(ps[0].genus, ps[0].marks), -1);
      break;
    case FCurveFamily::Fs:
      v.add(irr, -2);
      v.add(idx(ps[0].genus, ps[0].marks), 1);
      break;
    case FCurveFamily::F5:
      v.add(idx(ps[0].genus, ps[0].marks), -1);
      v.add(idx(ps[1].genus, ps[1].marks), -1);
      v.add(idx(ps[0].genus + ps[1].genus, ps[0].marks | ps[1].marks), 1);
      break;
    case FCurveFamily::F6: {
      auto all = C.all_parts();
      for (const auto& p : all) v.add(idx(p.genus, p.marks), -1);
      // Unions of two parts; the union with part 0 determines the other half.
      for (std::size_t k = 1; k < 4; ++k)
        v.add(idx(all[0].genus + all[k].genus, all[0].marks | all[k].marks), 1);
      break;
    }
  }
  return v;
}

Rational intersect(const DivisorClass& L, const IntersectionVector& v) {
  Rational out = L.lambda() * v.lambda;
  for (const auto& [idx, c] : v.terms) out += L.coefficient(idx) * c;
  return out;
}

Rational intersect(const DivisorClass& L, const FCurve& C) {
  if (L.space() != Space::Mgn) throw DomainError("F-curves live on Mgn; pull the class back first");
  if (!(L.ambient() == C.ambient())) throw DomainError("divisor and curve live on different spaces");
  return intersect(L, intersection_vector(C));
}

namespace {

std::vector<Part> all_parts_of(const MarkedGenus& amb) {
  std::vector<Part> out;
  const MarkSet full = full_marks(amb.n);
  for (int i = 0; i <= amb.g; ++i)
    for (MarkSet I = 0;; ++I) {
      if (!(i == 0 && I == 0)) out.push_back(Part{i, I});
      if (I == full) break;
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FCurve> enumerate_fcurves_raw(const MarkedGenus& amb) {
  std::vector<FCurve> out;
  const int g = amb.g;
  if (g >= 1) out.push_back(FCurve::elliptic(amb));
  if (g >= 3) out.push_back(FCurve::irreducible(amb));
  const auto parts = all_parts_of(amb);
  for (const auto& p : parts)
    if (p.genus <= g - 2) out.push_back(FCurve::single(amb, p));
  for (const auto& p : parts)
    if (p.genus >= 1 && p.genus <= g - 1) out.push_back(FCurve::split(amb, p));
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = x; y < parts.size(); ++y) {
      const auto &p = parts[x], &q = parts[y];
      if ((p.marks & q.marks) == 0 && p.genus + q.genus <= g - 1) out.push_back(FCurve::pair(amb, p, q));
    }
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = x; y < parts.size(); ++y)
      for (std::size_t z = y; z < parts.size(); ++z) {
        const auto &p = parts[x], &q = parts[y], &r = parts[z];
        if ((p.marks & q.marks) || (p.marks & r.marks) || (q.marks & r.marks)) continue;
        int used = p.genus + q.genus + r.genus;
        if (used > g) continue;
        Part s = complement(amb, used, p.marks | q.marks | r.marks);
        if (s.genus == 0 && s.marks == 0) continue;
        if (s < r) continue;  // each unordered 4-tuple once, largest part implied
        out.push_back(FCurve::triple(amb, p, q, r));
      }
  return out;
}

std::vector<FCurve> enumerate_fcurves(const MarkedGenus& amb) {
  std::vector<FCurve> out;
  std::set<IntersectionVector> seen;
  for (auto& C : enumerate_fcurves_raw(amb))
    if (seen.insert(intersection_vector(C)).second) out.push_back(std::move(C));
  return out;
}

namespace {

template <typename T, typename Build>
const T& memoized(std::map<std::pair<int, int>, std::unique_ptr<T>>& cache, std::mutex& mu,
                  const MarkedGenus& amb, Build build) {
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{amb.g, amb.n}];
  if (!slot) slot = std::make_unique<T>(build());
  return *slot;
}

}  // namespace

const std::vector<CatalogueEntry>& fcurve_catalogue(const MarkedGenus& amb) {
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<CatalogueEntry>>> cache;
  static std::mutex mu;
  return memoized(cache, mu, amb, [&] {
    std::vector<CatalogueEntry> out;
    for (auto& C : enumerate_fcurves(amb)) {
      auto v = intersection_vector(C);
      out.push_back(CatalogueEntry{std::move(C), std::move(v)});
    }
    return out;
  });
}

const std::vector<FCurve>& raw_fcurve_catalogue(const MarkedGenus& amb) {
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<FCurve>>> cache;
  static std::mutex mu;
  return memoized(cache, mu, amb, [&] { return enumerate_fcurves_raw(amb); });
}

BridgeType BridgeType::irreducible(const MarkedGenus& amb) {
  (void)amb;
  return BridgeType{true, NeighborPair{0, 0, BoundaryIndex::irr(), BoundaryIndex::irr()}};
}

std::vector<BoundaryIndex> BridgeType::members() const {
  if (irr) return {BoundaryIndex::irr()};
  return {pair.lower, pair.upper};
}

TSubset BridgeType::type() const {
  TSubset t;
  for (const auto& m : members()) t.insert(m);
  return t;
}

std::string BridgeType::to_string() const { return irr ? "Irr" : "Pair" + pair.to_string(); }

bool operator==(const BridgeType& a, const BridgeType& b) {
  if (a.irr != b.irr) return false;
  return a.irr || (a.pair.lower == b.pair.lower && a.pair.upper == b.pair.upper);
}

std::vector<BridgeType> bridge_curves(const MarkedGenus& amb, const TSubset* filter) {
  std::vector<BridgeType> out;
  if (amb.g >= 2 && (!filter || filter->has_irr())) out.push_back(BridgeType::irreducible(amb));
  for (const auto& np : neighbor_pairs(amb))
    if (!filter || (filter->contains(np.lower) && filter->contains(np.upper))) out.push_back(BridgeType{false, np});
  return out;
}

Rational intersect_bridge(const DivisorClass& L, const BridgeType& B) {
  if (L.space() != Space::MgnPs) throw DomainError("bridge curves live on MgnPs");
  if (B.irr) return L.lambda() + 10 * L.irr();
  return L.lambda() + 12 * L.irr() - L.coefficient(B.pair.lower) - L.coefficient(B.pair.upper);
}

Rational weight(const DivisorClass& L, const BridgeType& B) {
  if (L.space() != Space::MgnPs) throw DomainError("bridge curves live on MgnPs");
  IntersectionVector w;
  w.lambda = 1;
  w.add(BoundaryIndex::irr(), B.irr ? 10 : 12);
  if (!B.irr)
    for (const auto& m : B.members()) w.add(m, -1);
  return intersect(L, w);
}

std::vector<FCurve> fcurves_in_contracted_face(const MarkedGenus& amb, const TSubset& T) {
  for (auto [g, n] : {std::pair{1, 1}, {2, 0}, {1, 2}})
    if (amb.is(g, n)) throw DomainError("contracted face undefined on " + amb.to_string());
  check_members(T, amb);
  std::vector<FCurve> out;
  if (amb.g == 0) return out;
  out.push_back(FCurve::elliptic(amb));
  if (amb.g >= 2 && T.has_irr()) out.push_back(FCurve::split(amb, Part{1, 0}));
  for (const auto& np : neighbor_pairs(amb)) {
    if (!T.contains(np.lower) || !T.contains(np.upper)) continue;
    Part p{np.genus, np.marks};
    Part q = complement(amb, np.genus + 1, np.marks);
    out.push_back(FCurve::pair(amb, p, q));
  }
  return out;
}

}  // namespace mgn
