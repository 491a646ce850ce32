#include "mgn/index_set.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace mgn {

MarkSet mark_set(std::initializer_list<int> marks) {
  return mark_set(std::vector<int>(marks));
}

MarkSet mark_set(const std::vector<int>& marks) {
  MarkSet s = 0;
  for (int k : marks) {
    if (k < 1 || k > kMaxMarks) throw DomainError("mark " + std::to_string(k) + " out of range");
    s |= MarkSet{1} << (k - 1);
  }
  return s;
}

MarkSet full_marks(int n) { return n >= 32 ? ~MarkSet{0} : (MarkSet{1} << n) - 1; }

std::vector<int> marks_of(MarkSet s) {
  std::vector<int> out;
  for (int k = 0; s != 0; ++k, s >>= 1)
    if (s & 1u) out.push_back(k + 1);
  return out;
}

int mark_count(MarkSet s) { return std::popcount(s); }

bool mark_set_less(MarkSet a, MarkSet b) {
  int ca = mark_count(a), cb = mark_count(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // Same size: the set holding the smallest differing mark is first.
  MarkSet diff = a ^ b;
  MarkSet low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::string marks_to_string(MarkSet s) {
  std::string out = "{";
  bool first = true;
  for (int k : marks_of(s)) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

MarkedGenus::MarkedGenus(int genus, int marks) : g(genus), n(marks) {
  if (g < 0 || n < 0) throw DomainError("genus and number of marks must be non-negative");
  if (g > kMaxGenus) throw DomainError("genus above supported maximum");
  if (n > kMaxMarks) throw DomainError("number of marks above supported maximum");
}

std::string MarkedGenus::to_string() const {
  return "(" + std::to_string(g) + "," + std::to_string(n) + ")";
}

namespace {

bool rep_less(int i, MarkSet I, int j, MarkSet J) {
  if (i != j) return i < j;
  return mark_set_less(I, J);
}

bool raw_valid(int i, MarkSet I, const MarkedGenus& amb) {
  if (i < 0 || i > amb.g) return false;
  if ((I & ~full_marks(amb.n)) != 0) return false;
  if (i == 0 && I == 0) return false;
  if (i == amb.g && I == full_marks(amb.n)) return false;
  return true;
}

}  // namespace

std::optional<BoundaryIndex> BoundaryIndex::try_pair(int i, MarkSet I, const MarkedGenus& amb) {
  if (!raw_valid(i, I, amb)) return std::nullopt;
  int ci = amb.g - i;
  MarkSet cI = full_marks(amb.n) & ~I;
  if (rep_less(ci, cI, i, I)) return BoundaryIndex(false, ci, cI);
  return BoundaryIndex(false, i, I);
}

BoundaryIndex BoundaryIndex::pair(int i, MarkSet I, const MarkedGenus& amb) {
  auto idx = try_pair(i, I, amb);
  if (!idx)
    throw DomainError("(" + std::to_string(i) + "," + marks_to_string(I) + ") is not a boundary index of " +
                      amb.to_string());
  return *idx;
}

bool BoundaryIndex::belongs_to(const MarkedGenus& amb) const {
  if (irr_) return true;
  auto c = try_pair(genus_, marks_, amb);
  return c && *c == *this;
}

std::string BoundaryIndex::to_string() const {
  if (irr_) return "irr";
  return "[" + std::to_string(genus_) + "," + marks_to_string(marks_) + "]";
}

bool operator<(const BoundaryIndex& a, const BoundaryIndex& b) {
  if (a.irr_ != b.irr_) return a.irr_;
  if (a.irr_) return false;
  return rep_less(a.genus_, a.marks_, b.genus_, b.marks_);
}

std::optional<BoundaryIndex> elliptic_tail_index(const MarkedGenus& amb) {
  return BoundaryIndex::try_pair(1, 0, amb);
}

bool is_elliptic_tail_index(const BoundaryIndex& idx, const MarkedGenus& amb) {
  auto e = elliptic_tail_index(amb);
  return e && *e == idx;
}

BoundaryIndex psi_index(int k, const MarkedGenus& amb) {
  if (k < 1 || k > amb.n) throw DomainError("mark " + std::to_string(k) + " out of range");
  return BoundaryIndex::pair(0, MarkSet{1} << (k - 1), amb);
}

bool is_psi_index(const BoundaryIndex& idx, const MarkedGenus& amb) {
  if (idx.is_irr()) return false;
  for (int k = 1; k <= amb.n; ++k) {
    auto p = BoundaryIndex::try_pair(0, MarkSet{1} << (k - 1), amb);
    if (p && *p == idx) return true;
  }
  return false;
}

bool TSubset::includes(const TSubset& sub) const {
  return std::includes(members_.begin(), members_.end(), sub.members_.begin(), sub.members_.end());
}

std::string TSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& m : members_) {
    if (!first) out += " ";
    out += m.to_string();
    first = false;
  }
  return out + "}";
}

std::vector<BoundaryIndex> enumerate_indices(const MarkedGenus& amb, IndexScope scope) {
  std::set<BoundaryIndex> seen;
  if (scope == IndexScope::All) seen.insert(BoundaryIndex::irr());
  const MarkSet full = full_marks(amb.n);
  for (int i = 0; i <= amb.g; ++i) {
    for (MarkSet I = 0;; ++I) {
      if (auto idx = BoundaryIndex::try_pair(i, I, amb)) seen.insert(*idx);
      if (I == full) break;
    }
  }
  return {seen.begin(), seen.end()};
}

TSubset all_indices(const MarkedGenus& amb) {
  auto v = enumerate_indices(amb);
  return TSubset(std::set<BoundaryIndex>(v.begin(), v.end()));
}

std::string NeighborPair::to_string() const {
  return "(" + std::to_string(genus) + "," + marks_to_string(marks) + ")";
}

std::vector<NeighborPair> neighbor_pairs(const MarkedGenus& amb) {
  std::map<std::pair<BoundaryIndex, BoundaryIndex>, NeighborPair> found;
  const MarkSet full = full_marks(amb.n);
  auto tail = elliptic_tail_index(amb);
  for (int t = 0; t < amb.g; ++t) {
    for (MarkSet I = 0;; ++I) {
      auto lo = BoundaryIndex::try_pair(t, I, amb);
      auto hi = BoundaryIndex::try_pair(t + 1, I, amb);
      if (lo && hi && !(tail && (*lo == *tail || *hi == *tail))) {
        int ct = amb.g - t - 1;
        MarkSet cI = full & ~I;
        int rt = t;
        MarkSet rI = I;
        if (rep_less(ct, cI, t, I)) {
          rt = ct;
          rI = cI;
        }
        auto key = std::minmax(*lo, *hi);
        auto a = BoundaryIndex::pair(rt, rI, amb);
        auto b = BoundaryIndex::pair(rt + 1, rI, amb);
        found.emplace(std::make_pair(key.first, key.second), NeighborPair{rt, rI, a, b});
      }
      if (I == full) break;
    }
  }
  std::vector<NeighborPair> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const NeighborPair& x, const NeighborPair& y) {
    return rep_less(x.genus, x.marks, y.genus, y.marks);
  });
  return out;
}

void check_members(const TSubset& T, const MarkedGenus& amb) {
  for (const auto& m : T)
    if (!m.belongs_to(amb)) throw DomainError(m.to_string() + " is not a canonical index of " + amb.to_string());
}

namespace {

bool has_neighbor_in(const BoundaryIndex& x, const TSubset& T, const MarkedGenus& amb) {
  for (int d : {-1, 1}) {
    auto y = BoundaryIndex::try_pair(x.genus() + d, x.marks(), amb);
    if (y && T.contains(*y)) return true;
  }
  return false;
}

}  // namespace

bool is_admissible(const TSubset& T, const MarkedGenus& amb) {
  check_members(T, amb);
  if (amb.g == 0) return T.empty();
  if (auto tail = elliptic_tail_index(amb); tail && T.contains(*tail)) return false;
  if (amb.g == 1 && T.has_irr()) return false;
  for (const auto& x : T) {
    if (x.is_irr()) continue;
    if (!has_neighbor_in(x, T, amb)) return false;
  }
  return true;
}

TSubset admissible_reduction(const TSubset& T, const MarkedGenus& amb) {
  check_members(T, amb);
  TSubset pruned = T;
  if (auto tail = elliptic_tail_index(amb)) pruned.erase(*tail);
  if (amb.g <= 1) pruned.erase(BoundaryIndex::irr());
  TSubset out;
  for (const auto& x : pruned)
    if (x.is_irr() || has_neighbor_in(x, pruned, amb)) out.insert(x);
  return out;
}

TSubset divisorial_part(const TSubset& T, const MarkedGenus& amb) {
  check_members(T, amb);
  TSubset out;
  if (amb.is(1, 1) || amb.is(2, 1)) return out;
  for (int j = 1; j <= amb.n; ++j) {
    MarkSet J = MarkSet{1} << (j - 1);
    auto a = BoundaryIndex::try_pair(0, J, amb);
    auto b = BoundaryIndex::try_pair(1, J, amb);
    if (a && b && T.contains(*a) && T.contains(*b)) {
      out.insert(*a);
      out.insert(*b);
    }
  }
  return out;
}

std::vector<TSubset> minimal_subsets(const MarkedGenus& amb) {
  std::vector<TSubset> out;
  if (amb.g == 0) return out;
  if (amb.g >= 2) out.push_back(TSubset{BoundaryIndex::irr()});
  for (const auto& p : neighbor_pairs(amb)) out.push_back(p.as_subset());
  return out;
}

BigInt count_admissible(const MarkedGenus& amb) {
  const int g = amb.g, n = amb.n;
  BigInt out = 1;
  if (g == 0 || amb.is(1, 0)) return out;
  if (amb.is(2, 0)) return 2;
  unsigned long e = 0;
  if (n == 0) {
    e = (g % 2 == 1) ? static_cast<unsigned long>((g - 1) / 2) : static_cast<unsigned long>(g / 2 - 1);
  } else {
    BigInt exp = BigInt(g) * (BigInt(1) << (n - 1)) - 1;
    if (!exp.fits_ulong_p()) throw DomainError("admissible count exponent too large");
    e = exp.get_ui();
  }
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
  return out;
}

std::vector<TSubset> enumerate_admissible(const MarkedGenus& amb, std::size_t cap) {
  auto mins = minimal_subsets(amb);
  const std::size_t m = mins.size();
  if (m >= 63 || (std::size_t{1} << m) > cap)
    throw DomainError("admissible enumeration for " + amb.to_string() + " needs 2^" + std::to_string(m) +
                      " unions, above the cap of " + std::to_string(cap));
  std::set<TSubset> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    TSubset u;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1u) u.merge(mins[k]);
    seen.insert(std::move(u));
  }
  return {seen.begin(), seen.end()};
}

StackRelation stack_relation(const TSubset& T, const TSubset& S, const MarkedGenus& amb) {
  TSubset a = admissible_reduction(T, amb), b = admissible_reduction(S, amb);
  if (a == b) return StackRelation::Equal;
  if (b.includes(a)) return StackRelation::Subset;
  if (a.includes(b)) return StackRelation::Superset;
  return StackRelation::Incomparable;
}

std::string to_string(StackRelation r) {
  switch (r) {
    case StackRelation::Equal: return "Equal";
    case StackRelation::Subset: return "Subset";
    case StackRelation::Superset: return "Superset";
    case StackRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

}  // namespace mgn
