#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

// Marks are 1-based; bit k-1 holds mark k.
using MarkSet = std::uint32_t;
inline constexpr int kMaxMarks = 24;
inline constexpr int kMaxGenus = 256;

MarkSet mark_set(std::initializer_list<int> marks);
MarkSet mark_set(const std::vector<int>& marks);
MarkSet full_marks(int n);
std::vector<int> marks_of(MarkSet s);
int mark_count(MarkSet s);
// Order by size, then lexicographically on the ascending mark list.
bool mark_set_less(MarkSet a, MarkSet b);
std::string marks_to_string(MarkSet s);

struct MarkedGenus {
  int g;
  int n;

  MarkedGenus(int genus, int marks);

  bool is(int gg, int nn) const { return g == gg && n == nn; }
  bool stable() const { return 2 * g - 2 + n > 0; }
  std::string to_string() const;
  friend bool operator==(const MarkedGenus& a, const MarkedGenus& b) { return a.g == b.g && a.n == b.n; }
};

// Irr, or the class of (i,I) under (i,I) ~ (g-i, I^c), stored by its smaller representative.
class BoundaryIndex {
 public:
  static BoundaryIndex irr() { return BoundaryIndex(true, 0, 0); }
  // Throws DomainError when (i,I) is not an element of the index set.
  static BoundaryIndex pair(int i, MarkSet I, const MarkedGenus& ambient);
  static std::optional<BoundaryIndex> try_pair(int i, MarkSet I, const MarkedGenus& ambient);

  bool is_irr() const { return irr_; }
  int genus() const { return genus_; }
  MarkSet marks() const { return marks_; }
  // True when the stored representative is canonical and valid for the ambient.
  bool belongs_to(const MarkedGenus& ambient) const;
  std::string to_string() const;

  friend bool operator==(const BoundaryIndex& a, const BoundaryIndex& b) {
    return a.irr_ == b.irr_ && a.genus_ == b.genus_ && a.marks_ == b.marks_;
  }
  friend bool operator!=(const BoundaryIndex& a, const BoundaryIndex& b) { return !(a == b); }
  friend bool operator<(const BoundaryIndex& a, const BoundaryIndex& b);

 private:
  BoundaryIndex(bool irr, int genus, MarkSet marks) : irr_(irr), genus_(genus), marks_(marks) {}
  bool irr_;
  int genus_;
  MarkSet marks_;
};

inline BoundaryIndex canonical_index(int i, MarkSet I, const MarkedGenus& ambient) {
  return BoundaryIndex::pair(i, I, ambient);
}

// The class [1,∅] (elliptic tails), when it exists.
std::optional<BoundaryIndex> elliptic_tail_index(const MarkedGenus& ambient);
bool is_elliptic_tail_index(const BoundaryIndex& idx, const MarkedGenus& ambient);
// The class [0,{k}].
BoundaryIndex psi_index(int k, const MarkedGenus& ambient);
bool is_psi_index(const BoundaryIndex& idx, const MarkedGenus& ambient);

class TSubset {
 public:
  using const_iterator = std::set<BoundaryIndex>::const_iterator;

  TSubset() = default;
  TSubset(std::initializer_list<BoundaryIndex> members) : members_(members) {}
  explicit TSubset(std::set<BoundaryIndex> members) : members_(std::move(members)) {}

  bool contains(const BoundaryIndex& idx) const { return members_.count(idx) > 0; }
  bool has_irr() const { return contains(BoundaryIndex::irr()); }
  void insert(const BoundaryIndex& idx) { members_.insert(idx); }
  void erase(const BoundaryIndex& idx) { members_.erase(idx); }
  void merge(const TSubset& other) { members_.insert(other.begin(), other.end()); }
  bool includes(const TSubset& sub) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::set<BoundaryIndex>& members() const { return members_; }
  std::string to_string() const;

  friend bool operator==(const TSubset& a, const TSubset& b) { return a.members_ == b.members_; }
  friend bool operator!=(const TSubset& a, const TSubset& b) { return !(a == b); }
  friend bool operator<(const TSubset& a, const TSubset& b) { return a.members_ < b.members_; }

 private:
  std::set<BoundaryIndex> members_;
};

TSubset all_indices(const MarkedGenus& ambient);

enum class IndexScope { All, WithoutIrr };
std::vector<BoundaryIndex> enumerate_indices(const MarkedGenus& ambient, IndexScope scope = IndexScope::All);

// {[τ,I],[τ+1,I]} with neither member equal to [1,∅]. The two classes coincide
// exactly when n = 0 and g = 2τ+1.
struct NeighborPair {
  int genus;
  MarkSet marks;
  BoundaryIndex lower;
  BoundaryIndex upper;

  bool self_paired() const { return lower == upper; }
  TSubset as_subset() const { return TSubset{lower, upper}; }
  std::string to_string() const;
};
std::vector<NeighborPair> neighbor_pairs(const MarkedGenus& ambient);

// Throws DomainError if some member does not belong to the ambient index set.
void check_members(const TSubset& T, const MarkedGenus& ambient);

bool is_admissible(const TSubset& T, const MarkedGenus& ambient);
TSubset admissible_reduction(const TSubset& T, const MarkedGenus& ambient);
TSubset divisorial_part(const TSubset& T, const MarkedGenus& ambient);
std::vector<TSubset> minimal_subsets(const MarkedGenus& ambient);
BigInt count_admissible(const MarkedGenus& ambient);

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;
// Distinct unions of minimal subsets, sorted. Throws DomainError when 2^(#minimal) exceeds cap.
std::vector<TSubset> enumerate_admissible(const MarkedGenus& ambient,
                                          std::size_t cap = kDefaultEnumerationCap);

enum class StackRelation { Equal, Subset, Superset, Incomparable };
StackRelation stack_relation(const TSubset& T, const TSubset& S, const MarkedGenus& ambient);
std::string to_string(StackRelation r);

}  // namespace mgn
