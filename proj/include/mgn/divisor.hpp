#pragma once

#include <map>
#include <optional>
#include <string>

#include "mgn/index_set.hpp"
#include "mgn/rational.hpp"

namespace mgn {

// Mgn is the Deligne-Mumford compactification; MgnPs the pseudostable one,
// whose Picard group has no [1,∅] boundary class.
enum class Space { Mgn, MgnPs };
std::string to_string(Space s);
Space parse_space(const std::string& s);

// Coordinates in the basis λ, δ_irr, δ_{i,I}. The psi classes are not basis
// elements: ψ_k = -δ_{0,{k}}. Zero coefficients are never stored.
class DivisorClass {
 public:
  DivisorClass(Space space, MarkedGenus ambient);

  static DivisorClass hodge(Space space, const MarkedGenus& amb);
  static DivisorClass basis(Space space, const MarkedGenus& amb, const BoundaryIndex& idx);
  static DivisorClass psi(Space space, const MarkedGenus& amb, int k);
  // Sum of all ψ_k.
  static DivisorClass total_psi(Space space, const MarkedGenus& amb);
  // δ_irr plus every boundary class that is not of psi type.
  static DivisorClass total_delta(Space space, const MarkedGenus& amb);
  // K = 13λ - 2δ + ψ.
  static DivisorClass canonical(Space space, const MarkedGenus& amb);

  Space space() const { return space_; }
  const MarkedGenus& ambient() const { return ambient_; }

  const Rational& lambda() const { return lambda_; }
  Rational irr() const { return coefficient(BoundaryIndex::irr()); }
  Rational coefficient(const BoundaryIndex& idx) const;
  // Irr (if non-zero) followed by the boundary classes, in index order.
  const std::map<BoundaryIndex, Rational>& terms() const { return terms_; }

  // In genus 0 λ and δ_irr vanish, so setting them is a no-op there.
  DivisorClass& set_lambda(const Rational& c);
  DivisorClass& set(const BoundaryIndex& idx, const Rational& c);
  DivisorClass& add(const BoundaryIndex& idx, const Rational& c);

  bool is_zero() const { return lambda_ == 0 && terms_.empty(); }
  std::string to_string() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& c);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

 private:
  void check_index(const BoundaryIndex& idx) const;
  void check_compatible(const DivisorClass& o) const;

  Space space_;
  MarkedGenus ambient_;
  Rational lambda_;
  std::map<BoundaryIndex, Rational> terms_;
};

// L = K + ψ + αδ + aλ written as (13+a)λ - Σ(2-α_j)δ_j.
struct AdjointParams {
  Space space;
  MarkedGenus ambient;
  Rational a;
  Rational alpha_irr;
  std::map<BoundaryIndex, Rational> alphas;  // every pair index the space carries

  AdjointParams(Space s, MarkedGenus amb) : space(s), ambient(amb) {}

  static AdjointParams uniform(Space s, const MarkedGenus& amb, const Rational& a, const Rational& alpha_irr,
                               const Rational& alpha);
  const Rational& alpha(const BoundaryIndex& idx) const;
  // Throws DomainError unless g ≥ 1, a ≥ 0, every α ∈ [0,1] and the map covers exactly the space's indices.
  void validate() const;
};

// Pair indices carried by the space: all of them on Mgn, all but [1,∅] on MgnPs.
std::vector<BoundaryIndex> pair_indices(Space s, const MarkedGenus& amb);

DivisorClass from_adjoint(const AdjointParams& p);
// Reads (a, α) back; nullopt when some coordinate falls outside the adjoint ranges.
std::optional<AdjointParams> to_adjoint(const DivisorClass& L);

DivisorClass pushforward_upsilon(const DivisorClass& L);
DivisorClass pullback_upsilon(const DivisorClass& L);
// Forgets α_{1,∅}: the parameters of the pushforward.
AdjointParams pushforward_params(const AdjointParams& p);
// Coefficient of δ_{1,∅} in L - Υ^*Υ_*L for L = from_adjoint(p).
Rational push_pull_defect(const AdjointParams& p);

// L on MgnPs has degree zero on every elliptic bridge whose type lies in T.
bool is_T_compatible(const DivisorClass& L, const TSubset& T);

// 13λ - 2δ + ψ - 8 Σ δ_{1,{j}}, the sum over the distinct classes [1,{j}]
// with {[0,{j}],[1,{j}]} ⊆ T. Requires T to reduce to its divisorial part.
DivisorClass crepant_canonical_class(const TSubset& T, const MarkedGenus& amb);

// Pullback along M̄_{0,g+n} → M̄_{g,n} attaching elliptic tails at marks n+1..n+g.
DivisorClass pullback_to_genus_zero(const DivisorClass& L);

}  // namespace mgn
