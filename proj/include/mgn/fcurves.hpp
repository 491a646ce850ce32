#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgn/divisor.hpp"
#include "mgn/index_set.hpp"

namespace mgn {

// Catalogue order: Ell, FIrr, F3, Fs, F5, F6.
enum class FCurveFamily { Ell, FIrr, F3, Fs, F5, F6 };
std::string to_string(FCurveFamily f);
FCurveFamily parse_family(const std::string& s);

struct Part {
  int genus;
  MarkSet marks;

  std::string to_string() const;
  friend bool operator==(const Part& a, const Part& b) { return a.genus == b.genus && a.marks == b.marks; }
  friend bool operator<(const Part& a, const Part& b);
};

// Intersection numbers with the basis λ, δ_irr, δ_{i,I}.
struct IntersectionVector {
  Rational lambda;
  std::map<BoundaryIndex, Rational> terms;

  void add(const BoundaryIndex& idx, const Rational& c);
  friend bool operator==(const IntersectionVector& a, const IntersectionVector& b) {
    return a.lambda == b.lambda && a.terms == b.terms;
  }
  friend bool operator<(const IntersectionVector& a, const IntersectionVector& b);
};

// F3 and Fs carry one part, F5 two (the third is the complement attached at
// two points), F6 three (the fourth is the complement).
class FCurve {
 public:
  static FCurve elliptic(const MarkedGenus& amb);
  static FCurve irreducible(const MarkedGenus& amb);
  static FCurve single(const MarkedGenus& amb, Part p);
  static FCurve split(const MarkedGenus& amb, Part p);
  static FCurve pair(const MarkedGenus& amb, Part p, Part q);
  static FCurve triple(const MarkedGenus& amb, Part p, Part q, Part r);
  // Dispatches on the family and validates the part count and ranges.
  static FCurve make(const MarkedGenus& amb, FCurveFamily f, const std::vector<Part>& parts);

  FCurveFamily family() const { return family_; }
  const std::vector<Part>& parts() const { return parts_; }
  const MarkedGenus& ambient() const { return ambient_; }
  // The parts including the implied ones (three for F5, four for F6).
  std::vector<Part> all_parts() const;
  std::string to_string() const;

  friend bool operator==(const FCurve& a, const FCurve& b) {
    return a.family_ == b.family_ && a.parts_ == b.parts_ && a.ambient_ == b.ambient_;
  }
  friend bool operator<(const FCurve& a, const FCurve& b);

 private:
  FCurve(const MarkedGenus& amb, FCurveFamily f, std::vector<Part> parts)
      : ambient_(amb), family_(f), parts_(std::move(parts)) {}
  MarkedGenus ambient_;
  FCurveFamily family_;
  std::vector<Part> parts_;
};

IntersectionVector intersection_vector(const FCurve& C);
Rational intersect(const DivisorClass& L, const FCurve& C);
Rational intersect(const DivisorClass& L, const IntersectionVector& v);

// Every F-curve family member, one per distinct intersection vector (the
// first in catalogue order wins).
std::vector<FCurve> enumerate_fcurves(const MarkedGenus& amb);
// All parameter tuples before deduplication.
std::vector<FCurve> enumerate_fcurves_raw(const MarkedGenus& amb);

struct CatalogueEntry {
  FCurve curve;
  IntersectionVector vector;
};
// Memoized per (g,n); safe to call from several threads.
const std::vector<CatalogueEntry>& fcurve_catalogue(const MarkedGenus& amb);
const std::vector<FCurve>& raw_fcurve_catalogue(const MarkedGenus& amb);

// Elliptic bridge curve types on the pseudostable space.
struct BridgeType {
  bool irr;
  NeighborPair pair;  // unused when irr

  static BridgeType irreducible(const MarkedGenus& amb);
  std::vector<BoundaryIndex> members() const;  // with multiplicity
  TSubset type() const;
  std::string to_string() const;
  friend bool operator==(const BridgeType& a, const BridgeType& b);
};

std::vector<BridgeType> bridge_curves(const MarkedGenus& amb, const TSubset* filter = nullptr);
Rational intersect_bridge(const DivisorClass& L, const BridgeType& B);
// The weight character of the bridge's automorphism on the fiber of L. A class
// appearing twice in a self-paired bridge contributes twice.
Rational weight(const DivisorClass& L, const BridgeType& B);

// F-curves whose images span the face contracted by M̄ → M̄^ps(T).
std::vector<FCurve> fcurves_in_contracted_face(const MarkedGenus& amb, const TSubset& T);

}  // namespace mgn
