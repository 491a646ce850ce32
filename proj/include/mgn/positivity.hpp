#pragma once

#include <string>
#include <vector>

#include "mgn/divisor.hpp"
#include "mgn/fcurves.hpp"

namespace mgn {

enum class PositivityStatus { FAmple, FNefStrictExceptEll, FNefOnExactSet, FNef, NotFNef };
std::string to_string(PositivityStatus s);

struct Witness {
  FCurve curve;
  Rational value;
};

// Witnesses are the curves with value ≤ 0, in catalogue order.
struct PositivityVerdict {
  PositivityStatus status;
  std::vector<Witness> witnesses;
};

// One evaluated inequality "lhs relation rhs".
struct Inequality {
  std::string name;
  Rational lhs;
  std::string relation;  // "<", "<=", "=", ">=", ">"
  Rational rhs;
  bool holds;
};
Inequality evaluate(std::string name, const Rational& lhs, const std::string& relation, const Rational& rhs);

PositivityVerdict brute_force_verdict(const DivisorClass& L);

enum class NefMode { Ample, NefEllOnly };

// The numerical conditions for an adjoint class on Mgn to be F-ample
// (Ample) or F-nef and positive on every F-curve except Ell (NefEllOnly).
// When log is given it receives, per condition, the failing or tightest instance.
bool adjoint_fnef_closed_form(const AdjointParams& p, NefMode mode, std::vector<Inequality>* log = nullptr);

// The numerical conditions for Υ^* of an adjoint class on MgnPs to be F-nef
// with zero set exactly the contracted face of T.
bool ps_adjoint_fnef_for_T(const AdjointParams& p, const TSubset& T, std::vector<Inequality>* log = nullptr);

// Brute force on MgnPs through Υ^*: FNefOnExactSet when the zero set is the
// contracted face of T, FNef for another zero set, NotFNef otherwise.
PositivityVerdict ps_verdict(const DivisorClass& L, const TSubset& T);
bool verdict_matches_T(const DivisorClass& L, const TSubset& T);

}  // namespace mgn
