#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgn/divisor.hpp"
#include "mgn/positivity.hpp"

namespace mgn {

enum class ModelKind { Identity, UpsilonPs, UpsilonT, Unclassified };
std::string to_string(ModelKind k);

enum class UnclassifiedReason { None, OutsideRegion, SearchCapped, ExcludedCase, PushforwardOnly, Ambiguous };
std::string to_string(UnclassifiedReason r);

struct Certificate {
  std::string clause;  // "A", "B", "C1", "C2", "C3", "D", or "none"
  std::vector<Inequality> checks;
  std::vector<std::string> notes;
  std::optional<TSubset> pushforward_T;  // set with PushforwardOnly
};

struct AmpleModelResult {
  ModelKind model = ModelKind::Unclassified;
  TSubset T;  // meaningful for UpsilonT
  UnclassifiedReason reason = UnclassifiedReason::None;
  Certificate certificate;

  // "Identity", "UpsilonPs", "UpsilonT{...}" or "Unclassified(reason)".
  std::string label() const;
};

inline constexpr std::size_t kDefaultSearchCap = std::size_t{1} << 16;

struct ClassifyOptions {
  std::size_t search_cap = kDefaultSearchCap;
};

// Total on valid parameters on Mgn; throws DomainError only for invalid input.
AmpleModelResult classify(const AdjointParams& p, const ClassifyOptions& opts = {});
// Requires r.model == UpsilonT.
bool uniqueness_check(const AdjointParams& p, const AmpleModelResult& r);

struct RationalRange {
  Rational from, to, step;
  std::vector<Rational> values() const;  // throws DomainError on an empty range or step ≤ 0
};

struct GridSpec {
  MarkedGenus ambient;
  RationalRange a;
  RationalRange alpha_irr;
  // Exactly one profile kind is used: a uniform α range, or explicit α maps.
  std::optional<RationalRange> uniform_alpha;
  std::vector<std::map<BoundaryIndex, Rational>> profiles;

  explicit GridSpec(MarkedGenus amb) : ambient(amb) {}
  std::size_t profile_count() const;
  // Row-major: a, then profile, then α_irr.
  std::vector<AdjointParams> points() const;
};

struct ChamberRecord {
  std::size_t index;
  std::size_t profile;
  AdjointParams point;
  AmpleModelResult result;
};

// Parallel over the grid; the output order is the grid order regardless of threads.
std::vector<ChamberRecord> sweep(const GridSpec& grid, unsigned threads = 0, const ClassifyOptions& opts = {});
std::map<std::string, std::size_t> summarize(const std::vector<ChamberRecord>& records);

}  // namespace mgn
