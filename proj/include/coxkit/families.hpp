#pragma once

#include <functional>
#include <optional>

#include "coxkit/locpar.hpp"

namespace coxkit {

// Rule-defined infinite-rank systems, materialized only as finite truncations
// on the first n generators. The four locally finite shapes plus the two
// worked-example families:
//   a1inf  chain s1 - s2 - s3 - ...          (labels 3)
//   a2inf  chain ... - sm1 - s0 - s1 - ...   (labels 3, indexed by all of Z)
//   binf   chain s0 = s1 - s2 - ...          (first label 4, rest 3)
//   dinf   fork {s0p, s0} - s1 - s2 - ...    (labels 3, s0p/s0 not adjacent)
//   ex33   alias of the a1inf graph (the generating-set example lives there)
//   ex45   chain s1 - s2 - ... with every edge labeled m (m even >= 4, or oo)
enum class FamilyKind { a1inf, a2inf, binf, dinf, ex33, ex45 };

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::a1inf;
  unsigned m = 0;  // ex45 edge label; infinite_label means oo
};

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(const std::string& name);

// Label rule over the family's integer generator indices (a2inf uses negative
// indices, dinf uses -1 for the fork node s0p). Symmetric; 1 on the diagonal.
unsigned family_label(const FamilyDescriptor& fam, int i, int j);

// The finite-rank system on the first n generators. a2inf truncates
// symmetrically around 0 (lo = -((n-1)/2)); dinf needs n >= 2 so the fork
// pair is present. Results are memoized, so repeated towers share systems.
// Throws invalid_argument for bad n or a bad ex45 parameter.
SystemPtr truncate(const FamilyDescriptor& fam, int n);

struct TruncationTower {
  FamilyDescriptor family;
  std::vector<int> ranks;        // non-decreasing
  std::vector<SystemPtr> systems;
};

// Builds every truncation up front (construction is cheap and memoized).
// Throws invalid_argument when ranks is empty or decreases anywhere.
TruncationTower make_tower(const FamilyDescriptor& fam, const std::vector<int>& ranks);

// Stabilization checks. Each property maps (system, rank) to an outcome
// string; outcomes are restricted to a window (the generators of the smallest
// truncation) so they are comparable across ranks. The tower result is
// "stable" when the top three outcomes agree (all of them, for towers shorter
// than three).
//   union_subgroup    every system restricted to the window has the window's
//                     graph, and consecutive systems nest as standard
//                     parabolics (generator names and labels agree)
//   union_reflection  the window simple roots are their own canonical
//                     generator set inside each truncation
//   locally_finite    each truncation classifies as finite type, reported
//                     together with the window's recognized type
//   locally_parabolic is_locally_parabolic verdict (k = 2) for the window
//                     subgroup inside each truncation
enum class TowerPropertyKind { union_subgroup, union_reflection, locally_finite, locally_parabolic };

std::string tower_property_name(TowerPropertyKind p);
std::optional<TowerPropertyKind> tower_property_from_name(const std::string& name);

struct TowerOutcome {
  int rank = 0;
  std::string value;
};

struct TowerReport {
  std::vector<std::string> window;  // generator names the outcomes are keyed to
  std::vector<TowerOutcome> outcomes;
  bool stable = false;
};

using TowerProperty = std::function<std::string(const SystemPtr&, int rank)>;

TowerReport tower_check(const TruncationTower& tower, TowerPropertyKind property);
TowerReport tower_check(const TruncationTower& tower, const TowerProperty& property);

}  // namespace coxkit
