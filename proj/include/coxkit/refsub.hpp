#pragma once

#include "coxkit/enumerate.hpp"

#include <optional>

namespace coxkit {

// Canonical simple system of the reflection subgroup generated by the given
// positive roots. The working set is reduced pairwise: a pair of roots that is
// not the simple pair of the dihedral subgroup it generates is replaced by
// that dihedral's simple pair (computed exactly; finite dihedrals by closure
// in their 2-plane, infinite ones by a depth-guided walk). A set in which
// every pair is a dihedral simple pair is the canonical simple system of the
// subgroup it generates, so the fixed point is the answer; the oracle suite
// enforces this against the definitional computation.
std::vector<RootVector> canonical_generators(const SystemPtr& sys,
                                             const std::vector<RootVector>& roots);

// Exact feasibility of target = sum c_i * gens_i with all c_i >= 0, by
// phase-one simplex with Bland's rule over the field.
bool in_nonnegative_span(const RootVector& target, const std::vector<RootVector>& gens);

// Definitional canonical simple system, usable only when the ambient group is
// finite: enumerate the subgroup, collect its positive roots, and keep those
// that are not nonnegative combinations of the others. Independent of
// canonical_generators; the equivalence of the two is a test target.
std::vector<RootVector> pi_oracle(const SystemPtr& sys, const std::vector<RootVector>& roots,
                                  std::size_t max_elements = 200000);

// Reflection subgroup of a fixed ambient system, named by a finite set of
// positive generating roots. The canonical simple system is computed on
// construction.
class ReflectionSubgroup {
 public:
  ReflectionSubgroup(SystemPtr sys, std::vector<RootVector> generating_roots);

  const SystemPtr& system() const { return sys_; }
  const std::vector<RootVector>& generating_roots() const { return gens_; }
  const std::vector<RootVector>& canonical_roots() const { return canonical_; }
  int rank() const { return static_cast<int>(canonical_.size()); }
  // Reflections in the canonical roots, in canonical_roots() order.
  const std::vector<Element>& canonical_reflections() const;

  // Exact membership by iterated descent through the canonical roots: while
  // w sends some canonical root negative, multiply that reflection away. The
  // walk shortens w each step; w is a member iff it ends at the identity.
  bool contains(const Element& w) const;

 private:
  SystemPtr sys_;
  std::vector<RootVector> gens_;
  std::vector<RootVector> canonical_;
  mutable std::vector<Element> reflections_;  // filled on first use
};

// The subgroup's positive roots (the positive representatives of its orbit on
// the canonical roots), breadth-first up to max_count; saturated means the
// orbit closed before hitting the bound.
struct SubgroupRoots {
  std::vector<RootVector> roots;
  bool saturated;
};
SubgroupRoots subgroup_positive_roots(const ReflectionSubgroup& G, std::size_t max_count);

enum class Membership { yes, no, unknown };
std::string membership_str(Membership v);

// Is the reflection in gamma a member of G? Simple ambient roots are decided
// exactly (alpha_s gives a member iff it is itself canonical in G); otherwise
// a bounded orbit search either finds gamma = g . delta with g in G and delta
// canonical (yes, with that witness), exhausts the orbit (no), or runs out of
// budget (unknown).
struct MembershipResult {
  Membership verdict = Membership::unknown;
  std::optional<Element> witness_g;
  std::optional<RootVector> witness_delta;
};
MembershipResult reflection_membership(const ReflectionSubgroup& G, const RootVector& gamma,
                                       std::size_t orbit_bound = 20000);

// Coxeter matrix of the reflections in an ordered list of roots, from the
// exact form values: 0 maps to label 2, -cos(pi/k) to k (certified by the
// minimal polynomial of 2cos(pi/k)), anything <= -1 to the infinite label.
// A value in (-1, 0) matching no k <= order_bound, or any positive value,
// raises an error instead of guessing.
std::vector<std::vector<unsigned>> coxeter_matrix_of_roots(const std::vector<RootVector>& roots,
                                                           unsigned order_bound = 1000);
std::vector<std::vector<unsigned>> induced_coxeter_matrix(const ReflectionSubgroup& G,
                                                          unsigned order_bound = 1000);

// The induced system (G, S(G)) as a standalone CoxeterSystem over its own
// field; generator i is named t<i+1> and stands for the reflection in
// canonical root i.
SystemPtr induced_system(const ReflectionSubgroup& G, unsigned order_bound = 1000);

}  // namespace coxkit
