#pragma once

#include "coxkit/refsub.hpp"

namespace coxkit {

// A parabolic subgroup w W_I w^{-1}, stored with w the minimal-length
// representative of w W_I so the pair is a stable handle. The pair itself is
// still not unique per subgroup (conjugators from the normalizer of W_I give
// others), so subgroup identity goes through the canonical root set.
struct ParabolicDescriptor {
  Element w;           // coset-minimal
  std::vector<int> I;  // sorted generator indices
};

// Canonicalizes an arbitrary representative: (w, I) with w replaced by the
// minimal element of w W_I.
ParabolicDescriptor make_descriptor(const Element& w, std::vector<int> I);
ParabolicDescriptor trivial_descriptor(const SystemPtr& sys);
std::string descriptor_str(const ParabolicDescriptor& d);

// w . Pi_I, the canonical simple system of the subgroup; positive because w
// is coset-minimal. Sorted structurally.
std::vector<RootVector> parabolic_canonical_roots(const ParabolicDescriptor& d);

// Subgroup identity (two descriptors can name one subgroup).
bool descriptor_equal(const ParabolicDescriptor& a, const ParabolicDescriptor& b);

// x in w W_I w^{-1}, decided by the support of the normal form of w^{-1} x w.
bool parabolic_contains(const ParabolicDescriptor& d, const Element& x);

// Every parabolic subgroup of a finite ambient group, one descriptor per
// subgroup: scanning u in ShortLex order and I in subset-lex order, the first
// pair naming each subgroup is kept. Errors when enumeration overflows
// max_elements (infinite or too-large group).
std::vector<ParabolicDescriptor> all_parabolics(const SystemPtr& sys,
                                                std::size_t max_elements = 200000);

// Exact intersection of two parabolic subgroups of a finite group: the
// element-set intersection is itself parabolic, and the returned descriptor
// is the first (u, K) in (ShortLex, subset-lex) order with u . Pi_K equal to
// its canonical roots.
ParabolicDescriptor intersect_parabolics_finite(const SystemPtr& sys,
                                                const ParabolicDescriptor& a,
                                                const ParabolicDescriptor& b,
                                                std::size_t max_elements = 200000);

// Minimal parabolic subgroup containing all of X, by intersecting every
// parabolic that contains X (finite ambient group only).
ParabolicDescriptor parabolic_closure_finite(const SystemPtr& sys, const std::vector<Element>& X,
                                             std::size_t max_elements = 200000);

// Same computation scoped to the standard parabolic on the generator subset
// `scope`, which must generate a finite subgroup; X must lie in it. The
// result is a valid descriptor of the ambient system. This is what makes
// closures computable inside infinite ambient systems.
ParabolicDescriptor parabolic_closure_within(const SystemPtr& sys, const std::vector<int>& scope,
                                             const std::vector<Element>& X,
                                             std::size_t max_elements = 200000);

// Is the reflection subgroup G parabolic? Layered decision:
//   - canonical roots all simple: yes with identity conjugator;
//   - more canonical roots than the ambient rank: no;
//   - ambient group finite with order below exhaustive_order_cap: exhaustive
//     scan, so yes and no are both definitive;
//   - otherwise a greedy bounded walk pushing the canonical roots toward the
//     simple ones; success gives a verified yes, exhaustion gives unknown.
// A yes carries conjugator c and subset I with G = c W_I c^{-1}, verified
// exactly as c^{-1} . Pi(G) = Pi_I.
struct IsParabolicResult {
  Membership verdict = Membership::unknown;
  std::optional<Element> conjugator;
  std::vector<int> I;
  std::string reason;
};
IsParabolicResult is_parabolic(const ReflectionSubgroup& G, int search_bound = 1000,
                               unsigned long long exhaustive_order_cap = 20000);

// Greedy ascent from I through the declared generator order, adding any
// generator that keeps the standard subgroup finite. The result is maximal
// with that property but generally not unique; the declared order fixes the
// choice. Errors when W_I is already infinite.
std::vector<int> maximal_finite_parabolic_over(const SystemPtr& sys, const std::vector<int>& I);

}  // namespace coxkit
