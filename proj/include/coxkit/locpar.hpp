#pragma once

#include "coxkit/parabolic.hpp"

namespace coxkit {

// Recognition of finite Coxeter graphs against the classification, one
// connected component at a time. Orders saturate at ULLONG_MAX; order is 0
// for infinite components.
struct ComponentType {
  std::vector<int> members;  // ambient generator indices, sorted
  std::string label;         // "A3", "B4", "D5", "E6".."E8", "F4", "H3", "H4", "I2(m)", "infinite"
  bool finite = false;
  unsigned long long order = 0;
};

struct TypeInfo {
  std::vector<ComponentType> components;
  bool finite = false;
  unsigned long long order = 0;  // product over components, saturating; 0 when infinite
  std::string str() const;       // "A3", "A1 x B2", "infinite: ..." forms
};

TypeInfo finite_type_recognize(const SystemPtr& sys);

// A finite-rank Coxeter group is locally finite exactly when it is finite, so
// this classifies the components and reports whether all are finite type.
// The four infinite-rank locally finite patterns live in the families module.
struct LocalFiniteness {
  bool locally_finite = false;
  std::vector<ComponentType> components;
};
LocalFiniteness locally_finite_classify(const SystemPtr& sys);

// is_parabolic over every subset of the canonical generators of size <= k.
// The verdict is never silently upgraded: fully_certified needs every subset
// of every size answered yes, a definitive no anywhere is a counterexample,
// and anything else reports the size up to which all subsets are certified.
enum class LpVerdict { fully_certified, certified_up_to_k, counterexample };
std::string lp_verdict_str(LpVerdict v);

struct SubsetCertificate {
  std::vector<int> subset;  // indices into canonical_roots()
  IsParabolicResult result;
};

struct LocallyParabolicReport {
  LpVerdict verdict = LpVerdict::certified_up_to_k;
  int certified_size = 0;  // all subsets of size <= this answered yes
  std::vector<SubsetCertificate> checked;
  std::optional<std::vector<int>> counterexample_subset;
};

LocallyParabolicReport is_locally_parabolic(const ReflectionSubgroup& G, int k,
                                            int search_bound = 1000);

// Locally parabolic closure of a finite element set: the support of X spans a
// standard parabolic that contains X; when that subgroup is finite the
// parabolic closure inside it is returned (and equals the locally parabolic
// closure, which finite-rank containment collapses to the parabolic one).
// When the support subgroup is infinite there is nothing to enumerate here
// and the outcome says so instead of guessing; truncation towers in the
// families module are the tool for that regime.
struct LpClosureResult {
  enum class Status { computed, support_infinite };
  Status status = Status::support_infinite;
  std::optional<ParabolicDescriptor> descriptor;
  std::vector<int> support;
  std::string note;
};
LpClosureResult lp_closure(const SystemPtr& sys, const std::vector<Element>& X,
                           std::size_t max_elements = 200000);

}  // namespace coxkit
