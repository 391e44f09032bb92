#pragma once

#include "coxkit/element.hpp"

namespace coxkit {

struct RootEnumeration {
  std::vector<RootVector> roots;  // positive roots, depth levels in order
  std::vector<int> depths;        // depth of roots[i]
  bool saturated;                 // true when a sweep added nothing new
};

// Positive roots by breadth-first closure under simple reflections, starting
// from the simple roots (depth 1). Stops when saturated, when the depth bound
// is exceeded, or when more than max_count roots appear (whichever is first;
// pass 0 for no depth bound). Order is deterministic: by depth, then by the
// structural order within a level.
RootEnumeration enumerate_positive_roots(const SystemPtr& sys, int depth_bound,
                                         size_t max_count);

struct GroupEnumeration {
  std::vector<Element> elements;  // by length, ShortLex within a length
  bool saturated;
};

// All group elements by word-length BFS; stops once more than max_count
// elements appear (saturated = false then).
GroupEnumeration enumerate_elements(const SystemPtr& sys, size_t max_count);

// Closure of a generating set under right multiplication, BFS from the
// identity; deterministic ShortLex ordering of the result.
GroupEnumeration subgroup_closure(const SystemPtr& sys, const std::vector<Element>& generators,
                                  size_t max_count);

}  // namespace coxkit
