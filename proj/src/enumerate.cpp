#include "coxkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxkit {

RootEnumeration enumerate_positive_roots(const SystemPtr& sys, int depth_bound,
                                         size_t max_count) {
  RootEnumeration out{{}, {}, false};
  std::set<RootVector, RootLess> seen;
  std::vector<RootVector> level;
  for (int s = 0; s < sys->rank(); ++s) level.push_back(RootVector::simple(sys, s));
  int depth = 1;
  while (!level.empty()) {
    if (depth_bound > 0 && depth > depth_bound) return out;  // bound hit, not saturated
    std::sort(level.begin(), level.end(), root_structural_less);
    std::vector<RootVector> next;
    for (const auto& gamma : level) {
      if (!seen.insert(gamma).second) continue;
      out.roots.push_back(gamma);
      out.depths.push_back(depth);
      if (max_count > 0 && out.roots.size() > max_count) return out;
      for (int s = 0; s < sys->rank(); ++s) {
        RootVector img = simple_reflect(s, gamma);
        if (root_fast_positive(img) && !seen.count(img)) next.push_back(std::move(img));
      }
    }
    level = std::move(next);
    ++depth;
  }
  out.saturated = true;
  return out;
}

GroupEnumeration enumerate_elements(const SystemPtr& sys, size_t max_count) {
  std::vector<Element> gens;
  for (int s = 0; s < sys->rank(); ++s) gens.push_back(Element::generator(sys, s));
  return subgroup_closure(sys, gens, max_count);
}

GroupEnumeration subgroup_closure(const SystemPtr& sys, const std::vector<Element>& generators,
                                  size_t max_count) {
  GroupEnumeration out{{}, false};
  std::set<std::vector<int>> seen;  // normal-form words
  std::vector<Element> frontier = {Element::identity(sys)};
  seen.insert(frontier.front().word());
  out.elements.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        Element candidate = w * g;
        if (!seen.insert(candidate.word()).second) continue;
        out.elements.push_back(candidate);
        if (max_count > 0 && out.elements.size() > max_count) return out;
        next.push_back(std::move(candidate));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.saturated = true;
  return out;
}

}  // namespace coxkit
