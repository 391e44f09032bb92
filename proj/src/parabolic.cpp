#include "coxkit/parabolic.hpp"

#include "coxkit/locpar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace coxkit {
namespace {

// Subsets of `universe` (sorted index list) in lexicographic order of the
// index lists: {}, {0}, {0,1}, {0,1,2}, ..., {0,2}, ..., {1}, ...
void subsets_lex(const std::vector<int>& universe,
                 const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    visit(cur);
    for (std::size_t i = from; i < universe.size(); ++i) {
      cur.push_back(universe[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<std::string> root_set_key(const std::vector<RootVector>& roots) {
  std::vector<std::string> key;
  key.reserve(roots.size());
  for (const RootVector& r : roots) key.push_back(r.str());
  std::sort(key.begin(), key.end());
  return key;
}

// First (u, K) in (ShortLex on u, lex on K within `universe`) order with
// u . Pi_K equal to the given root set; this is the normalization used
// whenever a subgroup known to be parabolic needs a descriptor.
ParabolicDescriptor find_descriptor_for_roots(const SystemPtr& sys,
                                              const std::vector<Element>& elements,
                                              const std::vector<int>& universe,
                                              const std::vector<RootVector>& target) {
  std::set<RootVector, RootLess> want(target.begin(), target.end());
  for (const Element& u : elements) {
    ParabolicDescriptor hit;
    bool found = false;
    subsets_lex(universe, [&](const std::vector<int>& K) {
      if (found || K.size() != want.size()) return;
      for (int s : K)
        if (!want.count(u.act_simple(s))) return;
      hit.w = u;
      hit.I = K;
      found = true;
    });
    if (found) return hit;  // u . alpha_k positive for all k, so u is coset-minimal
  }
  throw std::logic_error("find_descriptor_for_roots: no descriptor matches the root set");
}

}  // namespace

ParabolicDescriptor make_descriptor(const Element& w, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  ParabolicDescriptor d;
  d.w = coset_min(w, I).first;
  d.I = std::move(I);
  return d;
}

ParabolicDescriptor trivial_descriptor(const SystemPtr& sys) {
  ParabolicDescriptor d;
  d.w = Element::identity(sys);
  return d;
}

std::string descriptor_str(const ParabolicDescriptor& d) {
  std::string out = "(" + d.w.word_str() + ", {";
  for (std::size_t i = 0; i < d.I.size(); ++i) {
    if (i) out += ",";
    out += d.w.system()->name(d.I[i]);
  }
  return out + "})";
}

std::vector<RootVector> parabolic_canonical_roots(const ParabolicDescriptor& d) {
  std::vector<RootVector> roots;
  for (int s : d.I) roots.push_back(d.w.act_simple(s));
  std::sort(roots.begin(), roots.end(), root_structural_less);
  return roots;
}

bool descriptor_equal(const ParabolicDescriptor& a, const ParabolicDescriptor& b) {
  if (a.I.size() != b.I.size()) return false;
  return parabolic_canonical_roots(a) == parabolic_canonical_roots(b);
}

bool parabolic_contains(const ParabolicDescriptor& d, const Element& x) {
  Element moved = d.w.inverse() * x * d.w;
  for (int s : moved.support())
    if (!std::binary_search(d.I.begin(), d.I.end(), s)) return false;
  return true;
}

std::vector<ParabolicDescriptor> all_parabolics(const SystemPtr& sys, std::size_t max_elements) {
  // Recognize infinite type before trying to enumerate to the cap.
  if (!finite_type_recognize(sys).finite)
    throw std::invalid_argument("all_parabolics: ambient group must be finite");
  GroupEnumeration group = enumerate_elements(sys, max_elements);
  if (!group.saturated)
    throw std::invalid_argument("all_parabolics: ambient group must be finite");
  std::vector<int> universe(sys->rank());
  for (int s = 0; s < sys->rank(); ++s) universe[s] = s;

  std::vector<ParabolicDescriptor> out;
  std::set<std::vector<std::string>> seen;
  for (const Element& u : group.elements) {
    subsets_lex(universe, [&](const std::vector<int>& K) {
      ParabolicDescriptor d = make_descriptor(u, K);
      if (seen.insert(root_set_key(parabolic_canonical_roots(d))).second)
        out.push_back(std::move(d));
    });
  }
  return out;
}

namespace {

// Shared engine: the element set intersection of two parabolics, converted
// back to a descriptor via its canonical roots. `elements` must enumerate a
// finite group containing both subgroups, `roots` its positive roots, and
// `universe` the generator subset descriptors may draw from.
ParabolicDescriptor intersect_in_scope(const SystemPtr& sys, const std::vector<Element>& elements,
                                       const std::vector<RootVector>& roots,
                                       const std::vector<int>& universe,
                                       const ParabolicDescriptor& a, const ParabolicDescriptor& b) {
  std::set<std::vector<int>> member_words;
  for (const Element& x : elements)
    if (parabolic_contains(a, x) && parabolic_contains(b, x)) member_words.insert(x.word());

  std::vector<RootVector> phi;
  for (const RootVector& gamma : roots)
    if (member_words.count(reflection_element(gamma).word())) phi.push_back(gamma);

  if (phi.empty()) return trivial_descriptor(sys);
  std::vector<RootVector> pi = canonical_generators(sys, phi);
  return find_descriptor_for_roots(sys, elements, universe, pi);
}

ParabolicDescriptor closure_in_scope(const SystemPtr& sys, const std::vector<Element>& elements,
                                     const std::vector<RootVector>& roots,
                                     const std::vector<int>& universe,
                                     const std::vector<Element>& X) {
  ParabolicDescriptor cur;
  cur.w = Element::identity(sys);
  cur.I = universe;
  std::vector<int> universe_sorted = universe;

  // Walk every parabolic of the scope; intersecting with each one containing
  // X descends to the minimal one.
  std::set<std::vector<std::string>> seen;
  for (const Element& u : elements) {
    subsets_lex(universe_sorted, [&](const std::vector<int>& K) {
      ParabolicDescriptor d = make_descriptor(u, K);
      if (!seen.insert(root_set_key(parabolic_canonical_roots(d))).second) return;
      for (const Element& x : X)
        if (!parabolic_contains(d, x)) return;
      cur = intersect_in_scope(sys, elements, roots, universe_sorted, cur, d);
    });
  }
  return cur;
}

}  // namespace

ParabolicDescriptor intersect_parabolics_finite(const SystemPtr& sys, const ParabolicDescriptor& a,
                                                const ParabolicDescriptor& b,
                                                std::size_t max_elements) {
  if (!finite_type_recognize(sys).finite)
    throw std::invalid_argument("intersect_parabolics_finite: ambient group must be finite");
  GroupEnumeration group = enumerate_elements(sys, max_elements);
  if (!group.saturated)
    throw std::invalid_argument("intersect_parabolics_finite: ambient group must be finite");
  RootEnumeration ambient = enumerate_positive_roots(sys, 0, max_elements);
  std::vector<int> universe(sys->rank());
  for (int s = 0; s < sys->rank(); ++s) universe[s] = s;
  return intersect_in_scope(sys, group.elements, ambient.roots, universe, a, b);
}

ParabolicDescriptor parabolic_closure_finite(const SystemPtr& sys, const std::vector<Element>& X,
                                             std::size_t max_elements) {
  std::vector<int> universe(sys->rank());
  for (int s = 0; s < sys->rank(); ++s) universe[s] = s;
  return parabolic_closure_within(sys, universe, X, max_elements);
}

ParabolicDescriptor parabolic_closure_within(const SystemPtr& sys, const std::vector<int>& scope,
                                             const std::vector<Element>& X,
                                             std::size_t max_elements) {
  std::vector<int> universe = scope;
  std::sort(universe.begin(), universe.end());
  for (const Element& x : X)
    for (int s : x.support())
      if (!std::binary_search(universe.begin(), universe.end(), s))
        throw std::invalid_argument("parabolic_closure_within: element outside the scope subgroup");

  if (!finite_type_recognize(sys->restriction(universe)).finite)
    throw std::invalid_argument("parabolic_closure_within: scope subgroup must be finite");
  std::vector<Element> gens;
  for (int s : universe) gens.push_back(Element::generator(sys, s));
  GroupEnumeration group = subgroup_closure(sys, gens, max_elements);
  if (!group.saturated)
    throw std::invalid_argument("parabolic_closure_within: scope subgroup must be finite");

  std::vector<RootVector> simple;
  for (int s : universe) simple.push_back(RootVector::simple(sys, s));
  SubgroupRoots roots = subgroup_positive_roots(ReflectionSubgroup(sys, simple), max_elements);
  if (!roots.saturated)
    throw std::logic_error("parabolic_closure_within: root closure overflow in a finite subgroup");

  return closure_in_scope(sys, group.elements, roots.roots, universe, X);
}

IsParabolicResult is_parabolic(const ReflectionSubgroup& G, int search_bound,
                               unsigned long long exhaustive_order_cap) {
  const SystemPtr& sys = G.system();
  IsParabolicResult res;
  const std::vector<RootVector>& pi = G.canonical_roots();

  bool all_simple = true;
  for (const RootVector& r : pi)
    if (!r.is_simple()) all_simple = false;
  if (all_simple) {
    res.verdict = Membership::yes;
    res.conjugator = Element::identity(sys);
    for (const RootVector& r : pi) res.I.push_back(r.support()[0]);
    std::sort(res.I.begin(), res.I.end());
    res.reason = "canonical roots are simple";
    return res;
  }

  if (G.rank() > sys->rank()) {
    res.verdict = Membership::no;
    res.reason = "rank exceeds the ambient rank";
    return res;
  }

  TypeInfo ambient_type = finite_type_recognize(sys);
  if (ambient_type.finite && ambient_type.order <= exhaustive_order_cap) {
    GroupEnumeration group = enumerate_elements(sys, static_cast<std::size_t>(ambient_type.order));
    std::set<RootVector, RootLess> want(pi.begin(), pi.end());
    std::vector<int> universe(sys->rank());
    for (int s = 0; s < sys->rank(); ++s) universe[s] = s;
    for (const Element& u : group.elements) {
      bool found = false;
      subsets_lex(universe, [&](const std::vector<int>& K) {
        if (found || K.size() != want.size()) return;
        for (int s : K)
          if (!want.count(u.act_simple(s))) return;
        res.I = K;
        found = true;
      });
      if (found) {
        res.verdict = Membership::yes;
        res.conjugator = u;
        res.reason = "exhaustive search";
        return res;
      }
    }
    res.verdict = Membership::no;
    res.reason = "exhaustive search of the finite ambient group";
    return res;
  }

  // Greedy walk: as long as some canonical root is not simple, apply the
  // smallest simple reflection that strictly deepens no proof obligation:
  // a generator s with <alpha_s, delta> positive for a non-simple delta. The
  // pairwise nonpositivity of a canonical set keeps alpha_s outside it, so
  // every image stays positive. Success is verified from scratch at the end.
  std::vector<RootVector> cur = pi;
  Element acc = Element::identity(sys);
  for (int step = 0; step < search_bound; ++step) {
    int pick = -1;
    for (int s = 0; s < sys->rank() && pick < 0; ++s) {
      for (const RootVector& delta : cur) {
        if (delta.is_simple()) continue;
        FieldElem t = form(RootVector::simple(sys, s), delta);
        if (t.sign() > 0) {
          pick = s;
          break;
        }
      }
    }
    if (pick < 0) break;  // all simple
    for (RootVector& delta : cur) delta = simple_reflect(pick, delta);
    acc = Element::generator(sys, pick) * acc;
  }

  bool done = true;
  for (const RootVector& r : cur)
    if (!r.is_simple()) done = false;
  if (!done) {
    res.verdict = Membership::unknown;
    res.reason = "bounded search exhausted";
    return res;
  }
  for (const RootVector& r : pi)
    if (!acc.act(r).is_simple())
      throw std::logic_error("is_parabolic: certificate failed verification");
  res.verdict = Membership::yes;
  res.conjugator = acc.inverse();
  for (const RootVector& r : cur) res.I.push_back(r.support()[0]);
  std::sort(res.I.begin(), res.I.end());
  res.reason = "greedy descent certificate";
  return res;
}

std::vector<int> maximal_finite_parabolic_over(const SystemPtr& sys, const std::vector<int>& I) {
  std::vector<int> J = I;
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  if (!J.empty() && !finite_type_recognize(sys->restriction(J)).finite)
    throw std::invalid_argument("maximal_finite_parabolic_over: W_I is infinite");
  for (int s = 0; s < sys->rank(); ++s) {
    if (std::binary_search(J.begin(), J.end(), s)) continue;
    std::vector<int> trial = J;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), s), s);
    if (finite_type_recognize(sys->restriction(trial)).finite) J = std::move(trial);
  }
  return J;
}

}  // namespace coxkit
