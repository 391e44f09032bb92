// Acceptance gate: twelve timed criteria covering the worked scenarios, the
// oracle equivalences, the subgroup lemma suite, and the classification
// sweeps. One PASS/FAIL line per criterion; the exit code is the number of
// failures. Every check is exact; budgets are wall-clock milliseconds.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coxkit/parallel.hpp"
#include "coxkit/scenarios.hpp"

#if defined(COXKIT_HAVE_MPFR)
#include "support/hundred_digit.hpp"
#endif

namespace {

using namespace coxkit;

SystemPtr make_system(const std::vector<std::vector<unsigned>>& matrix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < matrix.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  return CoxeterSystem::create(names, matrix);
}

std::vector<std::vector<unsigned>> free_labels(int n) {
  std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::vector<unsigned>> chain_labels(const std::vector<unsigned>& edges) {
  auto m = free_labels(static_cast<int>(edges.size()) + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) m[i][i + 1] = m[i + 1][i] = edges[i];
  return m;
}

std::vector<std::vector<unsigned>> d4_labels() {
  auto m = free_labels(4);
  m[1][0] = m[0][1] = 3;
  m[1][2] = m[2][1] = 3;
  m[1][3] = m[3][1] = 3;
  return m;
}

std::vector<RootVector> sorted_roots(std::vector<RootVector> v) {
  std::sort(v.begin(), v.end(), root_structural_less);
  return v;
}

bool same_root_set(std::vector<RootVector> a, std::vector<RootVector> b) {
  return sorted_roots(std::move(a)) == sorted_roots(std::move(b));
}

std::set<std::string> word_set(const std::vector<Element>& v) {
  std::set<std::string> out;
  for (const Element& e : v) out.insert(e.word_str());
  return out;
}

// Straightening word u_i of the chain scenario: descending blocks, block k
// running from s_{i+k-1} down to s_{2k-1} (1-based subscripts).
Element chain_u(const SystemPtr& sys, int i) {
  std::vector<int> word;
  for (int k = 1; k <= i; ++k)
    for (int a = i + k - 1; a >= 2 * k - 1; --a) word.push_back(a - 1);
  return Element::from_word(sys, word);
}

RootVector chain_beta(const SystemPtr& sys, int j) {
  return RootVector::simple(sys, 2 * j - 2) + RootVector::simple(sys, 2 * j - 1);
}

// Lexicographically next k-combination of {0..n-1}; false once exhausted.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// First k entries of a Fisher-Yates pass; deterministic for a fixed engine.
std::vector<int> sample_indices(std::mt19937& rng, int n, int k) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng() % static_cast<unsigned>(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

struct Gate {
  int failures = 0;

  void run(int number, const std::string& what, long long budget_ms,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (ok && ms > budget_ms) {
      ok = false;
      detail = "over budget";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << number << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << " (" << ms << " ms / budget " << budget_ms << " ms)" << std::endl;
    if (!ok) ++failures;
  }
};

}  // namespace

int main() {
  Gate gate;

  // The rank-12 truncation of the simply laced chain, with beta_j the sum of
  // adjacent simples, is the shared setting of the first three criteria.
  gate.run(1, "rank-12 chain straightening identities", 10000, [](std::string& detail) {
    SystemPtr sys = truncate({FamilyKind::ex33, 0}, 12);
    for (int i = 1; i <= 5; ++i) {
      Element u = chain_u(sys, i);
      for (int j = 1; j <= i; ++j)
        if (u.act(chain_beta(sys, j)) != RootVector::simple(sys, j + i - 1)) {
          detail = "u_" + std::to_string(i) + " . beta_" + std::to_string(j) +
                   " is not alpha_" + std::to_string(j + i);
          return false;
        }
    }
    return true;
  });

  gate.run(2, "block subgroup canonical roots and conjugator certificates", 30000,
           [](std::string& detail) {
             SystemPtr sys = truncate({FamilyKind::ex33, 0}, 12);
             for (int i = 1; i <= 5; ++i) {
               std::vector<RootVector> xi;
               for (int j = 1; j <= i; ++j) xi.push_back(chain_beta(sys, j));
               if (!same_root_set(canonical_generators(sys, xi), xi)) {
                 detail = "Pi(<X_" + std::to_string(i) + ">) is not {beta_1..beta_" +
                          std::to_string(i) + "}";
                 return false;
               }
               ReflectionSubgroup G(sys, xi);
               IsParabolicResult par = is_parabolic(G);
               Element expect = chain_u(sys, i).inverse();
               std::vector<int> expect_I;
               for (int k = i; k < 2 * i; ++k) expect_I.push_back(k);
               if (par.verdict != Membership::yes || !par.conjugator ||
                   *par.conjugator != expect || par.I != expect_I) {
                 detail = "certificate for <X_" + std::to_string(i) + "> is not u_" +
                          std::to_string(i) + "^{-1}";
                 return false;
               }
             }
             return true;
           });

  gate.run(3, "tail parabolic meets head parabolic in the block subgroup", 60000,
           [](std::string& detail) {
             const int N = 12;
             SystemPtr sys = truncate({FamilyKind::ex33, 0}, N);
             const unsigned long long head_order[3] = {0, 6, 120};
             const unsigned long long meet_order[3] = {0, 2, 6};
             for (int i = 1; i <= 2; ++i) {
               std::vector<int> tail;
               for (int k = i; k < N; ++k) tail.push_back(k);
               ParabolicDescriptor Gi = make_descriptor(chain_u(sys, i).inverse(), tail);

               std::vector<Element> head_gens;
               for (int k = 0; k < 2 * i; ++k) head_gens.push_back(Element::generator(sys, k));
               GroupEnumeration head = subgroup_closure(sys, head_gens, 200000);
               if (!head.saturated || head.elements.size() != head_order[i]) {
                 detail = "head subgroup at i=" + std::to_string(i) + " has order " +
                          std::to_string(head.elements.size());
                 return false;
               }

               std::vector<Element> xi_gens;
               for (int j = 1; j <= i; ++j) xi_gens.push_back(reflection_element(chain_beta(sys, j)));
               std::set<std::string> xi_words =
                   word_set(subgroup_closure(sys, xi_gens, 200000).elements);

               std::set<std::string> meet;
               for (const Element& w : head.elements)
                 if (parabolic_contains(Gi, w)) meet.insert(w.word_str());
               if (meet != xi_words || meet.size() != meet_order[i]) {
                 detail = "meet at i=" + std::to_string(i) + " has order " +
                          std::to_string(meet.size()) + ", not <X_" + std::to_string(i) + ">";
                 return false;
               }
             }
             return true;
           });

  gate.run(4, "uniform-label chain stable roots and excluded generator", 30000,
           [](std::string& detail) {
             for (unsigned m : {4u, infinite_label}) {
               const std::string tag = " (label " + label_str(m) + ")";
               SystemPtr sys = truncate({FamilyKind::ex45, m}, 7);
               std::vector<Element> u(6);
               std::vector<RootVector> gamma;
               for (int i = 1; i <= 5; ++i) {
                 std::vector<int> word;
                 for (int k = 0; k <= i; ++k) word.push_back(k);
                 u[i] = Element::from_word(sys, word);
                 gamma.push_back(u[i].act(RootVector::simple(sys, i - 1)));
               }

               for (int i = 1; i <= 5; ++i)
                 if (classify_root(gamma[i - 1]) != RootSign::positive) {
                   detail = "gamma_" + std::to_string(i) + " not positive" + tag;
                   return false;
                 }

               for (int i = 1; i <= 5; ++i)
                 for (int j = i; j <= 5; ++j)
                   if (u[j].act(RootVector::simple(sys, i - 1)) != gamma[i - 1]) {
                     detail = "u_" + std::to_string(j) + " moves gamma_" + std::to_string(i) + tag;
                     return false;
                   }

               for (int i = 1; i <= 5; ++i)
                 for (int j = 1; j <= 5; ++j)
                   if (form(gamma[i - 1], gamma[j - 1]) !=
                       form(RootVector::simple(sys, i - 1), RootVector::simple(sys, j - 1))) {
                     detail = "form table differs at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")" + tag;
                     return false;
                   }

               RootVector alpha1 = RootVector::simple(sys, 0);
               for (int i = 1; i <= 5; ++i) {
                 std::vector<RootVector> xi(gamma.begin(), gamma.begin() + i);
                 std::vector<RootVector> pi = canonical_generators(sys, xi);
                 for (const RootVector& g : pi)
                   if (g == alpha1) {
                     detail = "alpha_1 canonical in <X_" + std::to_string(i) + ">" + tag;
                     return false;
                   }
                 ReflectionSubgroup G(sys, xi);
                 if (reflection_membership(G, alpha1).verdict != Membership::no) {
                   detail = "s_1 not excluded from <X_" + std::to_string(i) + ">" + tag;
                   return false;
                 }
               }

               std::vector<std::vector<int>> odd = sys->odd_components();
               if (static_cast<int>(odd.size()) != 7) {
                 detail = "odd components not singletons" + tag;
                 return false;
               }
               for (const std::vector<int>& comp : odd)
                 if (comp.size() != 1) {
                   detail = "odd components not singletons" + tag;
                   return false;
                 }
             }
             return true;
           });

  gate.run(5, "dihedral longest-element intersection and non-parabolic subgroups", 1000,
           [](std::string& detail) {
             SystemPtr sys = CoxeterSystem::create({"s", "t"}, {{1, 6}, {6, 1}});
             Element s = Element::generator(sys, 0);
             Element t = Element::generator(sys, 1);
             Element z = Element::from_word(sys, {0, 1, 0, 1, 0, 1});
             Element tstst = Element::from_word(sys, {1, 0, 1, 0, 1});
             Element ststs = Element::from_word(sys, {0, 1, 0, 1, 0});

             RootEnumeration phi = enumerate_positive_roots(sys, 0, 100);
             auto root_of = [&](const Element& r) -> RootVector {
               for (const RootVector& g : phi.roots)
                 if (reflection_element(g) == r) return g;
               throw std::logic_error("reflection root not found");
             };

             ReflectionSubgroup H1(sys, {RootVector::simple(sys, 0), root_of(tstst)});
             ReflectionSubgroup H2(sys, {RootVector::simple(sys, 1), root_of(ststs)});
             std::set<std::string> h1 = word_set(subgroup_closure(sys, {s, tstst}, 100).elements);
             std::set<std::string> h2 = word_set(subgroup_closure(sys, {t, ststs}, 100).elements);

             std::set<std::string> meet;
             std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(),
                                   std::inserter(meet, meet.begin()));
             if (meet != std::set<std::string>{Element::identity(sys).word_str(), z.word_str()}) {
               detail = "H1 and H2 do not meet in {e, (st)^3}";
               return false;
             }
             for (const RootVector& g : phi.roots)
               if (reflection_element(g) == z) {
                 detail = "(st)^3 is a reflection";
                 return false;
               }
             if (is_parabolic(H1).verdict != Membership::no ||
                 is_parabolic(H2).verdict != Membership::no) {
               detail = "an order-4 subgroup was not refuted as parabolic";
               return false;
             }
             return true;
           });

  gate.run(6, "canonical generators match the definitional oracle", 300000,
           [](std::string& detail) {
             const std::vector<std::pair<std::string, SystemPtr>> corpus = {
                 {"A2", make_system(chain_labels({3}))},
                 {"A3", make_system(chain_labels({3, 3}))},
                 {"B2", make_system(chain_labels({4}))},
                 {"B3", make_system(chain_labels({4, 3}))},
                 {"I2(4)", make_system(chain_labels({4}))},
                 {"I2(6)", make_system(chain_labels({6}))},
                 {"I2(8)", make_system(chain_labels({8}))},
                 {"A1x3", make_system(free_labels(3))},
             };
             for (std::size_t g = 0; g < corpus.size(); ++g) {
               const SystemPtr& sys = corpus[g].second;
               RootEnumeration phi = enumerate_positive_roots(sys, 0, 200);
               const int n = static_cast<int>(phi.roots.size());

               auto check = [&](const std::vector<int>& idx) {
                 std::vector<RootVector> sub;
                 for (int k : idx) sub.push_back(phi.roots[k]);
                 return same_root_set(canonical_generators(sys, sub), pi_oracle(sys, sub));
               };

               for (int k = 1; k <= std::min(3, n); ++k) {
                 std::vector<int> comb(k);
                 std::iota(comb.begin(), comb.end(), 0);
                 do {
                   if (!check(comb)) {
                     detail = "disagreement on a size-" + std::to_string(k) + " subset in " +
                              corpus[g].first;
                     return false;
                   }
                 } while (next_combination(comb, n));
               }

               if (n > 3) {
                 std::mt19937 rng(static_cast<unsigned>(1200 + g));
                 for (int t = 0; t < 200; ++t) {
                   int size = 4 + static_cast<int>(rng() % static_cast<unsigned>(n - 3));
                   if (!check(sample_indices(rng, n, size))) {
                     detail = "disagreement on a random size-" + std::to_string(size) +
                              " subset in " + corpus[g].first;
                     return false;
                   }
                 }
               }
             }
             return true;
           });

  gate.run(7, "reflection subgroup lemma suite on the finite corpus", 300000,
           [](std::string& detail) {
             struct Ambient {
               std::string name;
               SystemPtr sys;
               std::vector<Element> elements;
               std::vector<RootVector> roots;
               std::vector<Element> reflections;
             };
             std::vector<Ambient> corpus;
             const std::vector<std::pair<std::string, std::vector<std::vector<unsigned>>>> defs = {
                 {"A1", free_labels(1)},          {"A2", chain_labels({3})},
                 {"A3", chain_labels({3, 3})},    {"A4", chain_labels({3, 3, 3})},
                 {"B2", chain_labels({4})},       {"B3", chain_labels({4, 3})},
                 {"B4", chain_labels({4, 3, 3})}, {"D4", d4_labels()},
                 {"F4", chain_labels({3, 4, 3})}, {"H3", chain_labels({5, 3})},
                 {"I2(5)", chain_labels({5})},    {"I2(6)", chain_labels({6})},
                 {"I2(7)", chain_labels({7})},    {"I2(8)", chain_labels({8})},
                 {"A1x3", free_labels(3)},
             };
             for (const auto& [name, matrix] : defs) {
               Ambient a;
               a.name = name;
               a.sys = make_system(matrix);
               GroupEnumeration all = enumerate_elements(a.sys, 2000);
               RootEnumeration phi = enumerate_positive_roots(a.sys, 0, 100);
               if (!all.saturated || !phi.saturated) {
                 detail = "corpus group " + name + " did not enumerate";
                 return false;
               }
               a.elements = all.elements;
               a.roots = phi.roots;
               for (const RootVector& g : a.roots) a.reflections.push_back(reflection_element(g));
               corpus.push_back(std::move(a));
             }

             // Every reflection of the subgroup lies in the orbit of its
             // canonical roots, and conversely.
             auto orbit_matches = [&](const Ambient& amb, const std::vector<RootVector>& gens,
                                      std::string& why) {
               ReflectionSubgroup G(amb.sys, gens);
               SubgroupRoots orbit = subgroup_positive_roots(G, 20000);
               if (!orbit.saturated) {
                 why = "orbit overflow in " + amb.name;
                 return false;
               }
               std::vector<RootVector> member_roots;
               for (std::size_t r = 0; r < amb.roots.size(); ++r)
                 if (G.contains(amb.reflections[r])) member_roots.push_back(amb.roots[r]);
               if (!same_root_set(member_roots, orbit.roots)) {
                 why = "reflection set differs from the canonical orbit in " + amb.name;
                 return false;
               }
               return true;
             };

             for (std::size_t g = 0; g < corpus.size(); ++g) {
               const Ambient& amb = corpus[g];
               const int n = static_cast<int>(amb.roots.size());
               for (int i = 0; i < n; ++i)
                 if (!orbit_matches(amb, {amb.roots[i]}, detail)) return false;
               for (int i = 0; i < n; ++i)
                 for (int j = i + 1; j < n; ++j)
                   if (!orbit_matches(amb, {amb.roots[i], amb.roots[j]}, detail)) return false;
               if (n >= 3) {
                 std::mt19937 rng(static_cast<unsigned>(7000 + g));
                 for (int t = 0; t < 50; ++t) {
                   std::vector<int> idx = sample_indices(rng, n, 3);
                   if (!orbit_matches(amb, {amb.roots[idx[0]], amb.roots[idx[1]], amb.roots[idx[2]]},
                                      detail))
                     return false;
                 }
               }
             }

             // Standard parabolic subgroups are their own canonical data.
             for (const Ambient& amb : corpus) {
               const int rank = amb.sys->rank();
               for (int mask = 0; mask < (1 << rank); ++mask) {
                 std::vector<RootVector> gens;
                 for (int s = 0; s < rank; ++s)
                   if (mask & (1 << s)) gens.push_back(RootVector::simple(amb.sys, s));
                 if (!same_root_set(canonical_generators(amb.sys, gens), gens)) {
                   detail = "standard subset not canonical in " + amb.name;
                   return false;
                 }
               }
             }

             // Conjugating a standard parabolic carries its simple system to
             // the coset-minimal image, for every element and every subset.
             for (const Ambient& amb : corpus) {
               const int rank = amb.sys->rank();
               for (const Element& w : amb.elements) {
                 for (int mask = 1; mask < (1 << rank); ++mask) {
                   std::vector<int> I;
                   for (int s = 0; s < rank; ++s)
                     if (mask & (1 << s)) I.push_back(s);
                   Element wI = coset_min(w, I).first;
                   std::vector<RootVector> expected, conjugated;
                   for (int s : I) {
                     expected.push_back(wI.act_simple(s));
                     conjugated.push_back(positive_representative(w.act_simple(s)));
                   }
                   if (!same_root_set(canonical_generators(amb.sys, conjugated), expected)) {
                     detail = "conjugated simple system differs in " + amb.name + " at w=" +
                              w.word_str();
                     return false;
                   }
                 }
               }
             }

             // Canonical roots of the larger subgroup stay canonical in any
             // reflection subgroup of it that still contains them.
             std::mt19937 rng(424242);
             for (int t = 0; t < 500; ++t) {
               const Ambient& amb = corpus[t % corpus.size()];
               const int n = static_cast<int>(amb.roots.size());
               int gsize = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, 6)));
               std::vector<RootVector> g_gens;
               for (int k : sample_indices(rng, n, gsize)) g_gens.push_back(amb.roots[k]);
               ReflectionSubgroup G(amb.sys, g_gens);
               SubgroupRoots phiG = subgroup_positive_roots(G, 20000);
               const int m = static_cast<int>(phiG.roots.size());
               int hsize = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(m, 6)));
               std::vector<RootVector> h_gens;
               for (int k : sample_indices(rng, m, hsize)) h_gens.push_back(phiG.roots[k]);
               ReflectionSubgroup H(amb.sys, h_gens);
               for (const RootVector& gamma : G.canonical_roots()) {
                 if (!H.contains(reflection_element(gamma))) continue;
                 const std::vector<RootVector>& pih = H.canonical_roots();
                 if (std::find(pih.begin(), pih.end(), gamma) == pih.end()) {
                   detail = "a canonical root of the larger subgroup is not canonical in the "
                            "smaller one (" +
                            amb.name + ")";
                   return false;
                 }
               }
             }

             // The support of any root image meets the odd component of its
             // source generator.
             for (const Ambient& amb : corpus) {
               if (amb.elements.size() > 240) continue;
               for (const Element& w : amb.elements)
                 for (int s = 0; s < amb.sys->rank(); ++s) {
                   std::vector<int> supp = w.act_simple(s).support();
                   std::vector<int> comp = amb.sys->odd_component_of(s);
                   bool meets = false;
                   for (int x : supp)
                     meets = meets || std::find(comp.begin(), comp.end(), x) != comp.end();
                   if (!meets) {
                     detail = "support misses the odd component in " + amb.name;
                     return false;
                   }
                 }
             }
             return true;
           });

  gate.run(8, "parabolic intersection matches brute force", 300000, [](std::string& detail) {
    for (const auto& [name, edges] :
         std::vector<std::pair<std::string, std::vector<unsigned>>>{{"A3", {3, 3}}, {"B3", {4, 3}}}) {
      SystemPtr sys = make_system(chain_labels(edges));
      GroupEnumeration all = enumerate_elements(sys, 1200);
      std::vector<ParabolicDescriptor> paras = all_parabolics(sys);

      std::vector<std::set<std::string>> members(paras.size());
      for (std::size_t i = 0; i < paras.size(); ++i)
        for (const Element& w : all.elements)
          if (parabolic_contains(paras[i], w)) members[i].insert(w.word_str());

      for (std::size_t i = 0; i < paras.size(); ++i) {
        for (std::size_t j = i; j < paras.size(); ++j) {
          ParabolicDescriptor d = intersect_parabolics_finite(sys, paras[i], paras[j]);
          std::set<std::string> expect;
          std::set_intersection(members[i].begin(), members[i].end(), members[j].begin(),
                                members[j].end(), std::inserter(expect, expect.begin()));
          std::set<std::string> got;
          for (const Element& w : all.elements)
            if (parabolic_contains(d, w)) got.insert(w.word_str());
          if (got != expect) {
            detail = "intersection in " + name + " differs from the element-set meet";
            return false;
          }
          std::size_t min_rank = std::min(paras[i].I.size(), paras[j].I.size());
          if (d.I.size() > min_rank) {
            detail = "intersection rank exceeds the smaller factor in " + name;
            return false;
          }
          bool i_in_j = std::includes(members[j].begin(), members[j].end(), members[i].begin(),
                                      members[i].end());
          bool j_in_i = std::includes(members[i].begin(), members[i].end(), members[j].begin(),
                                      members[j].end());
          if (!i_in_j && !j_in_i && d.I.size() >= min_rank) {
            detail = "no strict rank drop for an incomparable pair in " + name;
            return false;
          }
        }
      }
    }
    return true;
  });

  gate.run(9, "parabolic closure is the brute-force minimum", 300000, [](std::string& detail) {
    for (const auto& [name, edges] :
         std::vector<std::pair<std::string, std::vector<unsigned>>>{{"A3", {3, 3}}, {"B3", {4, 3}}}) {
      SystemPtr sys = make_system(chain_labels(edges));
      GroupEnumeration all = enumerate_elements(sys, 1200);
      std::vector<ParabolicDescriptor> paras = all_parabolics(sys);

      std::vector<std::set<std::string>> members(paras.size());
      std::vector<std::vector<Element>> member_elems(paras.size());
      for (std::size_t i = 0; i < paras.size(); ++i)
        for (const Element& w : all.elements)
          if (parabolic_contains(paras[i], w)) {
            members[i].insert(w.word_str());
            member_elems[i].push_back(w);
          }

      // The minimal container must be a subset of every other container.
      auto brute_minimal = [&](const std::vector<Element>& X) -> int {
        int best = -1;
        std::vector<int> containers;
        for (std::size_t i = 0; i < paras.size(); ++i) {
          bool holds = true;
          for (const Element& x : X) holds = holds && members[i].count(x.word_str()) > 0;
          if (!holds) continue;
          containers.push_back(static_cast<int>(i));
          if (best < 0 || members[i].size() < members[best].size()) best = static_cast<int>(i);
        }
        for (int i : containers)
          if (!std::includes(members[i].begin(), members[i].end(), members[best].begin(),
                             members[best].end()))
            return -1;
        return best;
      };

      auto check_subset = [&](const std::vector<Element>& X) {
        ParabolicDescriptor d = parabolic_closure_finite(sys, X);
        int ref = brute_minimal(X);
        if (ref < 0 || !descriptor_equal(d, paras[ref])) {
          detail = "closure in " + name + " is not the brute-force minimum";
          return false;
        }
        ParabolicDescriptor again = parabolic_closure_finite(sys, member_elems[ref]);
        if (!descriptor_equal(again, d)) {
          detail = "closure in " + name + " is not idempotent";
          return false;
        }
        return true;
      };

      for (const Element& w : all.elements)
        if (!check_subset({w})) return false;

      std::mt19937 rng(909090);
      for (int t = 0; t < 500; ++t) {
        int size = 2 + static_cast<int>(rng() % 3u);
        std::vector<Element> X;
        for (int k : sample_indices(rng, static_cast<int>(all.elements.size()), size))
          X.push_back(all.elements[k]);
        if (!check_subset(X)) return false;
      }
    }
    return true;
  });

  gate.run(10, "finite-type recognizer sweep and family towers", 120000, [](std::string& detail) {
    const std::vector<unsigned> alphabet = {2, 3, 4, 6, infinite_label};
    std::size_t expected_count = 1;
    for (int rank = 1; rank <= 4; ++rank) {
      if (rank > 1)
        for (int e = 0; e < rank - 1; ++e) expected_count *= alphabet.size();
      std::vector<SweepOutcome> outcomes = classification_sweep(rank, alphabet, Exec::serial);
      if (outcomes.size() != expected_count) {
        detail = "rank-" + std::to_string(rank) + " sweep has " +
                 std::to_string(outcomes.size()) + " graphs";
        return false;
      }
      for (const SweepOutcome& o : outcomes)
        if (!o.agree) {
          detail = "recognizer and enumeration disagree at rank " + std::to_string(rank);
          return false;
        }
    }

    std::vector<int> ranks;
    for (int n = 2; n <= 12; ++n) ranks.push_back(n);
    for (FamilyKind kind :
         {FamilyKind::a1inf, FamilyKind::a2inf, FamilyKind::binf, FamilyKind::dinf}) {
      TowerReport rep = tower_check(make_tower({kind, 0}, ranks), TowerPropertyKind::locally_finite);
      if (!rep.stable) {
        detail = family_name(kind) + " tower unstable";
        return false;
      }
      for (const TowerOutcome& o : rep.outcomes)
        if (o.value.rfind("locally finite", 0) != 0) {
          detail = family_name(kind) + " not locally finite at rank " + std::to_string(o.rank);
          return false;
        }
    }
    return true;
  });

  gate.run(11, "full-rank local parabolicity coincides with parabolicity", 300000,
           [](std::string& detail) {
             for (const auto& [name, edges] : std::vector<std::pair<std::string, std::vector<unsigned>>>{
                      {"A3", {3, 3}}, {"I2(6)", {6}}}) {
               SystemPtr sys = make_system(chain_labels(edges));
               RootEnumeration phi = enumerate_positive_roots(sys, 0, 100);
               const int n = static_cast<int>(phi.roots.size());
               for (int mask = 1; mask < (1 << n); ++mask) {
                 std::vector<RootVector> gens;
                 for (int r = 0; r < n; ++r)
                   if (mask & (1 << r)) gens.push_back(phi.roots[r]);
                 ReflectionSubgroup G(sys, gens);
                 IsParabolicResult par = is_parabolic(G);
                 if (par.verdict == Membership::unknown) {
                   detail = "undecided subgroup in " + name;
                   return false;
                 }
                 LocallyParabolicReport lp = is_locally_parabolic(G, G.rank());
                 bool locally = lp.verdict == LpVerdict::fully_certified;
                 bool globally = par.verdict == Membership::yes;
                 if (locally != globally) {
                   detail = "verdicts split on a subgroup of " + name;
                   return false;
                 }
               }
             }
             return true;
           });

  gate.run(12, "exact signs match the 100-digit oracle and field axioms hold", 30000,
           [](std::string& detail) {
#if defined(COXKIT_HAVE_MPFR)
             FieldContextPtr ctx = FieldContext::make({4, 6});
             std::mt19937 rng(20260817);
             auto random_elem = [&]() {
               QPoly coeffs;
               for (int k = 0; k < ctx->degree(); ++k) {
                 long num = static_cast<long>(rng() % 199u) - 99;
                 long den = 1 + static_cast<long>(rng() % 99u);
                 coeffs.emplace_back(num, den);
               }
               return FieldElem::from_coeffs(ctx, std::move(coeffs));
             };

             for (int t = 0; t < 1000; ++t) {
               FieldElem x = random_elem();
               if (x.sign() != coxkit_test::hundred_digit_sign(x)) {
                 detail = "sign disagrees with the high-precision oracle";
                 return false;
               }
             }

             for (int t = 0; t < 1000; ++t) {
               FieldElem a = random_elem(), b = random_elem(), c = random_elem();
               bool ok = a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a &&
                         (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                         (a + (-a)).is_zero() && a * ctx->one() == a && a + ctx->zero() == a;
               if (ok && !b.is_zero()) ok = (a / b) * b == a;
               if (!ok) {
                 detail = "a field axiom failed on a random triple";
                 return false;
               }
             }
             return true;
#else
             (void)detail;
             detail = "high-precision oracle not built (MPFR missing)";
             return false;
#endif
           });

  std::cout << (12 - gate.failures) << " of 12 criteria passed" << std::endl;
  return gate.failures;
}
