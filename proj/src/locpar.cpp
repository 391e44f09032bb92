#include "coxkit/locpar.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <stdexcept>

namespace coxkit {
namespace {

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > ULLONG_MAX / a) return ULLONG_MAX;
  return a * b;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int k = 2; k <= n; ++k) f = sat_mul(f, static_cast<unsigned long long>(k));
  return f;
}

unsigned long long pow2(int n) {
  unsigned long long p = 1;
  for (int k = 0; k < n; ++k) p = sat_mul(p, 2);
  return p;
}

ComponentType infinite_component(std::vector<int> members, const std::string& why) {
  ComponentType c;
  c.members = std::move(members);
  c.label = "infinite (" + why + ")";
  return c;
}

ComponentType finite_component(std::vector<int> members, std::string label,
                               unsigned long long order) {
  ComponentType c;
  c.members = std::move(members);
  c.label = std::move(label);
  c.finite = true;
  c.order = order;
  return c;
}

// One connected component of the Coxeter graph (edges are labels != 2),
// recognized against the classification of finite irreducible types.
ComponentType recognize_component(const CoxeterSystem& sys, std::vector<int> comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return finite_component(std::move(comp), "A1", 2);
  if (n == 2) {
    unsigned m = sys.label(comp[0], comp[1]);
    if (m == infinite_label) return infinite_component(std::move(comp), "I2(oo)");
    if (m == 3) return finite_component(std::move(comp), "A2", 6);
    if (m == 4) return finite_component(std::move(comp), "B2", 8);
    return finite_component(std::move(comp), "I2(" + std::to_string(m) + ")", 2ull * m);
  }

  // Rank >= 3: a finite type is a tree with labels in {3,4,5}, at most one
  // label above 3, and tight shape constraints.
  std::vector<std::pair<int, int>> edges;  // positions within comp
  std::vector<unsigned> labels;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      unsigned m = sys.label(comp[i], comp[j]);
      if (m == 2) continue;
      if (m == infinite_label) return infinite_component(std::move(comp), "oo edge");
      edges.emplace_back(i, j);
      labels.push_back(m);
      ++degree[i];
      ++degree[j];
    }
  if (static_cast<int>(edges.size()) != n - 1)
    return infinite_component(std::move(comp), "cycle");

  int big_edges = 0, big_index = -1;
  for (std::size_t e = 0; e < labels.size(); ++e)
    if (labels[e] > 3) {
      ++big_edges;
      big_index = static_cast<int>(e);
    }
  if (big_edges > 1) return infinite_component(std::move(comp), "two labels above 3");

  int max_degree = *std::max_element(degree.begin(), degree.end());

  if (big_edges == 1) {
    if (max_degree > 2) return infinite_component(std::move(comp), "branch with a label above 3");
    unsigned m = labels[big_index];
    auto [a, b] = edges[big_index];
    bool at_end = degree[a] == 1 || degree[b] == 1;
    if (m == 4) {
      if (at_end) return finite_component(std::move(comp), "B" + std::to_string(n),
                                          sat_mul(pow2(n), factorial(n)));
      if (n == 4) return finite_component(std::move(comp), "F4", 1152);
      return infinite_component(std::move(comp), "internal label 4");
    }
    if (m == 5 && at_end) {
      if (n == 3) return finite_component(std::move(comp), "H3", 120);
      if (n == 4) return finite_component(std::move(comp), "H4", 14400);
    }
    return infinite_component(std::move(comp), "label placement outside the classification");
  }

  // All labels 3.
  if (max_degree == 2)
    return finite_component(std::move(comp), "A" + std::to_string(n), factorial(n + 1));
  if (max_degree > 3) return infinite_component(std::move(comp), "degree above 3");
  int branches = 0, branch = -1;
  for (int i = 0; i < n; ++i)
    if (degree[i] == 3) {
      ++branches;
      branch = i;
    }
  if (branches != 1) return infinite_component(std::move(comp), "two branch points");

  // Arm lengths from the unique branch point.
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return finite_component(std::move(comp), "D" + std::to_string(n),
                            sat_mul(pow2(n - 1), factorial(n)));
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    static const unsigned long long e_orders[3] = {51840ull, 2903040ull, 696729600ull};
    return finite_component(std::move(comp), "E" + std::to_string(arms[2] + 4),
                            e_orders[arms[2] - 2]);
  }
  return infinite_component(std::move(comp), "branch arms outside the classification");
}

}  // namespace

std::string TypeInfo::str() const {
  if (components.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " x ";
    out += components[i].label;
  }
  return out;
}

TypeInfo finite_type_recognize(const SystemPtr& sys) {
  TypeInfo info;
  info.finite = true;
  info.order = 1;
  for (std::vector<int>& comp : sys->components([](unsigned m) { return m != 2u; })) {
    ComponentType c = recognize_component(*sys, std::move(comp));
    info.finite = info.finite && c.finite;
    info.order = c.finite ? sat_mul(info.order, c.order) : 0;
    info.components.push_back(std::move(c));
  }
  if (!info.finite) info.order = 0;
  return info;
}

LocalFiniteness locally_finite_classify(const SystemPtr& sys) {
  TypeInfo info = finite_type_recognize(sys);
  LocalFiniteness out;
  out.locally_finite = info.finite;
  out.components = std::move(info.components);
  return out;
}

std::string lp_verdict_str(LpVerdict v) {
  switch (v) {
    case LpVerdict::fully_certified: return "fully_certified";
    case LpVerdict::counterexample: return "counterexample";
    default: return "certified_up_to_k";
  }
}

LocallyParabolicReport is_locally_parabolic(const ReflectionSubgroup& G, int k, int search_bound) {
  LocallyParabolicReport report;
  const int n = G.rank();
  const int bound = std::min(k, n);
  int certified = 0;
  bool prefix_intact = true;

  // Size-ordered sweep: when a counterexample surfaces at one size, every
  // smaller size is already fully answered, so certified_size stays honest.
  for (int size = 1; size <= bound; ++size) {
    bool all_yes = true;
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      std::vector<RootVector> roots;
      for (int i : subset) roots.push_back(G.canonical_roots()[i]);
      SubsetCertificate cert;
      cert.subset = subset;
      cert.result = is_parabolic(ReflectionSubgroup(G.system(), roots), search_bound);
      Membership v = cert.result.verdict;
      report.checked.push_back(std::move(cert));
      if (v == Membership::no) {
        report.counterexample_subset = subset;
        report.verdict = LpVerdict::counterexample;
        report.certified_size = certified;
        return report;
      }
      if (v != Membership::yes) all_yes = false;
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
    if (all_yes && prefix_intact)
      certified = size;
    else
      prefix_intact = false;
  }

  report.certified_size = certified;
  report.verdict = (certified == n) ? LpVerdict::fully_certified : LpVerdict::certified_up_to_k;
  return report;
}

LpClosureResult lp_closure(const SystemPtr& sys, const std::vector<Element>& X,
                           std::size_t max_elements) {
  LpClosureResult res;
  std::set<int> supp;
  for (const Element& x : X)
    for (int s : x.support()) supp.insert(s);
  res.support.assign(supp.begin(), supp.end());

  if (res.support.empty()) {
    res.status = LpClosureResult::Status::computed;
    res.descriptor = trivial_descriptor(sys);
    res.note = "empty support";
    return res;
  }
  SystemPtr restricted = sys->restriction(res.support);
  TypeInfo type = finite_type_recognize(restricted);
  if (!type.finite) {
    res.status = LpClosureResult::Status::support_infinite;
    res.note = "support subgroup is infinite (" + type.str() + "); use a truncation tower";
    return res;
  }
  res.status = LpClosureResult::Status::computed;
  res.descriptor = parabolic_closure_within(sys, res.support, X, max_elements);
  res.note = "closure inside the finite support subgroup (" + type.str() + ")";
  return res;
}

}  // namespace coxkit
