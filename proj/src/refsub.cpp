#include "coxkit/refsub.hpp"

#include "coxkit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coxkit {
namespace {

// Orbit of {beta, gamma} under the dihedral subgroup <s_beta, s_gamma>, as
// positive representatives. Only valid when the pair spans a finite dihedral
// (|<beta,gamma>| < 1 guarantees that: the pair's Gram matrix is positive
// definite, and an infinite dihedral has no such simple pair).
std::vector<RootVector> dihedral_positive_roots(const RootVector& beta, const RootVector& gamma) {
  std::set<RootVector, RootLess> seen;
  std::vector<RootVector> frontier{beta, gamma};
  seen.insert(beta);
  seen.insert(gamma);
  const std::size_t guard = 10000;
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& v : frontier) {
      for (const RootVector* mirror : {&beta, &gamma}) {
        RootVector img = positive_representative(reflect(*mirror, v));
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    if (seen.size() > guard) throw std::logic_error("dihedral closure did not terminate");
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// The simple pair of the dihedral subgroup generated by two distinct positive
// roots. A pair with form value <= -1 is already simple (the two walls bound
// the gap of the subgroup's wall arrangement that holds the fundamental
// chamber, since opposed normals mean the chamber lies between them). A value
// >= 1 means both walls are on the same side of the chamber; reflecting the
// farther wall in the nearer one walks the pair inward, and depth tells the
// two apart. Otherwise the dihedral is finite and its simple pair is the
// unique form-minimal pair of its positive system.
std::pair<RootVector, RootVector> dihedral_simple_pair(RootVector beta, RootVector gamma) {
  const FieldContextPtr& field = beta.system()->field();
  const FieldElem one = field->one();
  int guard = 0;
  for (;;) {
    if (++guard > 4096) throw std::logic_error("dihedral reduction did not terminate");
    FieldElem t = form(beta, gamma);
    if ((t + one).sign() <= 0) return {beta, gamma};
    if ((t - one).sign() >= 0) {
      RootVector a = positive_representative(reflect(beta, gamma));   // gamma through beta's wall
      RootVector b = positive_representative(reflect(gamma, beta));   // beta through gamma's wall
      int da = root_depth(a), db = root_depth(b);
      if (da + root_depth(beta) < db + root_depth(gamma)) {
        gamma = a;
      } else if (db + root_depth(gamma) < da + root_depth(beta)) {
        beta = b;
      } else {
        throw std::logic_error("dihedral reduction stalled");
      }
      continue;
    }
    std::vector<RootVector> orbit = dihedral_positive_roots(beta, gamma);
    std::size_t bi = 0, bj = 1;
    FieldElem best = form(orbit[0], orbit[1]);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        FieldElem v = form(orbit[i], orbit[j]);
        if ((v - best).sign() < 0) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    return {orbit[bi], orbit[bj]};
  }
}

// Deterministic working order: shallow roots first, structural order to break
// ties.
void sort_by_depth(std::vector<RootVector>& v) {
  std::vector<std::pair<int, RootVector>> keyed;
  keyed.reserve(v.size());
  for (RootVector& r : v) keyed.emplace_back(root_depth(r), std::move(r));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return root_structural_less(a.second, b.second);
  });
  v.clear();
  for (auto& [d, r] : keyed) v.push_back(std::move(r));
}

}  // namespace

std::vector<RootVector> canonical_generators(const SystemPtr& sys,
                                             const std::vector<RootVector>& roots) {
  std::set<RootVector, RootLess> work;
  for (const RootVector& r : roots) {
    if (classify_root(r) != RootSign::positive)
      throw std::invalid_argument("canonical_generators: input roots must be positive");
    work.insert(r);
  }
  int guard = 0;
  for (;;) {
    if (++guard > 100000) throw std::logic_error("canonical_generators did not terminate");
    std::vector<RootVector> cur(work.begin(), work.end());
    sort_by_depth(cur);
    bool changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cur.size() && !changed; ++j) {
        auto [u, v] = dihedral_simple_pair(cur[i], cur[j]);
        bool same = (u == cur[i] && v == cur[j]) || (u == cur[j] && v == cur[i]);
        if (!same) {
          work.erase(cur[i]);
          work.erase(cur[j]);
          work.insert(u);
          work.insert(v);
          changed = true;
        }
      }
    }
    if (!changed) return cur;
  }
}

bool in_nonnegative_span(const RootVector& target, const std::vector<RootVector>& gens) {
  if (gens.empty()) return target.is_zero();
  const FieldContextPtr& field = target.system()->field();
  const int m = target.rank();
  const int n = static_cast<int>(gens.size());

  // Phase-one simplex, minimizing the sum of one artificial variable per
  // equation. Columns 0..n-1 are the generators, n..n+m-1 the artificials
  // (initial basis); rows are flipped up front so every right-hand side is
  // nonnegative.
  std::vector<std::vector<FieldElem>> a(m, std::vector<FieldElem>(n + m, field->zero()));
  std::vector<FieldElem> rhs;
  rhs.reserve(m);
  for (int i = 0; i < m; ++i) {
    int flip = target[i].sign() < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) a[i][j] = flip < 0 ? -gens[j][i] : gens[j][i];
    a[i][n + i] = field->one();
    rhs.push_back(flip < 0 ? -target[i] : target[i]);
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced cost of column j under the artificial objective is the column sum
  // over rows whose basic variable is artificial.
  auto reduced_cost = [&](int j) {
    FieldElem c = field->zero();
    for (int i = 0; i < m; ++i)
      if (basis[i] >= n) c = c + a[i][j];
    return c;
  };

  int guard = 0;
  for (;;) {
    if (++guard > 100000) throw std::logic_error("in_nonnegative_span: simplex did not terminate");
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (reduced_cost(j).sign() > 0) {
        enter = j;  // Bland: first improving column
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      if (a[i][enter].sign() <= 0) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      FieldElem d = rhs[i] * a[leave][enter] - rhs[leave] * a[i][enter];
      int c = d.sign();
      if (c < 0 || (c == 0 && basis[i] < basis[leave])) leave = i;  // Bland tie-break
    }
    if (leave < 0) throw std::logic_error("in_nonnegative_span: unbounded phase-one objective");
    FieldElem piv = a[leave][enter];
    for (int j = 0; j < n + m; ++j) a[leave][j] = a[leave][j] / piv;
    rhs[leave] = rhs[leave] / piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || a[i][enter].is_zero()) continue;
      FieldElem f = a[i][enter];
      for (int j = 0; j < n + m; ++j) a[i][j] = a[i][j] - f * a[leave][j];
      rhs[i] = rhs[i] - f * rhs[leave];
    }
    basis[leave] = enter;
  }
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n && rhs[i].sign() != 0) return false;
  return true;
}

std::vector<RootVector> pi_oracle(const SystemPtr& sys, const std::vector<RootVector>& roots,
                                  std::size_t max_elements) {
  RootEnumeration ambient = enumerate_positive_roots(sys, 0, max_elements);
  if (!ambient.saturated)
    throw std::invalid_argument("pi_oracle: ambient group must be finite");
  std::vector<Element> gens;
  for (const RootVector& r : roots) {
    if (classify_root(r) != RootSign::positive)
      throw std::invalid_argument("pi_oracle: input roots must be positive");
    gens.push_back(reflection_element(r));
  }
  GroupEnumeration group = subgroup_closure(sys, gens, max_elements);
  if (!group.saturated) throw std::invalid_argument("pi_oracle: subgroup enumeration overflow");
  std::set<std::vector<int>> members;
  for (const Element& g : group.elements) members.insert(g.word());

  std::vector<RootVector> phi;
  for (const RootVector& gamma : ambient.roots)
    if (members.count(reflection_element(gamma).word())) phi.push_back(gamma);

  std::vector<RootVector> pi;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    std::vector<RootVector> others;
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (j != i) others.push_back(phi[j]);
    if (!in_nonnegative_span(phi[i], others)) pi.push_back(phi[i]);
  }
  std::sort(pi.begin(), pi.end(), root_structural_less);
  return pi;
}

ReflectionSubgroup::ReflectionSubgroup(SystemPtr sys, std::vector<RootVector> generating_roots)
    : sys_(std::move(sys)), gens_(std::move(generating_roots)) {
  canonical_ = canonical_generators(sys_, gens_);
  std::sort(canonical_.begin(), canonical_.end(), root_structural_less);
}

const std::vector<Element>& ReflectionSubgroup::canonical_reflections() const {
  if (reflections_.empty() && !canonical_.empty())
    for (const RootVector& r : canonical_) reflections_.push_back(reflection_element(r));
  return reflections_;
}

bool ReflectionSubgroup::contains(const Element& w) const {
  const std::vector<Element>& refl = canonical_reflections();
  Element cur = w;
  int guard = cur.length() + 1;
  while (!cur.is_identity()) {
    if (--guard < 0) throw std::logic_error("ReflectionSubgroup::contains: descent stalled");
    bool found = false;
    for (std::size_t i = 0; i < canonical_.size(); ++i) {
      if (root_coordinate_sign(cur.act(canonical_[i])) < 0) {
        cur = cur * refl[i];
        found = true;
        break;
      }
    }
    if (!found) return false;  // a non-identity member always has a descent
  }
  return true;
}

SubgroupRoots subgroup_positive_roots(const ReflectionSubgroup& G, std::size_t max_count) {
  SubgroupRoots out;
  out.saturated = true;
  std::set<RootVector, RootLess> seen;
  std::vector<RootVector> frontier;
  for (const RootVector& r : G.canonical_roots())
    if (seen.insert(r).second) frontier.push_back(r);
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& v : frontier) {
      for (const RootVector& mirror : G.canonical_roots()) {
        RootVector img = positive_representative(reflect(mirror, v));
        if (seen.size() >= max_count && !seen.count(img)) {
          out.saturated = false;
          continue;
        }
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    if (!out.saturated) break;
    frontier = std::move(next);
  }
  out.roots.assign(seen.begin(), seen.end());
  return out;
}

std::string membership_str(Membership v) {
  switch (v) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    default: return "unknown";
  }
}

MembershipResult reflection_membership(const ReflectionSubgroup& G, const RootVector& gamma,
                                       std::size_t orbit_bound) {
  if (classify_root(gamma) != RootSign::positive)
    throw std::invalid_argument("reflection_membership: root must be positive");
  MembershipResult res;
  const std::vector<RootVector>& pi = G.canonical_roots();
  for (const RootVector& delta : pi) {
    if (delta == gamma) {
      res.verdict = Membership::yes;
      res.witness_g = Element::identity(G.system());
      res.witness_delta = delta;
      return res;
    }
  }
  if (gamma.is_simple()) {
    // A simple ambient root can only enter Phi(G) as a canonical root of G,
    // so missing from the canonical set is a definitive no.
    res.verdict = Membership::no;
    return res;
  }

  // Orbit walk over positive representatives, each state carrying g with
  // g . delta equal to the state's root; crossing to a negative image is
  // repaired by first reflecting delta to -delta inside G.
  const std::vector<Element>& refl = G.canonical_reflections();
  std::map<RootVector, std::pair<Element, std::size_t>, RootLess> state;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (state.emplace(pi[i], std::make_pair(Element::identity(G.system()), i)).second)
      frontier.push_back(pi[i]);
  }
  bool truncated = false;
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& v : frontier) {
      auto [g, delta_index] = state.at(v);
      for (std::size_t i = 0; i < pi.size(); ++i) {
        RootVector img = reflect(pi[i], v);
        bool negative = root_coordinate_sign(img) < 0;
        RootVector pos = negative ? -img : img;
        if (state.count(pos)) continue;
        if (state.size() >= orbit_bound) {
          truncated = true;
          continue;
        }
        Element witness = refl[i] * g;
        if (negative) witness = witness * refl[delta_index];
        if (pos == gamma) {
          res.verdict = Membership::yes;
          res.witness_g = witness;
          res.witness_delta = pi[delta_index];
          return res;
        }
        state.emplace(pos, std::make_pair(std::move(witness), delta_index));
        next.push_back(pos);
      }
    }
    if (truncated) break;
    frontier = std::move(next);
  }
  res.verdict = truncated ? Membership::unknown : Membership::no;
  return res;
}

std::vector<std::vector<unsigned>> coxeter_matrix_of_roots(const std::vector<RootVector>& roots,
                                                           unsigned order_bound) {
  const std::size_t n = roots.size();
  std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 1));
  if (n == 0) return m;
  const FieldContextPtr& field = roots[0].system()->field();
  const FieldElem one = field->one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      FieldElem t = form(roots[i], roots[j]);
      unsigned label;
      if (t.sign() > 0) {
        throw std::invalid_argument("coxeter_matrix_of_roots: positive form value between roots");
      } else if (t.sign() == 0) {
        label = 2;
      } else if ((t + one).sign() <= 0) {
        label = infinite_label;
      } else {
        // t = -cos(pi/k) exactly when 2cos(pi/k) = -2t is a zero of the
        // candidate's minimal polynomial.
        FieldElem target = -(t + t);
        label = 0;
        for (unsigned k = 3; k <= order_bound; ++k) {
          const QPoly& psi = two_cos_pi_minimal_poly(k);
          FieldElem acc = field->zero();
          for (std::size_t d = psi.size(); d-- > 0;) acc = acc * target + field->rational(psi[d]);
          if (acc.is_zero()) {
            label = k;
            break;
          }
        }
        if (label == 0)
          throw std::invalid_argument("coxeter_matrix_of_roots: undetermined label");
      }
      m[i][j] = m[j][i] = label;
    }
  }
  return m;
}

std::vector<std::vector<unsigned>> induced_coxeter_matrix(const ReflectionSubgroup& G,
                                                          unsigned order_bound) {
  return coxeter_matrix_of_roots(G.canonical_roots(), order_bound);
}

SystemPtr induced_system(const ReflectionSubgroup& G, unsigned order_bound) {
  std::vector<std::string> names;
  for (int i = 0; i < G.rank(); ++i) names.push_back("t" + std::to_string(i + 1));
  return CoxeterSystem::create(std::move(names), induced_coxeter_matrix(G, order_bound));
}

}  // namespace coxkit
