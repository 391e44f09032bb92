#include "coxkit/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace coxkit {
namespace {

void validate(const FamilyDescriptor& fam) {
  if (fam.kind != FamilyKind::ex45) return;
  if (fam.m == infinite_label) return;
  if (fam.m < 4 || fam.m % 2 != 0)
    throw std::invalid_argument("ex45 label must be oo or an even number at least 4");
}

std::string index_name(FamilyKind kind, int i) {
  if (kind == FamilyKind::dinf && i == -1) return "s0p";
  if (i < 0) return "sm" + std::to_string(-i);
  return "s" + std::to_string(i);
}

// The integer indices of the first n generators, in graph order.
std::vector<int> truncation_indices(const FamilyDescriptor& fam, int n) {
  std::vector<int> idx;
  switch (fam.kind) {
    case FamilyKind::a1inf:
    case FamilyKind::ex33:
    case FamilyKind::ex45:
      for (int i = 1; i <= n; ++i) idx.push_back(i);
      break;
    case FamilyKind::binf:
      for (int i = 0; i < n; ++i) idx.push_back(i);
      break;
    case FamilyKind::a2inf: {
      int lo = -((n - 1) / 2);
      for (int i = lo; i < lo + n; ++i) idx.push_back(i);
      break;
    }
    case FamilyKind::dinf:
      if (n < 2) throw std::invalid_argument("dinf truncation needs rank at least 2");
      for (int i = -1; i <= n - 2; ++i) idx.push_back(i);
      break;
  }
  return idx;
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::a1inf: return "a1inf";
    case FamilyKind::a2inf: return "a2inf";
    case FamilyKind::binf: return "binf";
    case FamilyKind::dinf: return "dinf";
    case FamilyKind::ex33: return "ex33";
    default: return "ex45";
  }
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
  for (FamilyKind k : {FamilyKind::a1inf, FamilyKind::a2inf, FamilyKind::binf,
                       FamilyKind::dinf, FamilyKind::ex33, FamilyKind::ex45})
    if (family_name(k) == name) return k;
  return std::nullopt;
}

unsigned family_label(const FamilyDescriptor& fam, int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  switch (fam.kind) {
    case FamilyKind::a1inf:
    case FamilyKind::a2inf:
    case FamilyKind::ex33:
      return j - i == 1 ? 3 : 2;
    case FamilyKind::binf:
      if (j - i != 1) return 2;
      return i == 0 ? 4 : 3;
    case FamilyKind::dinf:
      // -1 is the fork node s0p, adjacent to 1 only; 0 is adjacent to 1 only
      // on the left; the chain continues 1 - 2 - 3 - ...
      if (i == -1) return j == 1 ? 3 : 2;
      return j - i == 1 ? 3 : 2;
    case FamilyKind::ex45:
      return j - i == 1 ? fam.m : 2;
  }
  return 2;
}

SystemPtr truncate(const FamilyDescriptor& fam, int n) {
  validate(fam);
  if (n < 1) throw std::invalid_argument("truncation rank must be at least 1");

  static std::map<std::tuple<int, unsigned, int>, SystemPtr> cache;
  static std::mutex cache_mutex;
  std::tuple<int, unsigned, int> key{static_cast<int>(fam.kind), fam.m, n};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<int> idx = truncation_indices(fam, n);
  std::vector<std::string> names;
  for (int i : idx) names.push_back(index_name(fam.kind, i));
  std::vector<std::vector<unsigned>> matrix(idx.size(), std::vector<unsigned>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      matrix[a][b] = family_label(fam, idx[a], idx[b]);
  SystemPtr sys = CoxeterSystem::create(names, matrix);

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(sys)).first->second;
}

TruncationTower make_tower(const FamilyDescriptor& fam, const std::vector<int>& ranks) {
  if (ranks.empty()) throw std::invalid_argument("tower needs at least one rank");
  for (std::size_t i = 1; i < ranks.size(); ++i)
    if (ranks[i] < ranks[i - 1]) throw std::invalid_argument("tower ranks must not decrease");
  TruncationTower tower;
  tower.family = fam;
  tower.ranks = ranks;
  for (int n : ranks) tower.systems.push_back(truncate(fam, n));
  return tower;
}

std::string tower_property_name(TowerPropertyKind p) {
  switch (p) {
    case TowerPropertyKind::union_subgroup: return "union_subgroup";
    case TowerPropertyKind::union_reflection: return "union_reflection";
    case TowerPropertyKind::locally_finite: return "locally_finite";
    default: return "locally_parabolic";
  }
}

std::optional<TowerPropertyKind> tower_property_from_name(const std::string& name) {
  for (TowerPropertyKind p :
       {TowerPropertyKind::union_subgroup, TowerPropertyKind::union_reflection,
        TowerPropertyKind::locally_finite, TowerPropertyKind::locally_parabolic})
    if (tower_property_name(p) == name) return p;
  return std::nullopt;
}

namespace {

std::vector<int> window_indices(const SystemPtr& sys, const std::vector<std::string>& window) {
  std::vector<int> out;
  for (const std::string& name : window) {
    int s = sys->index_of(name);
    if (s < 0) return {};
    out.push_back(s);
  }
  return out;
}

// One-line graph signature of the window inside sys: names plus labeled edges.
std::string window_signature(const SystemPtr& sys, const std::vector<std::string>& window) {
  std::vector<int> idx = window_indices(sys, window);
  if (idx.empty() && !window.empty()) return "window generators missing";
  std::ostringstream os;
  for (std::size_t a = 0; a < window.size(); ++a) os << (a ? " " : "") << window[a];
  os << ";";
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      unsigned m = sys->label(idx[a], idx[b]);
      if (m == 2) continue;
      os << " " << window[a] << "-" << window[b] << ":" << label_str(m);
    }
  return os.str();
}

std::vector<RootVector> window_roots(const SystemPtr& sys, const std::vector<std::string>& window) {
  std::vector<RootVector> roots;
  for (int s : window_indices(sys, window)) roots.push_back(RootVector::simple(sys, s));
  return roots;
}

}  // namespace

TowerReport tower_check(const TruncationTower& tower, const TowerProperty& property) {
  if (tower.systems.empty()) throw std::invalid_argument("empty tower");
  TowerReport report;
  report.window = tower.systems.front()->names();
  for (std::size_t i = 0; i < tower.systems.size(); ++i)
    report.outcomes.push_back({tower.ranks[i], property(tower.systems[i], tower.ranks[i])});
  std::size_t top = std::min<std::size_t>(3, report.outcomes.size());
  report.stable = true;
  for (std::size_t i = report.outcomes.size() - top; i < report.outcomes.size(); ++i)
    report.stable = report.stable &&
                    report.outcomes[i].value == report.outcomes.back().value;
  return report;
}

TowerReport tower_check(const TruncationTower& tower, TowerPropertyKind property) {
  if (tower.systems.empty()) throw std::invalid_argument("empty tower");
  std::vector<std::string> window = tower.systems.front()->names();

  TowerProperty fn;
  switch (property) {
    case TowerPropertyKind::union_subgroup: {
      // Nesting: the window graph is unchanged at every rank, and each system
      // agrees with its predecessor on the predecessor's generators.
      const TruncationTower* tw = &tower;
      fn = [window, tw](const SystemPtr& sys, int) {
        std::size_t pos = 0;
        while (pos < tw->systems.size() && tw->systems[pos] != sys) ++pos;
        if (pos > 0 && pos < tw->systems.size()) {
          const SystemPtr& prev = tw->systems[pos - 1];
          for (int a = 0; a < prev->rank(); ++a) {
            int sa = sys->index_of(prev->name(a));
            if (sa < 0) return std::string("previous generators not nested");
            for (int b = 0; b < prev->rank(); ++b) {
              int sb = sys->index_of(prev->name(b));
              if (sb < 0 || sys->label(sa, sb) != prev->label(a, b))
                return std::string("labels disagree with the previous truncation");
            }
          }
        }
        return "nests; " + window_signature(sys, window);
      };
      break;
    }
    case TowerPropertyKind::union_reflection:
      fn = [window](const SystemPtr& sys, int) {
        std::vector<RootVector> roots = window_roots(sys, window);
        if (roots.size() != window.size()) return std::string("window generators missing");
        std::vector<RootVector> pi = canonical_generators(sys, roots);
        std::sort(pi.begin(), pi.end(), root_display_less);
        std::ostringstream os;
        for (std::size_t i = 0; i < pi.size(); ++i) os << (i ? ", " : "") << pi[i].str();
        return os.str();
      };
      break;
    case TowerPropertyKind::locally_finite:
      fn = [window](const SystemPtr& sys, int) {
        LocalFiniteness lf = locally_finite_classify(sys);
        std::vector<int> idx = window_indices(sys, window);
        std::string wtype =
            idx.empty() ? "missing" : finite_type_recognize(sys->restriction(idx)).str();
        return std::string(lf.locally_finite ? "locally finite" : "not locally finite") +
               "; window " + wtype;
      };
      break;
    case TowerPropertyKind::locally_parabolic:
      fn = [window](const SystemPtr& sys, int) {
        std::vector<RootVector> roots = window_roots(sys, window);
        if (roots.size() != window.size()) return std::string("window generators missing");
        ReflectionSubgroup G(sys, roots);
        LocallyParabolicReport lp = is_locally_parabolic(G, 2);
        return lp_verdict_str(lp.verdict) +
               (lp.verdict == LpVerdict::certified_up_to_k
                    ? " (size " + std::to_string(lp.certified_size) + ")"
                    : "");
      };
      break;
  }
  return tower_check(tower, fn);
}

}  // namespace coxkit
