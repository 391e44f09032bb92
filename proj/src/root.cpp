#include "coxkit/root.hpp"

#include <sstream>

namespace coxkit {

namespace {
const SystemPtr& common_system(const RootVector& u, const RootVector& v) {
  if (!u.system() || !v.system())
    throw std::invalid_argument("RootVector: operation on a vector without system");
  if (u.system() != v.system())
    throw std::invalid_argument("RootVector: mixing vectors of different systems");
  return u.system();
}
}  // namespace

RootVector::RootVector(SystemPtr sys, std::vector<FieldElem> coords)
    : sys_(std::move(sys)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != sys_->rank())
    throw std::invalid_argument("RootVector: coordinate count != rank");
}

RootVector RootVector::zero(const SystemPtr& sys) {
  return RootVector(sys, std::vector<FieldElem>(sys->rank(), sys->field()->zero()));
}

RootVector RootVector::simple(const SystemPtr& sys, int s) {
  RootVector v = zero(sys);
  v.coords_.at(s) = sys->field()->one();
  return v;
}

bool RootVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<int> RootVector::support() const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (!coords_[s].is_zero()) out.push_back(s);
  return out;
}

bool RootVector::is_simple() const {
  int nonzero = -1;
  for (int s = 0; s < rank(); ++s) {
    if (coords_[s].is_zero()) continue;
    if (nonzero != -1) return false;
    nonzero = s;
  }
  return nonzero != -1 && coords_[nonzero] == sys_->field()->one();
}

RootVector RootVector::operator+(const RootVector& o) const {
  common_system(*this, o);
  std::vector<FieldElem> c = coords_;
  for (int s = 0; s < rank(); ++s) c[s] += o.coords_[s];
  return RootVector(sys_, std::move(c));
}

RootVector RootVector::operator-(const RootVector& o) const {
  common_system(*this, o);
  std::vector<FieldElem> c = coords_;
  for (int s = 0; s < rank(); ++s) c[s] -= o.coords_[s];
  return RootVector(sys_, std::move(c));
}

RootVector RootVector::operator-() const {
  std::vector<FieldElem> c = coords_;
  for (auto& x : c) x = -x;
  return RootVector(sys_, std::move(c));
}

RootVector RootVector::scaled(const FieldElem& k) const {
  std::vector<FieldElem> c = coords_;
  for (auto& x : c) x *= k;
  return RootVector(sys_, std::move(c));
}

bool RootVector::operator==(const RootVector& o) const {
  common_system(*this, o);
  return coords_ == o.coords_;
}

std::string RootVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (int s = 0; s < rank(); ++s) {
    if (coords_[s].is_zero()) continue;
    FieldElem c = coords_[s];
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    if (c != sys_->field()->one()) {
      std::string cs = c.str();
      bool atomic = cs.find_first_of("+-") == std::string::npos ||
                    (cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos);
      os << (atomic ? cs : "(" + cs + ")") << " ";
    }
    os << sys_->name(s);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

FieldElem form(const RootVector& u, const RootVector& v) {
  const SystemPtr& sys = common_system(u, v);
  FieldElem acc = sys->field()->zero();
  for (int s = 0; s < sys->rank(); ++s) {
    if (u[s].is_zero()) continue;
    for (int t = 0; t < sys->rank(); ++t) {
      if (v[t].is_zero()) continue;
      acc += u[s] * sys->form_entry(s, t) * v[t];
    }
  }
  return acc;
}

RootVector reflect(const RootVector& gamma, const RootVector& v) {
  FieldElem c = form(gamma, v);
  c += c;
  return v - gamma.scaled(c);
}

RootVector simple_reflect(int s, const RootVector& v) {
  const SystemPtr& sys = v.system();
  FieldElem inner = sys->field()->zero();
  for (int t = 0; t < sys->rank(); ++t) {
    if (v[t].is_zero()) continue;
    inner += sys->form_entry(s, t) * v[t];
  }
  std::vector<FieldElem> c = v.coords();
  c[s] -= inner + inner;
  return RootVector(sys, std::move(c));
}

std::string root_sign_str(RootSign s) {
  switch (s) {
    case RootSign::positive: return "positive";
    case RootSign::negative: return "negative";
    default: return "not_a_unit_root";
  }
}

RootSign classify_root(const RootVector& v) {
  if (v.is_zero()) return RootSign::not_a_unit_root;
  if (form(v, v) != v.system()->field()->one()) return RootSign::not_a_unit_root;
  int expected = 0;
  for (int s = 0; s < v.rank(); ++s) {
    if (v[s].is_zero()) continue;
    int sign = v[s].sign();
    if (expected == 0)
      expected = sign;
    else if (sign != expected)
      return RootSign::not_a_unit_root;  // mixed signs: not in the root system
  }
  return expected > 0 ? RootSign::positive : RootSign::negative;
}

bool root_is_positive(const RootVector& v) { return classify_root(v) == RootSign::positive; }

RootVector positive_representative(const RootVector& v) {
  switch (classify_root(v)) {
    case RootSign::positive: return v;
    case RootSign::negative: return -v;
    default: throw std::invalid_argument("positive_representative: not a root");
  }
}

int root_coordinate_sign(const RootVector& v) {
    for (std::size_t i = 0; i < v.coords().size(); ++i) {
        int s = v[i].sign();
        if (s != 0) return s;
    }
    return 0;
}

bool root_structural_less(const RootVector& a, const RootVector& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (int s = 0; s < a.rank(); ++s) {
    if (a[s] != b[s]) return structural_less(a[s], b[s]);
  }
  return false;
}

int root_depth(const RootVector& gamma) {
  if (!root_is_positive(gamma))
    throw std::invalid_argument("root_depth: argument must be a positive root");
  RootVector v = gamma;
  int depth = 1;
  while (!v.is_simple()) {
    const SystemPtr& sys = v.system();
    int chosen = -1;
    for (int s = 0; s < sys->rank(); ++s) {
      FieldElem inner = sys->field()->zero();
      for (int t = 0; t < sys->rank(); ++t)
        if (!v[t].is_zero()) inner += sys->form_entry(s, t) * v[t];
      if (inner.sign() > 0) {
        chosen = s;
        break;
      }
    }
    // A positive root always pairs positively with some simple root.
    if (chosen == -1) throw std::logic_error("root_depth: no descending simple reflection");
    v = simple_reflect(chosen, v);
    ++depth;
  }
  return depth;
}

bool root_display_less(const RootVector& a, const RootVector& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  bool ap = root_is_positive(a), bp = root_is_positive(b);
  if (ap != bp) return ap;
  if (!ap) return root_structural_less(a, b);
  int da = root_depth(a), db = root_depth(b);
  if (da != db) return da < db;
  for (int s = 0; s < a.rank(); ++s) {
    // At the first index where the coordinates differ the root with the
    // larger one reads first, so alpha_1 precedes alpha_2.
    if (a[s] != b[s]) return structural_less(b[s], a[s]);
  }
  return false;
}

}  // namespace coxkit
