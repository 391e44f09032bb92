#include "coxkit/element.hpp"

#include <algorithm>
#include <sstream>

namespace coxkit {

namespace {

// cols[t] <- cols of (M * M_s): only a multiple of the old column s is added
// to every column (and column s itself flips).
void right_mult_simple(const SystemPtr& sys, std::vector<RootVector>& cols, int s) {
  RootVector col_s = cols[s];
  for (int t = 0; t < sys->rank(); ++t) {
    const FieldElem& b = sys->form_entry(s, t);
    if (b.is_zero()) continue;
    cols[t] = cols[t] - col_s.scaled(b + b);
  }
}

// cols[t] <- cols of (M_s * M): every column reflects in alpha_s.
void left_mult_simple(const SystemPtr& sys, std::vector<RootVector>& cols, int s) {
  for (int t = 0; t < sys->rank(); ++t) cols[t] = simple_reflect(s, cols[t]);
}

std::vector<RootVector> identity_columns(const SystemPtr& sys) {
  std::vector<RootVector> cols;
  cols.reserve(sys->rank());
  for (int s = 0; s < sys->rank(); ++s) cols.push_back(RootVector::simple(sys, s));
  return cols;
}

// Matrix-vector action for a column family (cols[t] = image of alpha_t).
RootVector act_columns(const SystemPtr& sys, const std::vector<RootVector>& cols,
                       const RootVector& v) {
  RootVector out = RootVector::zero(sys);
  for (int t = 0; t < sys->rank(); ++t) {
    if (v[t].is_zero()) continue;
    out = out + cols[t].scaled(v[t]);
  }
  return out;
}

// ShortLex-least reduced word, by repeatedly splitting off the smallest left
// descent. Consumes the matrices.
std::vector<int> extract_normal_form(const SystemPtr& sys, std::vector<RootVector> fwd,
                                     std::vector<RootVector> inv) {
  std::vector<int> word;
  const int guard_limit = 1 << 20;
  for (int guard = 0;; ++guard) {
    if (guard > guard_limit) throw std::logic_error("Element: matrix does not normalize");
    int s = -1;
    for (int t = 0; t < sys->rank(); ++t) {
      if (root_coordinate_sign(inv[t]) < 0) {
        s = t;
        break;
      }
    }
    if (s == -1) return word;  // no left descent: the identity
    word.push_back(s);
    left_mult_simple(sys, fwd, s);   // w <- s * w
    right_mult_simple(sys, inv, s);  // w^{-1} <- w^{-1} * s
  }
}

}  // namespace

Element Element::from_matrices(SystemPtr sys, std::vector<RootVector> fwd,
                               std::vector<RootVector> inv) {
  Element e;
  e.word_ = extract_normal_form(sys, fwd, inv);
  e.sys_ = std::move(sys);
  e.fwd_ = std::move(fwd);
  e.inv_ = std::move(inv);
  return e;
}

Element Element::identity(const SystemPtr& sys) {
  Element e;
  e.sys_ = sys;
  e.fwd_ = identity_columns(sys);
  e.inv_ = identity_columns(sys);
  return e;
}

Element Element::generator(const SystemPtr& sys, int s) {
  return from_word(sys, {s});
}

Element Element::from_word(const SystemPtr& sys, const std::vector<int>& word) {
  std::vector<RootVector> fwd = identity_columns(sys);
  std::vector<RootVector> inv = identity_columns(sys);
  for (int s : word) {
    if (s < 0 || s >= sys->rank()) throw std::invalid_argument("Element: letter out of range");
    right_mult_simple(sys, fwd, s);
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) right_mult_simple(sys, inv, *it);
  return from_matrices(sys, std::move(fwd), std::move(inv));
}

std::vector<int> Element::support() const {
  std::vector<int> out = word_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RootVector Element::act(const RootVector& v) const {
  if (v.system() != sys_) throw std::invalid_argument("Element: vector from another system");
  return act_columns(sys_, fwd_, v);
}

Element Element::operator*(const Element& o) const {
  if (sys_ != o.sys_) throw std::invalid_argument("Element: mixing systems");
  std::vector<RootVector> fwd, inv;
  fwd.reserve(sys_->rank());
  inv.reserve(sys_->rank());
  for (int s = 0; s < sys_->rank(); ++s) {
    fwd.push_back(act_columns(sys_, fwd_, o.fwd_[s]));  // (wv).a_s = w.(v.a_s)
    inv.push_back(act_columns(sys_, o.inv_, inv_[s]));  // (wv)^{-1}.a_s = v^{-1}.(w^{-1}.a_s)
  }
  return from_matrices(sys_, std::move(fwd), std::move(inv));
}

Element Element::inverse() const {
  Element e;
  e.sys_ = sys_;
  e.fwd_ = inv_;
  e.inv_ = fwd_;
  e.word_ = extract_normal_form(sys_, inv_, fwd_);
  return e;
}

bool Element::right_descent(int s) const { return root_coordinate_sign(fwd_.at(s)) < 0; }
bool Element::left_descent(int s) const { return root_coordinate_sign(inv_.at(s)) < 0; }

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool Element::operator<(const Element& o) const { return shortlex_less(word_, o.word_); }

std::string Element::word_str() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) os << "*";
    os << sys_->name(word_[i]);
  }
  return os.str();
}

Element reflection_element(const RootVector& gamma) {
  if (classify_root(gamma) != RootSign::positive)
    throw std::invalid_argument("reflection_element: mirror must be a positive unit root");
  const SystemPtr& sys = gamma.system();
  std::vector<RootVector> cols;
  cols.reserve(sys->rank());
  for (int s = 0; s < sys->rank(); ++s)
    cols.push_back(reflect(gamma, RootVector::simple(sys, s)));
  return Element::from_matrices(sys, cols, cols);
}

std::pair<Element, Element> coset_min(const Element& w, const std::vector<int>& I) {
  const SystemPtr& sys = w.system();
  for (int s : I)
    if (s < 0 || s >= sys->rank()) throw std::invalid_argument("coset_min: index out of range");
  std::vector<RootVector> fwd(sys->rank(), RootVector()), inv(sys->rank(), RootVector());
  for (int s = 0; s < sys->rank(); ++s) {
    fwd[s] = w.act_simple(s);
    inv[s] = w.inverse_act_simple(s);
  }
  std::vector<int> stripped;
  for (;;) {
    int chosen = -1;
    for (int s : I) {
      if (root_coordinate_sign(fwd[s]) < 0) {
        chosen = s;
        break;
      }
    }
    if (chosen == -1) break;
    stripped.push_back(chosen);
    right_mult_simple(sys, fwd, chosen);  // w <- w * s, still in the same coset
    left_mult_simple(sys, inv, chosen);
    if (static_cast<int>(stripped.size()) > w.length())
      throw std::logic_error("coset_min: descent stripping exceeded the length bound");
  }
  Element rep = Element::from_matrices(sys, std::move(fwd), std::move(inv));
  std::reverse(stripped.begin(), stripped.end());
  Element tail = Element::from_word(sys, stripped);
  return {std::move(rep), std::move(tail)};
}

}  // namespace coxkit
