#pragma once

#include "coxkit/root.hpp"

namespace coxkit {

// Group element of a finite-rank Coxeter system, carried as the exact matrix
// of its action on the simple roots (plus the matrix of the inverse, so both
// left and right descent tests are cheap) together with the ShortLex-least
// reduced word in the declared generator order. The word is a canonical form:
// two elements are equal iff their words are equal, which the matrices
// guarantee because the word is re-extracted from the matrix by greedy
// descent whenever an element is built.
class Element {
 public:
  Element() = default;
  static Element identity(const SystemPtr& sys);
  static Element generator(const SystemPtr& sys, int s);
  // Any word in generator indices; the result is normalized.
  static Element from_word(const SystemPtr& sys, const std::vector<int>& word);

  const SystemPtr& system() const { return sys_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  std::vector<int> support() const;  // distinct letters of the reduced word, sorted

  Element operator*(const Element& o) const;
  Element inverse() const;

  // Image of alpha_s, and of an arbitrary vector, under this element.
  const RootVector& act_simple(int s) const { return fwd_.at(s); }
  RootVector act(const RootVector& v) const;
  const RootVector& inverse_act_simple(int s) const { return inv_.at(s); }

  // Right descent: l(w s) < l(w), equivalently w.alpha_s is negative.
  bool right_descent(int s) const;
  // Left descent: l(s w) < l(w), equivalently w^{-1}.alpha_s is negative.
  bool left_descent(int s) const;

  bool operator==(const Element& o) const { return word_ == o.word_; }
  bool operator!=(const Element& o) const { return word_ != o.word_; }
  // ShortLex order on normal forms; deterministic enumeration order.
  bool operator<(const Element& o) const;

  std::string word_str() const;  // e.g. "s1*s2" or "e"

 private:
  SystemPtr sys_;
  std::vector<int> word_;
  std::vector<RootVector> fwd_;  // column s: w . alpha_s
  std::vector<RootVector> inv_;  // column s: w^{-1} . alpha_s

  static Element from_matrices(SystemPtr sys, std::vector<RootVector> fwd,
                               std::vector<RootVector> inv);
  friend Element reflection_element(const RootVector& gamma);
  friend std::pair<Element, Element> coset_min(const Element& w,
                                               const std::vector<int>& I);
};

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b);

// The reflection with mirror a positive unit root, built directly from its
// matrix (no word search).
Element reflection_element(const RootVector& gamma);

// Minimal coset representative decomposition w = w^I * w_I with w_I in the
// standard parabolic W_I and w^I of minimal length in w W_I: returns
// (w^I, w_I). Certificate of minimality: w^I sends every alpha_s, s in I, to
// a positive root.
std::pair<Element, Element> coset_min(const Element& w, const std::vector<int>& I);

}  // namespace coxkit
