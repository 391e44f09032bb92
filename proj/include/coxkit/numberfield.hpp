#pragma once

#include "coxkit/polynomial.hpp"

#include <memory>
#include <mutex>
#include <set>
#include <string>

namespace coxkit {

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

// Element of the number field attached to a FieldContext: a polynomial in the
// primitive element c with rational coefficients, reduced modulo the minimal
// polynomial. Because the minimal polynomial is irreducible, an element is
// zero exactly when its coefficient vector is zero, and sign() is exact.
class FieldElem {
 public:
  FieldElem() = default;  // placeholder with no context; unusable in arithmetic
  FieldElem(FieldContextPtr ctx, Rational value);
  static FieldElem from_coeffs(FieldContextPtr ctx, QPoly coeffs);

  const FieldContextPtr& context() const { return ctx_; }
  const QPoly& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational rational_value() const;  // pre: is_rational()

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // o nonzero
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  int sign() const;  // exact: -1, 0, +1
  bool operator<(const FieldElem& o) const { return (*this - o).sign() < 0; }
  bool operator>(const FieldElem& o) const { return o < *this; }
  bool operator<=(const FieldElem& o) const { return !(o < *this); }
  bool operator>=(const FieldElem& o) const { return !(*this < o); }

  std::string str() const;  // exact, rendered in the primitive element

 private:
  FieldContextPtr ctx_;
  QPoly coeffs_;
};

// Representation-level total order (coefficient vectors compared
// lexicographically): cheaper than numeric comparison, used only to make
// container iteration deterministic.
bool structural_less(const FieldElem& a, const FieldElem& b);

// The real number field Q(c), c = 2 cos(pi/L), where L is the least common
// multiple of the finite edge labels that need an irrational cosine (labels
// >= 4). Labels 2 and 3 have rational cosines, so a system labeled only with
// {2, 3, oo} gets the degenerate rational context (degree-1 minimal
// polynomial). The minimal polynomial of c is derived from the cyclotomic
// polynomial of index 2L; all values 2 cos(pi/m) with m | L are reached from c
// by the D_k polynomials.
//
// sign() on elements evaluates interval arithmetic over an isolating interval
// for c that shrinks on demand; refinement mutates shared state and is
// serialized by a mutex, so one context may be used from parallel kernels.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  // finite_labels: the finite Coxeter matrix labels (values >= 2) the field
  // must cover. Infinity is not a member; its form entry is the rational -1.
  static FieldContextPtr make(const std::set<unsigned>& finite_labels);

  unsigned level() const { return level_; }  // 1 for the rational context
  const QPoly& minimal_polynomial() const { return minpoly_; }
  int degree() const { return poly_degree(minpoly_); }
  bool is_rational() const { return degree() == 1; }

  FieldElem primitive_element() const;        // c
  FieldElem rational(const Rational& q) const;
  FieldElem zero() const { return rational(0); }
  FieldElem one() const { return rational(1); }

  // 2 cos(pi/m); requires m >= 1 and m | level (or a rational case m <= 3).
  // Throws std::domain_error when the field is too small.
  FieldElem two_cos_pi_over(unsigned m) const;

  // Bilinear form entry for a label: +1 for m = 1 (diagonal), 0 for m = 2,
  // -1 for infinity (m = 0), -cos(pi/m) for finite m the field covers.
  // Throws std::domain_error for finite m >= 4 not dividing the level.
  FieldElem form_entry(unsigned label) const;

  // Exact sign of p(c) for a reduced, nonzero p; used by FieldElem::sign.
  int sign_at_primitive(const QPoly& p) const;

  // Current isolating interval (for reporting/tests) and forced refinement.
  std::pair<Rational, Rational> isolating_interval() const;
  void refine_interval(int bisections) const;

 private:
  FieldContext() = default;

  unsigned level_ = 1;
  QPoly minpoly_;
  mutable std::mutex mu_;
  mutable Rational lo_, hi_;  // minpoly changes sign across [lo_, hi_]; c inside
};

}  // namespace coxkit
