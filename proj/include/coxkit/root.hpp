#pragma once

#include "coxkit/coxeter.hpp"

namespace coxkit {

// Vector in the reflection representation, stored by coordinates over the
// simple roots of its system. Equality and ordering are exact.
class RootVector {
 public:
  RootVector() = default;
  RootVector(SystemPtr sys, std::vector<FieldElem> coords);
  static RootVector zero(const SystemPtr& sys);
  static RootVector simple(const SystemPtr& sys, int s);

  const SystemPtr& system() const { return sys_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  const FieldElem& operator[](int s) const { return coords_.at(s); }
  const std::vector<FieldElem>& coords() const { return coords_; }

  bool is_zero() const;
  std::vector<int> support() const;           // indices with nonzero coordinate
  bool is_simple() const;                     // equals some alpha_s

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator-() const;
  RootVector scaled(const FieldElem& c) const;

  bool operator==(const RootVector& o) const;
  bool operator!=(const RootVector& o) const { return !(*this == o); }

  std::string str() const;  // linear combination in generator names

 private:
  SystemPtr sys_;
  std::vector<FieldElem> coords_;
};

// Bilinear form <u, v> of the common system.
FieldElem form(const RootVector& u, const RootVector& v);

// Reflection in a unit root: v - 2<gamma, v> gamma. The caller is responsible
// for gamma being a unit root; classify_root checks norms exactly.
RootVector reflect(const RootVector& gamma, const RootVector& v);

// Reflection in the simple root alpha_s (only coordinate s changes).
RootVector simple_reflect(int s, const RootVector& v);

enum class RootSign { positive, negative, not_a_unit_root };
std::string root_sign_str(RootSign);

// Sign classification: vectors of norm != 1 (or zero, or of mixed coordinate
// signs) are rejected; otherwise positive iff every nonzero coordinate is
// positive. For actual roots this matches the geometric sign.
RootSign classify_root(const RootVector& v);

bool root_is_positive(const RootVector& v);  // classify_root == positive

// Positive member of {v, -v}; pre: v classifies as positive or negative.
RootVector positive_representative(const RootVector& v);

// Sign of the first nonzero coordinate (0 for the zero vector). For vectors
// known to lie in the root system this is the geometric sign without the norm
// check that classify_root performs.
int root_coordinate_sign(const RootVector& v);
inline bool root_fast_positive(const RootVector& v) { return root_coordinate_sign(v) > 0; }

// Deterministic representation order for root containers: coordinate-wise
// structural comparison.
bool root_structural_less(const RootVector& a, const RootVector& b);

struct RootLess {
  bool operator()(const RootVector& a, const RootVector& b) const {
    return root_structural_less(a, b);
  }
};

// Depth of a positive root: 1 for simple roots, else 1 + depth of s.gamma for
// the smallest s with <alpha_s, gamma> > 0 (such a step always reduces depth).
int root_depth(const RootVector& gamma);

// Reading order for rendered root lists: positive roots sorted by ascending
// depth, ties broken toward the leftmost dominant coordinate, so the simple
// roots come out in generator order. Non-positive vectors sort after positive
// ones, by structural order. Not the comparator to use for sets; see RootLess.
bool root_display_less(const RootVector& a, const RootVector& b);

}  // namespace coxkit
