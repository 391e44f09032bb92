#pragma once

#include "coxkit/numberfield.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace coxkit {

// Coxeter matrix labels: finite orders as themselves (>= 2 off-diagonal,
// 1 on the diagonal), infinity encoded as 0.
constexpr unsigned infinite_label = 0;
inline bool label_is_finite(unsigned m) { return m != infinite_label; }
std::string label_str(unsigned m);  // "oo" for the infinite label

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what);
  int line;
  int col;
};

class CoxeterSystem;
using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// A finite-rank Coxeter system: named generators in a fixed declared order,
// the symmetric label matrix, and the geometric bilinear form
// <alpha_s, alpha_t> = -cos(pi/m(s,t)) over an exact number field just large
// enough for the labels (an infinite label contributes the entry -1).
// Generators are addressed by their position in the declared order.
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  static SystemPtr create(std::vector<std::string> names,
                          std::vector<std::vector<unsigned>> matrix);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int s) const { return names_.at(s); }
  int index_of(const std::string& name) const;  // -1 when absent

  unsigned label(int s, int t) const { return matrix_[s][t]; }
  const std::vector<std::vector<unsigned>>& matrix() const { return matrix_; }

  const FieldContextPtr& field() const { return field_; }
  const FieldElem& form_entry(int s, int t) const { return form_[s][t]; }

  // Connected components of the subgraph kept by `keep(label)`, as sorted
  // index lists sorted by smallest member.
  std::vector<std::vector<int>> components(bool (*keep)(unsigned)) const;
  // Components of the odd-label subgraph (finite odd labels >= 3).
  std::vector<std::vector<int>> odd_components() const;
  std::vector<int> odd_component_of(int s) const;

  // Induced subsystem on a sorted index subset; generator names are kept.
  SystemPtr restriction(const std::vector<int>& subset) const;

 private:
  CoxeterSystem() = default;
  std::vector<std::string> names_;
  std::vector<std::vector<unsigned>> matrix_;
  FieldContextPtr field_;
  std::vector<std::vector<FieldElem>> form_;
};

// Parses the graph description language:
//   nodes <id>+ ;
//   edge <id> <id> <label> ;
// with one `nodes` statement, any number of `edge` statements, labels a
// decimal integer >= 2 or "oo", default label 2 for unlisted pairs, and `#`
// starting a comment until end of line. Errors carry 1-based line/column.
SystemPtr parse_system(const std::string& text);

// The same system rendered back in the description language (nodes statement
// plus one edge statement per non-default label), used by the JSON echo.
std::string render_dsl(const CoxeterSystem& sys);

}  // namespace coxkit
