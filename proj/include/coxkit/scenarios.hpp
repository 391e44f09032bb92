#pragma once

#include "coxkit/families.hpp"

namespace coxkit {

// Scripted verifications of the worked constructions behind the toolkit.
// Every assertion records the exact expected and computed values; nothing is
// asserted by tolerance. A scenario passes iff all of its assertions pass.
struct Assertion {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ScenarioResult {
  std::string name;
  std::vector<Assertion> assertions;
  std::vector<int> ranks_used;
  bool passed() const;
};

// Scenario ex33, inside the rank 2*max_i + 2 truncation of the a1inf chain.
// With beta_j = alpha_{2j-1} + alpha_{2j} and X_i = {s_{beta_1},...,
// s_{beta_i}}, the straightening elements u_i (descending blocks) satisfy
// u_i . beta_j = alpha_{j+i}; each <X_i> is parabolic of type A_i with
// certificate u_i^{-1}; the tail parabolics G_i = u_i^{-1} W_{i+1..N} u_i
// descend strictly; and for small i the intersection G_i with the standard
// parabolic on the first 2i generators is exactly <X_i> (checked
// exhaustively). 1 <= max_i <= 5.
ScenarioResult verify_scenario_ex33(int max_i = 5);

// Scenario ex45, inside the rank max_i + 2 truncation of the uniform-label
// chain (label m even >= 4, or infinite_label). With u_i = s_1 ... s_{i+1}
// and gamma_i = u_i . alpha_i: the gamma_i are positive with alpha_{i+1} in
// the support, stable under later u_j, pairwise form-identical to the simple
// roots, and generate parabolic subgroups certified by u_i; alpha_1 never
// appears among the canonical roots, so s_1 stays outside the subgroup; and
// the odd graph of the truncation is edgeless. 1 <= max_i <= 5.
ScenarioResult verify_scenario_ex45(unsigned m = 4, int max_i = 5);

// Scenario g2, in the order-12 dihedral system on {s, t} with label 6: the
// order-4 subgroups H1 = <s, tstst> and H2 = <t, ststs> intersect exactly in
// {e, (st)^3}, the central longest element, which is not a reflection; and
// neither H_i is parabolic. Exactly five assertions.
ScenarioResult verify_scenario_g2();

}  // namespace coxkit
