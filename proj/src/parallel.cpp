#include "coxkit/parallel.hpp"

#include <stdexcept>

namespace coxkit {

std::vector<std::vector<RootVector>> pi_batch(const SystemPtr& sys,
                                              const std::vector<std::vector<RootVector>>& subsets,
                                              Exec exec) {
  std::vector<std::vector<RootVector>> out(subsets.size());
  run_indexed(subsets.size(), exec,
              [&](std::size_t i) { out[i] = canonical_generators(sys, subsets[i]); });
  return out;
}

namespace {

// Upper triangle (row-major) of the rank-n matrix with the given digits.
std::vector<std::vector<unsigned>> matrix_from_digits(int n, const std::vector<unsigned>& labels,
                                                      std::size_t index) {
  std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
  for (int i = n - 1; i >= 0; --i) {
    m[i][i] = 1;
    for (int j = n - 1; j > i; --j) {
      m[i][j] = m[j][i] = labels[index % labels.size()];
      index /= labels.size();
    }
  }
  return m;
}

}  // namespace

std::vector<SweepOutcome> classification_sweep(int rank, const std::vector<unsigned>& labels,
                                               Exec exec, std::size_t root_cap,
                                               std::size_t order_cap) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (labels.empty()) throw std::invalid_argument("label alphabet is empty");

  std::size_t pairs = static_cast<std::size_t>(rank) * (rank - 1) / 2;
  std::size_t total = 1;
  for (std::size_t p = 0; p < pairs; ++p) total *= labels.size();

  std::vector<std::string> names;
  for (int s = 1; s <= rank; ++s) names.push_back("g" + std::to_string(s));

  std::vector<SweepOutcome> out(total);
  run_indexed(total, exec, [&](std::size_t index) {
    SystemPtr sys = CoxeterSystem::create(names, matrix_from_digits(rank, labels, index));
    TypeInfo info = finite_type_recognize(sys);
    SweepOutcome& o = out[index];
    o.finite = info.finite;
    o.order = info.order;

    RootEnumeration phi = enumerate_positive_roots(sys, 0, root_cap);
    o.oracle_finite = phi.saturated;
    o.agree = o.finite == o.oracle_finite;
    if (o.agree && o.finite && o.order <= order_cap) {
      GroupEnumeration all = enumerate_elements(sys, order_cap + 1);
      o.agree = all.saturated && all.elements.size() == o.order;
    }
  });
  return out;
}

}  // namespace coxkit
