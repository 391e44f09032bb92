// Times the sweep kernels under both execution policies and checks that the
// outputs agree exactly. On a single-CPU host the speedup hovers around 1x;
// the agreement check is the part that must always hold.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "coxkit/parallel.hpp"

using namespace coxkit;

namespace {

template <typename Fn>
double run_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  std::cout << std::fixed << std::setprecision(1);
  bool ok = true;

  {
    SystemPtr sys = CoxeterSystem::create(
        {"a", "b", "c", "d"},
        {{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}});
    RootEnumeration phi = enumerate_positive_roots(sys, 0, 100);
    std::vector<std::vector<RootVector>> subsets;
    for (std::size_t i = 0; i < phi.roots.size(); ++i)
      for (std::size_t j = i + 1; j < phi.roots.size(); ++j)
        subsets.push_back({phi.roots[i], phi.roots[j]});

    std::vector<std::vector<RootVector>> serial, parallel;
    double ts = run_ms([&] { serial = pi_batch(sys, subsets, Exec::serial); });
    double tp = run_ms([&] { parallel = pi_batch(sys, subsets, Exec::parallel); });
    bool equal = serial == parallel;
    ok = ok && equal;
    std::cout << "pi_batch, " << subsets.size() << " root pairs in F4: serial " << ts
              << " ms, parallel " << tp << " ms, speedup " << std::setprecision(2) << (ts / tp)
              << "x, outputs " << (equal ? "equal" : "DIFFER") << "\n"
              << std::setprecision(1);
  }

  {
    std::vector<unsigned> labels = {2, 3, 4, 6, infinite_label};
    std::vector<SweepOutcome> serial, parallel;
    double ts = run_ms([&] { serial = classification_sweep(3, labels, Exec::serial); });
    double tp = run_ms([&] { parallel = classification_sweep(3, labels, Exec::parallel); });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
      equal = serial[i].finite == parallel[i].finite && serial[i].order == parallel[i].order &&
              serial[i].oracle_finite == parallel[i].oracle_finite &&
              serial[i].agree == parallel[i].agree;
    ok = ok && equal;
    std::cout << "classification_sweep, rank 3 over {2,3,4,6,oo} (" << serial.size()
              << " graphs): serial " << ts << " ms, parallel " << tp << " ms, speedup "
              << std::setprecision(2) << (ts / tp) << "x, outputs "
              << (equal ? "equal" : "DIFFER") << "\n";
  }

  std::cout << (ok ? "all outputs agree" : "OUTPUT MISMATCH") << "\n";
  return ok ? 0 : 1;
}
