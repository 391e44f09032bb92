#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "coxkit/locpar.hpp"

namespace coxkit {

// Execution policy for the sweep kernels. Every kernel has one code path;
// the policy only decides whether loop iterations run on OpenMP threads.
// Iterations must not share mutable state (the field contexts' interval
// refinement is internally serialized, so shared systems are fine).
enum class Exec { serial, parallel };

template <typename Fn>
void run_indexed(std::size_t n, Exec exec, Fn&& fn) {
#if defined(COXKIT_HAVE_OPENMP)
  if (exec == Exec::parallel) {
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Canonical generator sets for many generating sets inside one system.
// Results are positionally aligned with the input.
std::vector<std::vector<RootVector>> pi_batch(const SystemPtr& sys,
                                              const std::vector<std::vector<RootVector>>& subsets,
                                              Exec exec);

// One graph of the classification sweep: the recognizer's verdict checked
// against enumeration. A graph counts as finite for the oracle exactly when
// its positive root enumeration saturates within root_cap roots; recognized
// finite orders at most order_cap are confirmed by element enumeration.
struct SweepOutcome {
  bool finite = false;               // recognizer verdict
  unsigned long long order = 0;      // recognizer order (0 when infinite)
  bool oracle_finite = false;        // enumeration verdict
  bool agree = false;
};

// All Coxeter matrices of the given rank over the label alphabet, in
// lexicographic order of their upper triangles; outcome per matrix.
std::vector<SweepOutcome> classification_sweep(int rank, const std::vector<unsigned>& labels,
                                               Exec exec, std::size_t root_cap = 25,
                                               std::size_t order_cap = 1200);

}  // namespace coxkit
