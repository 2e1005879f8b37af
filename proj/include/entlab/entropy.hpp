#pragma once

#include <Eigen/Core>
#include <vector>

#include "entlab/partition.hpp"
#include "entlab/space.hpp"

namespace entlab {

// Conditional entropy H(xi | eta) in nats, with the per-eta-block
// decomposition value = sum(by_block).
struct EntropyReport {
  double value = 0.0;
  Eigen::VectorXd by_block;  // contribution of each eta block, canonical order
  int xi_blocks = 0;
  int eta_blocks = 0;
};

// H(xi | eta) = sum_C P(C) sum_A -(P(A&C)/P(C)) log(P(A&C)/P(C)),
// natural log, 0 log 0 = 0, zero-probability eta blocks contribute 0.
EntropyReport cond_entropy(const FiniteSpace& space, const Partition& xi, const Partition& eta);

// sup over finite partitions with atoms from a of H(. | eta). On a finite
// space the supremum is attained at a itself (splitting atoms never
// lowers conditional entropy), so this is cond_entropy(space, a, eta).
// The brute-force enumeration over all coarsenings of a stays available
// in the test suite as the independent oracle.
EntropyReport max_cond_entropy(const FiniteSpace& space, const Partition& a, const Partition& eta);

struct MartinReport {
  std::vector<EntropyReport> per_level;
  bool bounded = false;
  int best_level = 0;  // 1-based index of the smallest per-level value
};

// Maximal conditional entropy given each filtration level. On a finite
// space every level is finite, so the verdict is always bounded; the
// interesting content is the per-level decay.
MartinReport martin_condition_report(const FiniteSpace& space, const Filtration& filtration,
                                     const Partition& a);

double nats_to_bits(double nats);

}  // namespace entlab
