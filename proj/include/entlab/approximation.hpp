#pragma once

#include <optional>
#include <vector>

#include "entlab/partition.hpp"
#include "entlab/space.hpp"

namespace entlab {

// Best approximation of an event by a union of level blocks, measured by
// P(A sym_diff B).
struct ApproximationResult {
  Event best_set;
  double error = 0.0;
  int level = 0;  // 1-based filtration level when produced by uniform_level, else 0
};

// Majority rule: include block C iff P(A&C) > P(C)/2; exact ties (within
// 1e-12) exclude the block so the minimizer is deterministic. The error,
// sum_C min(P(A&C), P(C)-P(A&C)), is the exhaustive minimum over all
// unions of blocks.
ApproximationResult best_approximation(const FiniteSpace& space, const Event& a,
                                       const Partition& level);

struct WorstCaseResult {
  Event worst_a;
  std::vector<int> a_block_indices;  // which a-blocks make up worst_a
  double error = 0.0;
};

// sup over a-sets A of the minimal approximation error at the given
// level. Exhaustive over the 2^|a| unions of a-blocks (hard cap 20);
// ties resolved to the lexicographically smallest block-index set.
WorstCaseResult worst_case_error(const FiniteSpace& space, const Partition& a,
                                 const Partition& level);

// Smallest 1-based level N with worst_case_error < eps, or nullopt.
std::optional<int> uniform_level(const FiniteSpace& space, const Filtration& filtration,
                                 const Partition& a, double eps);

}  // namespace entlab
