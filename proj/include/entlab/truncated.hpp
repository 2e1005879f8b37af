#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "entlab/partition.hpp"
#include "entlab/space.hpp"

namespace entlab {

// Weight rule for a countable space: weight(k) for k = 1, 2, ... with
// sum over all k at most 1. Truncation at depth D keeps outcomes 1..D and
// lumps the remaining mass into a single tail atom, so every depth is a
// genuine probability space and deeper point partitions refine shallower
// ones.
struct TailWeightRule {
  std::string name;
  std::function<double(std::int64_t)> weight;
};

TailWeightRule geometric_rule(double p);   // weight(k) = p (1-p)^(k-1)
TailWeightRule heavy_tail_rule();          // weight(k) = c / (k ln^2(k+1)), infinite-entropy regime
TailWeightRule single_atom_rule();         // all mass on k = 1

// Closed-form limit of the geometric point entropy, (-p ln p - q ln q)/p.
double geometric_entropy_limit(double p);

struct TruncatedCountableModel {
  TailWeightRule rule;
  std::int64_t depth = 0;
  FiniteSpace space;   // outcomes 1..depth then the tail atom
  int tail_index = 0;  // = depth
};

TruncatedCountableModel make_truncated_model(const TailWeightRule& rule, std::int64_t depth);

// Coarse partition chosen per depth; must be consistent across depths
// (the rule at depth D equals the rule at depth D' > D after lumping
// outcomes beyond D into the tail atom).
using EtaRule = std::function<Partition(const TruncatedCountableModel&)>;

EtaRule trivial_eta_rule();
EtaRule point_eta_rule();
EtaRule residue_eta_rule(int modulus);  // classes of k mod modulus, tail atom separate

struct LimitDiagnosticRow {
  std::int64_t depth = 0;
  double entropy_nats = 0.0;
  double increment = 0.0;  // vs previous row; 0 for the first
  std::string verdict;     // verdict as of this depth
};

struct LimitDiagnostic {
  std::vector<LimitDiagnosticRow> rows;
  std::string verdict;  // final verdict: convergent | increasing | diverging
};

// H(point partition at depth D | eta(D)) for each requested depth. The
// column is nondecreasing; "convergent" when the last increment falls
// below convergence_tol, "diverging" when values pass the ceiling while
// still increasing, otherwise "increasing" (no convergence verdict).
LimitDiagnostic entropy_limit_diagnostic(const TailWeightRule& rule, const EtaRule& eta_rule,
                                         const std::vector<std::int64_t>& depths,
                                         double convergence_tol = 1e-4, double ceiling = 50.0);

}  // namespace entlab
