#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace entlab {

struct Partition;  // partition.hpp

// Finite probability space: outcome labels plus a weight vector that sums
// to 1 after construction. Immutable by convention.
struct FiniteSpace {
  std::vector<std::string> labels;  // may be empty; label(i) falls back to the index
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(weights.size()); }
  std::string label(int i) const {
    return labels.empty() ? std::to_string(i) : labels[static_cast<std::size_t>(i)];
  }
};

// Subset of outcomes, stored as a sorted, duplicate-free index list.
struct Event {
  std::vector<int> members;

  bool operator==(const Event&) const = default;
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int i) const;
};

// Validates weights (nonempty, nonnegative, total within 1e-9 of 1) and
// renormalizes so the stored weights sum to 1 exactly up to rounding.
FiniteSpace make_space(Eigen::VectorXd weights, std::vector<std::string> labels = {});
FiniteSpace make_space(const std::vector<double>& weights, std::vector<std::string> labels = {});
FiniteSpace uniform_space(int n);

Event make_event(std::vector<int> members, const FiniteSpace& space);
Event full_event(const FiniteSpace& space);
Event complement_event(const FiniteSpace& space, const Event& a);

Event set_union(const Event& a, const Event& b);
Event set_intersection(const Event& a, const Event& b);
Event set_difference(const Event& a, const Event& b);

// A minus B union B minus A
Event sym_diff(const Event& a, const Event& b);

double prob(const FiniteSpace& space, const Event& a);

// P(A | blocks of eta) as one value per outcome, constant on each block.
// Outcomes in zero-probability blocks get 0; everything downstream works
// mod null sets.
Eigen::VectorXd cond_prob(const FiniteSpace& space, const Event& a, const Partition& eta);

}  // namespace entlab
