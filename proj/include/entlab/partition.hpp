#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entlab/space.hpp"

namespace entlab {

// Set partition of {0, .., n_outcomes-1} in canonical form: each block
// sorted ascending, blocks ordered by smallest element. Canonical form is
// unique, so operator== is partition equality.
struct Partition {
  int n_outcomes = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const Partition&) const = default;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Ordered family of generator events; atoms are the classes of equal
// membership pattern across the family.
struct GeneratorFamily {
  std::vector<Event> sets;
};

// Increasing chain of partitions with a designated limit; on a finite
// space the limit defaults to the join of all levels. Level numbering in
// reports is 1-based.
struct Filtration {
  std::vector<Partition> levels;
  Partition limit;

  int level_count() const { return static_cast<int>(levels.size()); }
};

enum class RefineMode { Mod0, Exact };

// Validates blocks (disjoint, nonempty, covering) and canonicalizes.
Partition make_partition(std::vector<std::vector<int>> blocks, int n_outcomes);
Partition make_partition(std::vector<std::vector<int>> blocks, const FiniteSpace& space);

Partition point_partition(const FiniteSpace& space);
Partition trivial_partition(const FiniteSpace& space);

// outcome index -> block index (canonical order)
std::vector<int> block_index_of(const Partition& p);

// True iff xi <= eta, i.e. eta refines xi: every block of xi is a union
// of blocks of eta. Mod0 ignores zero-weight outcomes (the default order
// on partitions); Exact compares set-theoretically.
bool refines(const FiniteSpace& space, const Partition& xi, const Partition& eta,
             RefineMode mode = RefineMode::Mod0);

bool equal_mod0(const FiniteSpace& space, const Partition& a, const Partition& b);

// Lattice supremum: common refinement (all nonempty pairwise intersections).
Partition join(const Partition& a, const Partition& b);

// Lattice infimum: finest common coarsening (connected components of the
// "share a block" graph).
Partition meet(const Partition& a, const Partition& b);

Partition atoms_from_generators(const FiniteSpace& space, const GeneratorFamily& gamma);

// True iff any two distinct outcomes of e have different membership
// patterns across gamma.
bool separates_points(const FiniteSpace& space, const GeneratorFamily& gamma, const Event& e);

// Partition of the whole space made of the given blocks over E plus, if
// nonempty, the single complement block X minus E.
Partition extend_with_complement(const FiniteSpace& space, const Event& e,
                                 const std::vector<std::vector<int>>& blocks_over_e);

// chain[k] = atoms of the first k generators, k = 0..|gamma|; increasing
// in refinement order by construction.
std::vector<Partition> refining_chain(const FiniteSpace& space, const GeneratorFamily& gamma);

struct PartitionCount {
  std::uint64_t bell = 0;
  std::vector<std::uint64_t> stirling;  // S(n, 0..n)
};

// Exact Bell number and Stirling-second-kind row via the triangle
// recurrence; n must be in [1, 20] to stay inside 64 bits.
PartitionCount count_partitions(int n);

// Visits every set partition of {0..n-1} as a restricted-growth string
// (outcome -> block id). Hard-capped at n <= 10.
void enumerate_partitions(int n, const std::function<void(const std::vector<int>&)>& visit);

// levels must be increasing (mod 0); limit defaults to the join of all
// levels and must refine the last level.
Filtration make_filtration(const FiniteSpace& space, std::vector<Partition> levels,
                           std::optional<Partition> limit = std::nullopt);

// Text format: one block per line, comma-separated outcome indices.
Partition parse_partition(const std::string& text, int n_outcomes);
std::string format_partition(const Partition& p);

}  // namespace entlab
