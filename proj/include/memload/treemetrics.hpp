#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "memload/profile.hpp"
#include "memload/tree.hpp"

namespace memload::treemetrics {

enum class NumberingScheme { yngve, sampson };
enum class MetricUnit { word, np };
enum class NpSelector { all, maximal };

struct MetricConfig {
  NumberingScheme scheme = NumberingScheme::yngve;
  bool coordination_adjust = true;
  MetricUnit unit = MetricUnit::word;
  NpSelector np_selector = NpSelector::all;
};

// Number on the edge to each child. Yngve: child k of n gets n - k, the
// count of right siblings still to be expanded. Sampson: pending right
// siblings are held as one set, so min(n - k, 1).
std::vector<int> branch_numbers(std::size_t n_children, NumberingScheme scheme);

// A node is a coordination when a CC or CONJP child appears after the first
// position.
bool is_coordination(std::span<const std::string> child_labels);

// Edge numbers for a coordination node. Children are grouped into conjuncts,
// with each CC, CONJP or "," attached to the conjunct after it. A child's
// Yngve number is the number of groups to its right plus the members of its
// own group still to its right, i.e. the pending stack size when every
// conjunct group is a single constituent. Sampson caps this at 1.
// Non-coordination nodes get plain branch_numbers.
std::vector<int> coordination_adjusted_numbers(
    std::span<const std::string> child_labels, NumberingScheme scheme);

// Per-leaf sum of edge numbers on the root-to-leaf path, left to right.
// Requires config.unit == word.
DepthProfile word_depths(const ConstituencyTree& tree, const MetricConfig& config);

// Path sum from the root to each NP node (edges below the NP excluded), in
// preorder. Labels must already be normalized. Requires config.unit == np.
DepthProfile np_depths(const ConstituencyTree& tree, const MetricConfig& config);

// Dispatches on config.unit.
DepthProfile unit_depths(const ConstituencyTree& tree, const MetricConfig& config);

// Top-down pushdown simulation: pop the top symbol; expand internal nodes
// leftmost-on-top; for a word, record how many symbols remain stored.
DepthProfile stack_oracle_depths(const ConstituencyTree& tree);

}  // namespace memload::treemetrics
