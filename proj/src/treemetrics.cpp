#include "memload/treemetrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace memload::treemetrics {

namespace {

bool is_coordinator(std::string_view label) {
  return label == "CC" || label == "CONJP";
}

bool attaches_forward(std::string_view label) {
  return is_coordinator(label) || label == ",";
}

std::vector<std::string> child_labels(const ConstituencyTree& node) {
  std::vector<std::string> labels;
  labels.reserve(node.children().size());
  for (const auto& c : node.children()) labels.push_back(c.label());
  return labels;
}

std::vector<int> edge_numbers(const ConstituencyTree& node,
                              const MetricConfig& config) {
  if (config.coordination_adjust) {
    return coordination_adjusted_numbers(child_labels(node), config.scheme);
  }
  return branch_numbers(node.children().size(), config.scheme);
}

void collect_word_depths(const ConstituencyTree& node, int depth,
                         const MetricConfig& config, std::vector<int>& out) {
  if (node.is_leaf()) {
    out.push_back(depth);
    return;
  }
  const auto numbers = edge_numbers(node, config);
  for (std::size_t k = 0; k < node.children().size(); ++k) {
    collect_word_depths(node.children()[k], depth + numbers[k], config, out);
  }
}

void collect_np_depths(const ConstituencyTree& node, int depth,
                       bool inside_np, const MetricConfig& config,
                       std::vector<int>& out) {
  if (node.is_leaf()) return;
  const bool is_np = node.label() == "NP";
  if (is_np && !(inside_np && config.np_selector == NpSelector::maximal)) {
    out.push_back(depth);
  }
  if (is_np && config.np_selector == NpSelector::maximal) return;
  const auto numbers = edge_numbers(node, config);
  for (std::size_t k = 0; k < node.children().size(); ++k) {
    collect_np_depths(node.children()[k], depth + numbers[k],
                      inside_np || is_np, config, out);
  }
}

}  // namespace

std::vector<int> branch_numbers(std::size_t n_children, NumberingScheme scheme) {
  if (n_children == 0) throw std::invalid_argument("branch_numbers: no children");
  std::vector<int> numbers(n_children);
  for (std::size_t k = 0; k < n_children; ++k) {
    const int pending = static_cast<int>(n_children - 1 - k);
    numbers[k] = scheme == NumberingScheme::yngve ? pending : std::min(pending, 1);
  }
  return numbers;
}

bool is_coordination(std::span<const std::string> child_labels) {
  return std::any_of(child_labels.begin() + std::min<std::size_t>(1, child_labels.size()),
                     child_labels.end(),
                     [](const std::string& l) { return is_coordinator(l); });
}

std::vector<int> coordination_adjusted_numbers(
    std::span<const std::string> child_labels, NumberingScheme scheme) {
  if (!is_coordination(child_labels)) {
    return branch_numbers(child_labels.size(), scheme);
  }
  const std::size_t n = child_labels.size();
  // group[k]: conjunct group of child k. A group is open while it holds only
  // forward-attaching children.
  std::vector<std::size_t> group(n);
  std::size_t current = 0;
  bool open = attaches_forward(child_labels[0]);
  for (std::size_t k = 1; k < n; ++k) {
    const bool attacher = attaches_forward(child_labels[k]);
    if (!open) {
      ++current;
      open = attacher;
    } else if (!attacher) {
      open = false;
    }
    group[k] = current;
  }
  const std::size_t n_groups = current + 1;

  std::vector<int> numbers(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t last_in_group = k;
    while (last_in_group + 1 < n && group[last_in_group + 1] == group[k]) {
      ++last_in_group;
    }
    const int pending = static_cast<int>((n_groups - 1 - group[k]) +
                                         (last_in_group - k));
    numbers[k] = scheme == NumberingScheme::yngve ? pending : std::min(pending, 1);
  }
  return numbers;
}

DepthProfile word_depths(const ConstituencyTree& tree, const MetricConfig& config) {
  if (config.unit != MetricUnit::word) {
    throw std::invalid_argument("word_depths requires unit=word");
  }
  std::vector<int> values;
  collect_word_depths(tree, 0, config, values);
  return DepthProfile::from_values(std::move(values));
}

DepthProfile np_depths(const ConstituencyTree& tree, const MetricConfig& config) {
  if (config.unit != MetricUnit::np) {
    throw std::invalid_argument("np_depths requires unit=np");
  }
  std::vector<int> values;
  collect_np_depths(tree, 0, false, config, values);
  return DepthProfile::from_values(std::move(values));
}

DepthProfile unit_depths(const ConstituencyTree& tree, const MetricConfig& config) {
  return config.unit == MetricUnit::word ? word_depths(tree, config)
                                         : np_depths(tree, config);
}

DepthProfile stack_oracle_depths(const ConstituencyTree& tree) {
  std::vector<const ConstituencyTree*> stack{&tree};
  std::vector<int> values;
  while (!stack.empty()) {
    const ConstituencyTree* top = stack.back();
    stack.pop_back();
    if (top->is_leaf()) {
      values.push_back(static_cast<int>(stack.size()));
      continue;
    }
    const auto& kids = top->children();
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(&*it);
  }
  return DepthProfile::from_values(std::move(values));
}

}  // namespace memload::treemetrics
