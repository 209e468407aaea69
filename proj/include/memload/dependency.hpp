#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "memload/errors.hpp"

namespace memload {

struct DependencyUnit {
  int index = 0;  // 1-based position
  std::string surface;
  int head = 0;   // 0 marks the root

  bool operator==(const DependencyUnit&) const = default;
};

struct UnitViolation {
  ErrorKind kind;
  std::size_t position;  // 0-based offset of the offending unit in the list
  std::string detail;
};

// First invariant violation in list order, if any.
std::optional<UnitViolation> find_violation(std::span<const DependencyUnit> units);

// A validated dependency sentence: indices 1..n without gaps, exactly one
// root, no self-attachment, every head in [0, n]. Construction throws
// TreebankError on violation.
class DependencySentence {
 public:
  explicit DependencySentence(std::vector<DependencyUnit> units);

  // Units named w1..wn, heads[i] being the head of unit i+1.
  static DependencySentence from_heads(std::span<const int> heads);

  std::size_t size() const { return units_.size(); }
  const std::vector<DependencyUnit>& units() const { return units_; }
  const DependencyUnit& unit(int index) const { return units_[index - 1]; }
  int head(int index) const { return units_[index - 1].head; }
  int root() const { return root_; }

  bool operator==(const DependencySentence&) const = default;

 private:
  std::vector<DependencyUnit> units_;
  int root_ = 0;
};

}  // namespace memload
