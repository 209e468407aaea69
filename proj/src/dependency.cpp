#include "memload/dependency.hpp"

#include <string>
#include <utility>

namespace memload {

std::optional<UnitViolation> find_violation(std::span<const DependencyUnit> units) {
  if (units.empty()) return UnitViolation{ErrorKind::MissingRoot, 0, "empty sentence"};
  const int n = static_cast<int>(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].index != static_cast<int>(i) + 1) {
      return UnitViolation{ErrorKind::NonContiguousIndices, i,
                           "expected index " + std::to_string(i + 1) +
                               ", found " + std::to_string(units[i].index)};
    }
  }
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto& u = units[i];
    if (u.head < 0 || u.head > n) {
      return UnitViolation{ErrorKind::HeadOutOfRange, i,
                           "unit " + std::to_string(u.index) + " has head " +
                               std::to_string(u.head) + " outside [0, " +
                               std::to_string(n) + "]"};
    }
    if (u.head == u.index) {
      return UnitViolation{ErrorKind::SelfHead, i,
                           "unit " + std::to_string(u.index) + " heads itself"};
    }
    if (u.head == 0) {
      if (root) {
        return UnitViolation{ErrorKind::MultipleRoots, i,
                             "units " + std::to_string(*root + 1) + " and " +
                                 std::to_string(u.index) + " both have head 0"};
      }
      root = i;
    }
  }
  if (!root) return UnitViolation{ErrorKind::MissingRoot, 0, "no unit has head 0"};
  return std::nullopt;
}

DependencySentence::DependencySentence(std::vector<DependencyUnit> units)
    : units_(std::move(units)) {
  if (auto bad = find_violation(units_)) throw TreebankError(bad->kind, bad->detail);
  for (const auto& u : units_) {
    if (u.head == 0) root_ = u.index;
  }
}

DependencySentence DependencySentence::from_heads(std::span<const int> heads) {
  std::vector<DependencyUnit> units;
  units.reserve(heads.size());
  for (std::size_t i = 0; i < heads.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    units.push_back({idx, "w" + std::to_string(idx), heads[i]});
  }
  return DependencySentence(std::move(units));
}

}  // namespace memload
