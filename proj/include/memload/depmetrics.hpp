#pragma once

#include <vector>

#include "memload/dependency.hpp"
#include "memload/profile.hpp"

namespace memload::depmetrics {

// values[i-1] is the number of units j <= i whose head has not been read by
// the time unit i is read. The root counts as pending until the final unit.
DepthProfile load_profile(const DependencySentence& sentence);

// Step-by-step record of the explicit short-term store.
struct StoreTrace {
  DepthProfile profile;
  // Unit indices held in the store after each step, in insertion order.
  std::vector<std::vector<int>> stored;
};

// Reads units left to right: resolved units leave the store, the new unit
// enters if its head is still ahead, and everything is cleared at the last
// unit.
StoreTrace simulate_store(const DependencySentence& sentence);

DepthProfile load_profile_oracle(const DependencySentence& sentence);

// Every non-root unit attaches to a unit on its right (head-final input).
bool is_strictly_rightward(const DependencySentence& sentence);

// Throws TreebankError(LeftwardHead) naming the first unit with head < index.
void require_strictly_rightward(const DependencySentence& sentence);

}  // namespace memload::depmetrics
