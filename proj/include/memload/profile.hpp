#pragma once

#include <algorithm>
#include <vector>

namespace memload {

// Per-unit load values for one sentence. sentence_max is 0 when there are no
// values.
struct DepthProfile {
  std::vector<int> values;
  int sentence_max = 0;

  static DepthProfile from_values(std::vector<int> values) {
    DepthProfile p;
    p.sentence_max =
        values.empty() ? 0 : *std::max_element(values.begin(), values.end());
    p.values = std::move(values);
    return p;
  }

  bool operator==(const DepthProfile&) const = default;
};

}  // namespace memload
