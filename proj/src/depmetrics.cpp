#include "memload/depmetrics.hpp"

#include <algorithm>
#include <string>

#include "memload/errors.hpp"

namespace memload::depmetrics {

DepthProfile load_profile(const DependencySentence& sentence) {
  const int n = static_cast<int>(sentence.size());
  // Unit j stays pending over positions [j, resolved_at - 1].
  std::vector<int> delta(n + 2, 0);
  for (const auto& u : sentence.units()) {
    const int resolved_at = u.head == 0 ? n : u.head;
    if (resolved_at > u.index) {
      ++delta[u.index];
      --delta[resolved_at];
    }
  }
  std::vector<int> values(n);
  int running = 0;
  for (int i = 1; i <= n; ++i) {
    running += delta[i];
    values[i - 1] = running;
  }
  return DepthProfile::from_values(std::move(values));
}

StoreTrace simulate_store(const DependencySentence& sentence) {
  const int n = static_cast<int>(sentence.size());
  StoreTrace trace;
  std::vector<int> store;
  std::vector<int> values;
  for (int i = 1; i <= n; ++i) {
    std::erase_if(store, [&](int j) { return sentence.head(j) == i; });
    const int head = sentence.head(i);
    if (head > i || (head == 0 && i < n)) store.push_back(i);
    if (i == n) store.clear();
    values.push_back(static_cast<int>(store.size()));
    trace.stored.push_back(store);
  }
  trace.profile = DepthProfile::from_values(std::move(values));
  return trace;
}

DepthProfile load_profile_oracle(const DependencySentence& sentence) {
  return simulate_store(sentence).profile;
}

bool is_strictly_rightward(const DependencySentence& sentence) {
  return std::all_of(sentence.units().begin(), sentence.units().end(),
                     [](const DependencyUnit& u) {
                       return u.head == 0 || u.head > u.index;
                     });
}

void require_strictly_rightward(const DependencySentence& sentence) {
  for (const auto& u : sentence.units()) {
    if (u.head != 0 && u.head < u.index) {
      throw TreebankError(ErrorKind::LeftwardHead,
                          "unit " + std::to_string(u.index) + " (" + u.surface +
                              ") attaches leftward to " + std::to_string(u.head));
    }
  }
}

}  // namespace memload::depmetrics
