#include "forestbound/selection.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace forestbound {

SelectionSet::SelectionSet(std::vector<Hypothesis> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 1) {
    throw InvalidSelectionError("hypothesis labels are 1-based, got " +
                                std::to_string(members_.front()));
  }
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw InvalidSelectionError("hypothesis " + std::to_string(*dup) + " selected twice");
  }
}

SelectionSet SelectionSet::full(Count m) { return range({1, m}); }

SelectionSet SelectionSet::range(HypothesisRange r) {
  SelectionSet s;
  if (r.size() > 0) {
    s.members_.resize(static_cast<std::size_t>(r.size()));
    std::iota(s.members_.begin(), s.members_.end(), r.first);
  }
  if (!s.members_.empty() && s.members_.front() < 1) {
    throw InvalidSelectionError("hypothesis labels are 1-based");
  }
  return s;
}

bool SelectionSet::contains(Hypothesis h) const {
  return std::binary_search(members_.begin(), members_.end(), h);
}

SelectionPath::SelectionPath(std::vector<Hypothesis> order, Count m)
    : order_(std::move(order)), m_(m) {
  if (m_ < 1) throw NotAPermutationError("path needs m >= 1");
  if (static_cast<Count>(order_.size()) > m_) {
    throw NotAPermutationError("path has " + std::to_string(order_.size()) +
                               " entries but only " + std::to_string(m_) + " hypotheses exist");
  }
  std::vector<char> seen(static_cast<std::size_t>(m_), 0);
  for (std::size_t t = 0; t < order_.size(); ++t) {
    const Hypothesis h = order_[t];
    if (h < 1 || h > m_) {
      throw NotAPermutationError("path entry " + std::to_string(t + 1) + " = " +
                                 std::to_string(h) + " outside 1.." + std::to_string(m_));
    }
    if (seen[static_cast<std::size_t>(h - 1)]) {
      throw NotAPermutationError("hypothesis " + std::to_string(h) + " repeated in path");
    }
    seen[static_cast<std::size_t>(h - 1)] = 1;
  }
}

SelectionPath SelectionPath::identity(Count m) {
  std::vector<Hypothesis> order(static_cast<std::size_t>(std::max<Count>(m, 0)));
  std::iota(order.begin(), order.end(), Hypothesis{1});
  return SelectionPath(std::move(order), m);
}

}  // namespace forestbound
