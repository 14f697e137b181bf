#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddhooks/partition.hpp"

namespace oddhooks {

/// Hooks of length e whose removal leaves a partition of odd character
/// degree. For an odd partition and e a power of two at most its size there
/// is exactly one such hook.
std::vector<HookRef> oddHooks(const Partition& p, int e);

/// Removes the unique 2^k-hook whose removal preserves odd degree.
/// Requires p odd and 2^k <= |p|.
Partition removeOddHook(const Partition& p, int k);

/// Closed form of removeOddHook for hook partitions of 2-power size
/// (2^t - w, 1^w) with k < t.
Partition removeOddHookClosedForm(const Partition& p, int k);

/// Coordinates of the unique odd 2^k-hook: its row, its column, and the
/// first-column hook length of its row.
struct OddHookData {
  int row = 0;
  int col = 0;
  int firstColumnLength = 0;
  friend bool operator==(const OddHookData&, const OddHookData&) = default;
};

OddHookData oddHookPosition(const Partition& p, int k);

/// The chain removing hooks sized by the binary digits of |p| in decreasing
/// order, from p down to the empty partition. Present exactly when p is odd,
/// and unique when present.
std::optional<std::vector<Partition>> binaryHookChain(const Partition& p);

/// The level-k tower component in which the removal of the odd 2^j-hook is
/// realized, together with its 0-based position in the row. Requires p odd,
/// k <= j and 2^j <= |p|.
std::pair<int, Partition> removalComponent(const Partition& p, int k, int j);

/// Whether removing the odd 2^k-hook twice gives the same partition as
/// removing the odd 2^(k+1)-hook. Requires p odd and 2^(k+1) <= |p|.
bool doubleRemovalMatches(const Partition& p, int k);

/// Whether the odd-hook removals at levels k and l commute. Requires p odd,
/// k < l and 2^k + 2^l <= |p|.
bool removalsCommute(const Partition& p, int k, int l);

/// Relative position of the odd 1-hook and the odd 2^l-hook: same row
/// (shared hand), same column (shared foot), or neither.
enum class HookAlignment { SameHand, SameFoot, Disjoint };

const char* str(HookAlignment alignment);

HookAlignment hookAlignment(const Partition& p, int l);

/// The odd partitions obtained from g by adjoining one 2^t-hook; requires g
/// odd with |g| < 2^t. There is exactly one per runner of the normalized
/// 2^t-abacus, returned in runner order.
std::vector<Partition> extensions(const Partition& g, int t);
Partition extensionOnRunner(const Partition& g, int t, int runner);

}  // namespace oddhooks
