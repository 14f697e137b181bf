#pragma once

#include <vector>

#include "oddhooks/bigint.hpp"

namespace oddhooks {

/// Binary digits of n with the derived indices used by the counting
/// formulas. Indices into exponents are 1-based to match the counting
/// conventions; maxIndexAtLeast returns 0 when no exponent reaches the bound.
struct DigitProfile {
  unsigned long long n = 0;
  std::vector<int> exponents;  // decreasing

  static DigitProfile of(unsigned long long n);
  int count() const { return static_cast<int>(exponents.size()); }
  int maxIndexAtLeast(int bound) const;
  unsigned long long upperPart(int q) const;  // sum of the first q digits
  BigInt lowerProduct(int q) const;           // product of the digits after q
};

/// Number of partitions of n with odd character degree: the product of the
/// binary digits of n.
BigInt oddCount(unsigned long long n);

/// Number of odd partitions of n on which removing the odd 1-hook twice
/// agrees with removing the odd 2-hook. Requires n >= 2.
BigInt doubleMatchCountBase(unsigned long long n);

/// Subset weight for the level-k double-match count. J is a bitmask over
/// the 1-based index range 1..q (bit j-1 stands for index j) and must
/// contain the indices p and q of the profile.
BigInt doubleMatchWeight(const DigitProfile& profile, int k,
                         unsigned long long maskJ);

/// Number of odd partitions of n on which removing the odd 2^k-hook twice
/// agrees with removing the odd 2^(k+1)-hook. Requires 2^(k+1) <= n.
BigInt doubleMatchCount(unsigned long long n, int k);

/// Subset weight for the level-(k,l) non-commuting count.
BigInt nonCommuteWeight(const DigitProfile& profile, int k, int l,
                        unsigned long long maskJ);

/// Number of odd partitions of n on which the odd-hook removals at levels
/// k < l fail to commute / commute. Require 2^k + 2^l <= n.
BigInt nonCommuteCount(unsigned long long n, int k, int l);
BigInt commuteCount(unsigned long long n, int k, int l);

/// Closed form for the level-(0,l) commuting count; by convention the count
/// is the full odd count when n <= 2^l. Requires l >= 1 and 2^l <= n.
BigInt baseCommuteCount(unsigned long long n, int l);

/// Commuting partitions split by the relative position of the odd 1-hook
/// and the odd 2^l-hook: shared hand, shared foot, or neither.
struct AlignmentCounts {
  BigInt sameHand;
  BigInt sameFoot;
  BigInt disjoint;
  BigInt total() const { return sameHand + sameFoot + disjoint; }
  friend bool operator==(const AlignmentCounts&, const AlignmentCounts&) =
      default;
};

AlignmentCounts commuteAlignmentCounts(unsigned long long n, int l);

}  // namespace oddhooks
