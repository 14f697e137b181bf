#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddhooks/bigint.hpp"
#include "oddhooks/partition.hpp"

namespace oddhooks {

/// Multiset of positive cycle lengths, kept in decreasing order.
struct CycleType {
  CycleType() = default;
  explicit CycleType(std::vector<int> cycles);
  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  std::string str() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const CycleType& c);

/// Comma list with optional exponents ("8,2^2"); order is immaterial.
CycleType parseCycleType(std::string_view text);

inline constexpr int kDefaultCharacterCap = 40;

/// Exact character value by rim-hook recursion, stripping the largest
/// remaining cycle first (a partition without a matching hook prunes the
/// whole branch). Requires |p| == c.total() and |p| <= maxN.
BigInt characterValue(const Partition& p, const CycleType& c,
                      int maxN = kDefaultCharacterCap);

/// Character degree by the hook length formula.
BigInt degree(const Partition& p);

/// Cycle type given by the binary digits of n.
CycleType binaryCycleType(unsigned long long n);

/// Binary-digit cycle type of n with digit i (1-based, exponent a_i >= 1)
/// split into two cycles of length 2^k; requires k == a_i - 1.
CycleType splitCycleType(unsigned long long n, int i, int k);

/// floor(n / 2^k) cycles of length 2^k, the remainder in binary digits.
CycleType repeatedCycleType(unsigned long long n, int k);

/// True when some level-k tower component is a single row or a single
/// column of floor(n / 2^k) nodes; equivalent to the character taking value
/// +-1 on repeatedCycleType(n, k). Requires p odd and 2^k <= |p|.
bool unitValueCriterion(const Partition& p, int k);

/// Left: doubleRemovalMatches(p, k). Right: the character has absolute value
/// one on repeatedCycleType(|p|, k). The two agree whenever
/// floor(|p| / 2^k) <= 4, which this checker requires.
std::pair<bool, bool> doubleMatchCharacterCheck(const Partition& p, int k);

}  // namespace oddhooks
