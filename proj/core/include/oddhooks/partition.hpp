#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oddhooks {

/// A partition: a weakly decreasing sequence of positive parts. Immutable
/// value type; the default-constructed value is the empty partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based row/column accessors; zero outside the diagram.
  int part(int row) const;
  int colLength(int col) const;
  bool contains(int row, int col) const;

  Partition conjugate() const;

  /// Canonical text form: comma separated parts, "0" for the empty partition.
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// The hook of node (row, col): the node itself, the arm to its right and the
/// leg below it. length == arm + leg + 1.
struct HookRef {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  int length = 0;
  int arm = 0;
  int leg = 0;
  friend bool operator==(const HookRef&, const HookRef&) = default;
};

std::ostream& operator<<(std::ostream& os, const HookRef& h);

/// One hook per diagram node, in row-major order.
std::vector<HookRef> hooks(const Partition& p);
std::vector<HookRef> hooksOfLength(const Partition& p, int e);
std::vector<HookRef> hooksOfLengthDivisible(const Partition& p, int e);

/// Throws std::invalid_argument("not a node") when (row, col) is outside the
/// diagram.
HookRef hookAt(const Partition& p, int row, int col);

/// Removes the rim of the given hook; the result is a partition of
/// p.size() - h.length.
Partition removeHook(const Partition& p, const HookRef& h);

/// Strictly decreasing beta-numbers; the number of beads is values.size().
struct BetaSet {
  std::vector<int> values;
  int beadCount() const { return static_cast<int>(values.size()); }
  friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

/// beads must be at least the number of parts. With beads == rows(p) the
/// values are exactly the first-column hook lengths.
BetaSet betaSet(const Partition& p, int beads);
Partition fromBetaSet(const BetaSet& b);

/// Accepts the values in any order; they must be distinct and non-negative.
Partition partitionFromBetaValues(std::vector<int> values);

std::vector<int> firstColumnHookLengths(const Partition& p);

struct ParseError : std::invalid_argument {
  ParseError(const std::string& message, std::string offendingToken);
  std::string token;
};

/// Grammar: comma separated parts with optional exponents ("10,1^2");
/// the empty string and "0" denote the empty partition.
Partition parsePartition(std::string_view text);

}  // namespace oddhooks
