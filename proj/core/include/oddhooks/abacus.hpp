#pragma once

#include <span>
#include <string>
#include <vector>

#include "oddhooks/partition.hpp"

namespace oddhooks {

/// Bead arrangement on `runners` columns and rows -rowBound..rowBound.
/// Positions are numbered 0..runners*(2*rowBound+1)-1 going left to right and
/// top to bottom, so the bead positions are exactly the beta-numbers of the
/// encoded partition. The encoded partition does not depend on the grid
/// padding, only on the bead positions.
class AbacusConfig {
 public:
  AbacusConfig(int runners, int rowBound, std::vector<int> beadPositions);

  static int defaultRowBound(const Partition& p, int runners);
  /// First gap in position (0,0): rows -rowBound..-1 are full and beads in
  /// row >= 0 encode the first-column hook lengths.
  static AbacusConfig normalized(const Partition& p, int runners);
  /// The unique configuration for p with the given number of beads.
  static AbacusConfig forPartition(const Partition& p, int runners,
                                   int beadCount);

  int runners() const { return runners_; }
  int rowBound() const { return rowBound_; }
  int beadCount() const { return static_cast<int>(beads_.size()); }
  int positionCount() const { return runners_ * (2 * rowBound_ + 1); }
  const std::vector<int>& beadPositions() const { return beads_; }

  bool occupied(int position) const;
  int firstGap() const;

  int positionOf(int row, int runner) const;
  int rowOf(int position) const;
  int runnerOf(int position) const { return position % runners_; }

  Partition partition() const;

  AbacusConfig withBeadMoved(int from, int to) const;
  /// Moves the bead `y` position numbers to the left, possibly crossing into
  /// a higher row; the target must be a gap.
  AbacusConfig slideLeft(int beadPosition, int y) const;

  std::vector<Partition> runnerPartitions() const;
  int beadsOnRunner(int runner) const;
  /// Largest bead position on the runner, -1 when the runner is empty.
  int bottomBeadOnRunner(int runner) const;

  /// Text grid, one row per line, beads as bullets and gaps as middle dots.
  std::string render() const;

  /// Configurations with equal runner count and equal bead positions encode
  /// the same content; grid padding is immaterial.
  friend bool operator==(const AbacusConfig& a, const AbacusConfig& b) {
    return a.runners_ == b.runners_ && a.beads_ == b.beads_;
  }

 private:
  int runners_ = 1;
  int rowBound_ = 0;
  std::vector<int> beads_;  // sorted position numbers
};

struct PushUpResult {
  AbacusConfig config;
  std::vector<int> runnerSlides;
  int totalSlides() const;
};

/// Slides every bead on every runner as high as possible.
PushUpResult pushUp(const AbacusConfig& a);

/// Runner partitions of the normalized configuration together with the
/// canonically ordered quotient (read off a configuration whose bead count is
/// divisible by the runner count; the two differ by a cyclic shift).
struct QuotientTuple {
  std::vector<Partition> runners;
  std::vector<Partition> ordered;
};

Partition core(const Partition& p, int e);
std::vector<Partition> quotient(const Partition& p, int e);  // canonical order
QuotientTuple quotientTuple(const Partition& p, int e);
int weight(const Partition& p, int e);

/// Inverse of (core, quotient): the unique partition with the given e-core
/// and canonically ordered e-quotient.
Partition fromCoreAndQuotient(const Partition& core,
                              std::span<const Partition> quotient, int e);

}  // namespace oddhooks
