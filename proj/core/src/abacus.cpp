#include "oddhooks/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddhooks {

AbacusConfig::AbacusConfig(int runners, int rowBound,
                           std::vector<int> beadPositions)
    : runners_(runners), rowBound_(rowBound), beads_(std::move(beadPositions)) {
  if (runners_ < 1) throw std::invalid_argument("runner count must be positive");
  if (rowBound_ < 0) throw std::invalid_argument("row bound must be non-negative");
  std::sort(beads_.begin(), beads_.end());
  for (std::size_t i = 0; i < beads_.size(); ++i) {
    if (beads_[i] < 0 || beads_[i] >= positionCount()) {
      throw std::invalid_argument("bead position out of bounds");
    }
    if (i > 0 && beads_[i] == beads_[i - 1]) {
      throw std::invalid_argument("bead positions must be distinct");
    }
  }
}

int AbacusConfig::defaultRowBound(const Partition& p, int runners) {
  return (p.size() + runners) / runners + 1;
}

AbacusConfig AbacusConfig::normalized(const Partition& p, int runners) {
  const int a = defaultRowBound(p, runners);
  return forPartition(p, runners, runners * a + p.rows());
}

AbacusConfig AbacusConfig::forPartition(const Partition& p, int runners,
                                        int beadCount) {
  const BetaSet beta = betaSet(p, beadCount);
  const int maxPosition = beta.values.empty() ? 0 : beta.values.front();
  // Rows above the beads plus slack for downward slides of one full row.
  int rowBound = defaultRowBound(p, runners);
  while (runners * (2 * rowBound + 1) <= maxPosition + runners) ++rowBound;
  return AbacusConfig(runners, rowBound, beta.values);
}

bool AbacusConfig::occupied(int position) const {
  return std::binary_search(beads_.begin(), beads_.end(), position);
}

int AbacusConfig::firstGap() const {
  int expected = 0;
  for (int b : beads_) {
    if (b != expected) break;
    ++expected;
  }
  return expected;
}

int AbacusConfig::positionOf(int row, int runner) const {
  if (row < -rowBound_ || row > rowBound_ || runner < 0 || runner >= runners_) {
    throw std::invalid_argument("abacus coordinates out of bounds");
  }
  return runners_ * (row + rowBound_) + runner;
}

int AbacusConfig::rowOf(int position) const {
  return position / runners_ - rowBound_;
}

Partition AbacusConfig::partition() const {
  std::vector<int> parts;
  for (std::size_t i = 0; i < beads_.size(); ++i) {
    // Gaps before the bead = position minus the beads below it.
    const int part = beads_[i] - static_cast<int>(i);
    if (part > 0) parts.push_back(part);
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

AbacusConfig AbacusConfig::withBeadMoved(int from, int to) const {
  if (!occupied(from)) throw std::invalid_argument("no bead at source position");
  if (to < 0 || to >= positionCount()) {
    throw std::invalid_argument("target position out of bounds");
  }
  if (occupied(to)) throw std::invalid_argument("target position is occupied");
  std::vector<int> beads = beads_;
  *std::find(beads.begin(), beads.end(), from) = to;
  return AbacusConfig(runners_, rowBound_, std::move(beads));
}

AbacusConfig AbacusConfig::slideLeft(int beadPosition, int y) const {
  if (y < 1) throw std::invalid_argument("slide length must be positive");
  if (beadPosition - y < 0) {
    throw std::invalid_argument("slide runs off the abacus");
  }
  return withBeadMoved(beadPosition, beadPosition - y);
}

std::vector<Partition> AbacusConfig::runnerPartitions() const {
  std::vector<std::vector<int>> rowIndices(runners_);
  for (int b : beads_) {
    rowIndices[b % runners_].push_back(b / runners_);
  }
  std::vector<Partition> result;
  result.reserve(runners_);
  for (int j = 0; j < runners_; ++j) {
    result.push_back(partitionFromBetaValues(std::move(rowIndices[j])));
  }
  return result;
}

int AbacusConfig::beadsOnRunner(int runner) const {
  int count = 0;
  for (int b : beads_) {
    if (b % runners_ == runner) ++count;
  }
  return count;
}

int AbacusConfig::bottomBeadOnRunner(int runner) const {
  int bottom = -1;
  for (int b : beads_) {
    if (b % runners_ == runner) bottom = b;
  }
  return bottom;
}

std::string AbacusConfig::render() const {
  std::ostringstream os;
  for (int row = -rowBound_; row <= rowBound_; ++row) {
    for (int j = 0; j < runners_; ++j) {
      os << (occupied(positionOf(row, j)) ? "•" : "·");
      if (j + 1 < runners_) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

int PushUpResult::totalSlides() const {
  return std::accumulate(runnerSlides.begin(), runnerSlides.end(), 0);
}

PushUpResult pushUp(const AbacusConfig& a) {
  const int e = a.runners();
  std::vector<std::vector<int>> rowIndices(e);
  for (int b : a.beadPositions()) {
    rowIndices[b % e].push_back(b / e);
  }
  std::vector<int> beads;
  std::vector<int> slides(e, 0);
  beads.reserve(a.beadCount());
  for (int j = 0; j < e; ++j) {
    std::sort(rowIndices[j].begin(), rowIndices[j].end());
    for (std::size_t i = 0; i < rowIndices[j].size(); ++i) {
      slides[j] += rowIndices[j][i] - static_cast<int>(i);
      beads.push_back(e * static_cast<int>(i) + j);
    }
  }
  return PushUpResult{AbacusConfig(e, a.rowBound(), std::move(beads)),
                      std::move(slides)};
}

namespace {

// Bead count divisible by e; with this choice the runner partitions agree
// with the canonically ordered quotient.
int roundedBeadCount(const Partition& p, int e) {
  return e * (p.rows() / e + 1);
}

}  // namespace

Partition core(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("e must be positive");
  return pushUp(AbacusConfig::normalized(p, e)).config.partition();
}

std::vector<Partition> quotient(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("e must be positive");
  return AbacusConfig::forPartition(p, e, roundedBeadCount(p, e))
      .runnerPartitions();
}

QuotientTuple quotientTuple(const Partition& p, int e) {
  return QuotientTuple{AbacusConfig::normalized(p, e).runnerPartitions(),
                       quotient(p, e)};
}

int weight(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("e must be positive");
  return pushUp(AbacusConfig::normalized(p, e)).totalSlides();
}

Partition fromCoreAndQuotient(const Partition& core,
                              std::span<const Partition> quotient, int e) {
  if (e < 1) throw std::invalid_argument("e must be positive");
  if (static_cast<int>(quotient.size()) != e) {
    throw std::invalid_argument("quotient must have one partition per runner");
  }
  if (weight(core, e) != 0) {
    throw std::invalid_argument("core partition still contains an e-hook");
  }
  int maxQuotientRows = 0;
  for (const Partition& q : quotient) {
    maxQuotientRows = std::max(maxQuotientRows, q.rows());
  }
  // Adding e beads raises every runner count by one; pad until each runner
  // can hold its quotient component.
  int beadCount = roundedBeadCount(core, e);
  {
    const AbacusConfig base = AbacusConfig::forPartition(core, e, beadCount);
    int minRunnerBeads = base.beadsOnRunner(0);
    for (int j = 1; j < e; ++j) {
      minRunnerBeads = std::min(minRunnerBeads, base.beadsOnRunner(j));
    }
    if (minRunnerBeads < maxQuotientRows) {
      beadCount += e * (maxQuotientRows - minRunnerBeads);
    }
  }

  // Runner bead counts of the pushed-up core, then each runner re-spread by
  // its quotient component.
  const AbacusConfig coreConfig =
      AbacusConfig::forPartition(core, e, beadCount);
  std::vector<int> beads;
  beads.reserve(beadCount);
  for (int j = 0; j < e; ++j) {
    const BetaSet rows = betaSet(quotient[j], coreConfig.beadsOnRunner(j));
    for (int row : rows.values) {
      beads.push_back(e * row + j);
    }
  }
  int rowBound = 1;
  const int maxBead = *std::max_element(beads.begin(), beads.end());
  while (e * (2 * rowBound + 1) <= maxBead + e) ++rowBound;
  return AbacusConfig(e, rowBound, std::move(beads)).partition();
}

}  // namespace oddhooks
