#include "oddhooks/tower.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "oddhooks/operators.hpp"

namespace oddhooks {

namespace {

// Runner partitions of the 2-quotient in canonical order, computed from an
// even bead count. Each quotient part equals the slide amount of its bead,
// so the halves come out of the beta scan directly.
std::pair<std::vector<int>, std::vector<int>> quotientHalves(
    const std::vector<int>& parts) {
  const int rows = static_cast<int>(parts.size());
  const int beads = rows + (rows & 1);
  std::pair<std::vector<int>, std::vector<int>> halves;
  int seen[2] = {0, 0};
  for (int i = beads; i >= 1; --i) {
    const int part = i <= rows ? parts[i - 1] : 0;
    const int beta = part + beads - i;
    const int runner = beta & 1;
    const int value = (beta >> 1) - seen[runner]++;
    if (value > 0) {
      (runner == 0 ? halves.first : halves.second).push_back(value);
    }
  }
  std::reverse(halves.first.begin(), halves.first.end());
  std::reverse(halves.second.begin(), halves.second.end());
  return halves;
}

int partsSum(const std::vector<int>& parts) {
  int sum = 0;
  for (int part : parts) sum += part;
  return sum;
}

bool isOddUncached(const std::vector<int>& parts) {
  std::vector<std::vector<int>> row = {parts};
  int remaining = partsSum(parts);
  while (remaining > 0) {
    int rowCoreSize = remaining;
    std::vector<std::vector<int>> next;
    next.reserve(row.size() * 2);
    int nextRemaining = 0;
    for (const std::vector<int>& comp : row) {
      auto [left, right] = quotientHalves(comp);
      nextRemaining += partsSum(left) + partsSum(right);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    rowCoreSize -= 2 * nextRemaining;
    if (rowCoreSize > 1) return false;
    remaining = nextRemaining;
    row = std::move(next);
  }
  return true;
}

struct PartsHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

std::mutex gOddMutex;
std::unordered_map<std::vector<int>, bool, PartsHash> gOddCache;

std::mutex gEnumMutex;
std::unordered_map<int, std::vector<Partition>> gEnumCache;

}  // namespace

QuotientTower quotientTower(const Partition& p, int depth) {
  if (depth < 0) throw std::invalid_argument("tower depth must be non-negative");
  QuotientTower tower;
  tower.rows.reserve(depth + 1);
  tower.rows.push_back({p});
  for (int k = 0; k < depth; ++k) {
    std::vector<Partition> next;
    next.reserve(tower.rows[k].size() * 2);
    for (const Partition& comp : tower.rows[k]) {
      auto [left, right] = quotientHalves(comp.parts());
      next.emplace_back(std::move(left));
      next.emplace_back(std::move(right));
    }
    tower.rows.push_back(std::move(next));
  }
  return tower;
}

CoreTower coreTower(const Partition& p, int depth) {
  const QuotientTower qt = quotientTower(p, depth);
  CoreTower ct;
  ct.rows.reserve(qt.rows.size());
  ct.rowSizes.reserve(qt.rows.size());
  for (const auto& row : qt.rows) {
    std::vector<Partition> cores;
    cores.reserve(row.size());
    int total = 0;
    for (const Partition& comp : row) {
      cores.push_back(core(comp, 2));
      total += cores.back().size();
    }
    ct.rows.push_back(std::move(cores));
    ct.rowSizes.push_back(total);
  }
  return ct;
}

TowerSection towerSection(const Partition& p, int k) {
  if (k < 0) throw std::invalid_argument("tower depth must be non-negative");
  TowerSection section;
  section.k = k;
  if (k > 0) {
    const CoreTower ct = coreTower(p, k - 1);
    section.coreRows = ct.rows;
  }
  section.quotientRow = quotientTower(p, k).rows.back();
  return section;
}

bool isOdd(const Partition& p) {
  {
    const std::lock_guard<std::mutex> lock(gOddMutex);
    if (const auto it = gOddCache.find(p.parts()); it != gOddCache.end()) {
      return it->second;
    }
  }
  const bool result = isOddUncached(p.parts());
  const std::lock_guard<std::mutex> lock(gOddMutex);
  gOddCache.emplace(p.parts(), result);
  return result;
}

std::vector<int> levelSizes(const Partition& p, int k) {
  const QuotientTower qt = quotientTower(p, k);
  std::vector<int> sizes;
  sizes.reserve(qt.rows[k].size());
  for (const Partition& comp : qt.rows[k]) {
    sizes.push_back(comp.size());
  }
  return sizes;
}

std::vector<Partition> enumerateOdd(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  {
    const std::lock_guard<std::mutex> lock(gEnumMutex);
    if (const auto it = gEnumCache.find(n); it != gEnumCache.end()) {
      return it->second;
    }
  }
  std::vector<Partition> current = {Partition{}};
  const std::vector<int> exponents = binaryExponents(n);
  // Build upward through the binary digits, smallest first, so each step
  // extends partitions strictly smaller than the hook being added.
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    std::vector<Partition> next;
    next.reserve(current.size() << *it);
    for (const Partition& gamma : current) {
      for (Partition& ext : extensions(gamma, *it)) {
        next.push_back(std::move(ext));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), std::greater<>());
  const std::lock_guard<std::mutex> lock(gEnumMutex);
  return gEnumCache.emplace(n, std::move(current)).first->second;
}

std::vector<Partition> enumerateOddWithLevelSizes(
    int n, int k, const std::vector<int>& sizes) {
  std::vector<Partition> result;
  for (const Partition& p : enumerateOdd(n)) {
    if (levelSizes(p, k) == sizes) result.push_back(p);
  }
  return result;
}

bool twoDisjoint(unsigned long long a, unsigned long long b) {
  return (a & b) == 0;
}

std::vector<unsigned long long> binaryDigits(unsigned long long n) {
  std::vector<unsigned long long> digits;
  for (int e = 63; e >= 0; --e) {
    if (n & (1ULL << e)) digits.push_back(1ULL << e);
  }
  return digits;
}

std::vector<int> binaryExponents(unsigned long long n) {
  std::vector<int> exponents;
  for (int e = 63; e >= 0; --e) {
    if (n & (1ULL << e)) exponents.push_back(e);
  }
  return exponents;
}

int bitLength(unsigned long long n) {
  int bits = 0;
  while (n != 0) {
    ++bits;
    n >>= 1;
  }
  return bits;
}

int towerIndexForQuotientIndex(int k, int quotientIndex) {
  int reversed = 0;
  for (int b = 0; b < k; ++b) {
    if (quotientIndex & (1 << b)) reversed |= 1 << (k - 1 - b);
  }
  return reversed;
}

}  // namespace oddhooks
