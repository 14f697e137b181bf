#include "oddhooks/characters.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "oddhooks/operators.hpp"
#include "oddhooks/tower.hpp"

namespace oddhooks {

CycleType::CycleType(std::vector<int> cycles) : parts_(std::move(cycles)) {
  for (int c : parts_) {
    if (c < 1) throw std::invalid_argument("cycle lengths must be positive");
    total_ += c;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string CycleType::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycleType& c) {
  return os << c.str();
}

CycleType parseCycleType(std::string_view text) {
  // Same comma/exponent grammar as partitions, but any order is accepted.
  std::string sorted;
  std::vector<int> cycles;
  std::size_t start = 0;
  const std::string whole(text);
  if (whole.empty() || whole == "0") return CycleType{};
  while (start <= whole.size()) {
    std::size_t comma = whole.find(',', start);
    if (comma == std::string_view::npos) comma = whole.size();
    const std::string token = whole.substr(start, comma - start);
    // Reuse the partition parser on the single token.
    const Partition single = parsePartition(token);
    if (single.empty()) {
      throw ParseError("cycle lengths must be positive in token '" + token +
                           "'",
                       token);
    }
    for (int v : single.parts()) cycles.push_back(v);
    if (comma == whole.size()) break;
    start = comma + 1;
  }
  return CycleType(std::move(cycles));
}

namespace {

using BetaValues = std::vector<int>;  // kept sorted ascending

struct MemoKey {
  std::vector<int> parts;
  std::size_t cycleIndex;
  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

BigInt mnRecurse(const BetaValues& beta, const std::vector<int>& cycles,
                 std::size_t index, std::map<MemoKey, BigInt>& memo) {
  if (index == cycles.size()) return 1;

  std::vector<int> parts;
  {
    const int m = static_cast<int>(beta.size());
    for (int i = 0; i < m; ++i) {
      const int part = beta[i] - i;
      if (part > 0) parts.push_back(part);
    }
    std::reverse(parts.begin(), parts.end());
  }
  MemoKey key{std::move(parts), index};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int e = cycles[index];
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < e) continue;
    const int target = b - e;
    if (std::binary_search(beta.begin(), beta.end(), target)) continue;
    // Leg length = beads strictly between the target and the moved bead.
    const auto lo = std::upper_bound(beta.begin(), beta.end(), target);
    const int leg = static_cast<int>((beta.begin() + i) - lo);
    BetaValues next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end());
    const BigInt sub = mnRecurse(next, cycles, index + 1, memo);
    total += (leg % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt characterValue(const Partition& p, const CycleType& c, int maxN) {
  if (p.size() != c.total()) {
    throw std::invalid_argument("partition size and cycle type total differ");
  }
  if (p.size() > maxN) {
    throw std::invalid_argument("evaluation capped at n = " +
                                std::to_string(maxN));
  }
  BetaValues beta = betaSet(p, p.rows()).values;
  std::sort(beta.begin(), beta.end());
  std::map<MemoKey, BigInt> memo;
  return mnRecurse(beta, c.parts(), 0, memo);
}

BigInt degree(const Partition& p) {
  BigInt numerator = 1;
  for (int i = 2; i <= p.size(); ++i) numerator *= i;
  for (const HookRef& h : hooks(p)) numerator /= h.length;
  return numerator;
}

CycleType binaryCycleType(unsigned long long n) {
  std::vector<int> cycles;
  for (unsigned long long d : binaryDigits(n)) {
    cycles.push_back(static_cast<int>(d));
  }
  return CycleType(std::move(cycles));
}

CycleType splitCycleType(unsigned long long n, int i, int k) {
  const std::vector<int> exponents = binaryExponents(n);
  if (i < 1 || i > static_cast<int>(exponents.size())) {
    throw std::invalid_argument("digit index out of range");
  }
  const int a = exponents[i - 1];
  if (a < 1 || k != a - 1) {
    throw std::invalid_argument("split requires k = a_i - 1 with a_i >= 1");
  }
  std::vector<int> cycles;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (static_cast<int>(j) == i - 1) {
      cycles.push_back(1 << k);
      cycles.push_back(1 << k);
    } else {
      cycles.push_back(1 << exponents[j]);
    }
  }
  return CycleType(std::move(cycles));
}

CycleType repeatedCycleType(unsigned long long n, int k) {
  if (k < 0 || k > 62 || (n >> k) == 0) {
    throw std::invalid_argument("requires 2^k <= n");
  }
  const unsigned long long w = n >> k;
  const unsigned long long m = n - (w << k);
  std::vector<int> cycles(w, 1 << k);
  for (unsigned long long d : binaryDigits(m)) {
    cycles.push_back(static_cast<int>(d));
  }
  return CycleType(std::move(cycles));
}

bool unitValueCriterion(const Partition& p, int k) {
  if (!isOdd(p)) throw std::invalid_argument("partition is not odd");
  if (k < 0 || (1 << k) > p.size()) {
    throw std::invalid_argument("requires 2^k <= |p|");
  }
  const int w = p.size() >> k;
  const Partition row({w});
  const Partition column(std::vector<int>(w, 1));
  const QuotientTower qt = quotientTower(p, k);
  for (const Partition& comp : qt.rows[k]) {
    if (comp == row || comp == column) return true;
  }
  return false;
}

std::pair<bool, bool> doubleMatchCharacterCheck(const Partition& p, int k) {
  if (!isOdd(p)) throw std::invalid_argument("partition is not odd");
  if (k < 0 || (1 << (k + 1)) > p.size()) {
    throw std::invalid_argument("requires 2^(k+1) <= |p|");
  }
  const int w = p.size() >> k;
  if (w > 4) {
    throw std::invalid_argument("hypothesis violated: floor(n/2^k) > 4");
  }
  const bool lhs = doubleRemovalMatches(p, k);
  const BigInt value =
      characterValue(p, repeatedCycleType(p.size(), k));
  const bool rhs = boost::multiprecision::abs(value) == 1;
  return {lhs, rhs};
}

}  // namespace oddhooks
