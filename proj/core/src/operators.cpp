#include "oddhooks/operators.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "oddhooks/abacus.hpp"
#include "oddhooks/tower.hpp"

namespace oddhooks {

namespace {

void requireOdd(const Partition& p) {
  if (!isOdd(p)) {
    throw std::invalid_argument("partition is not odd: " + p.str());
  }
}

void requireFits(const Partition& p, int k) {
  if (k < 0 || k > 30 || (1LL << k) > p.size()) {
    throw std::invalid_argument("no hook of length 2^" + std::to_string(k) +
                                " fits in a partition of " +
                                std::to_string(p.size()));
  }
}

struct OddHookKey {
  std::vector<int> parts;
  int level;
  friend bool operator==(const OddHookKey&, const OddHookKey&) = default;
};

struct OddHookKeyHash {
  std::size_t operator()(const OddHookKey& key) const {
    std::size_t h = static_cast<std::size_t>(key.level) * 0x9e3779b97f4a7c15ULL;
    for (int x : key.parts) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

std::mutex gOddHookMutex;
std::unordered_map<OddHookKey, HookRef, OddHookKeyHash> gOddHookCache;

HookRef uniqueOddHook(const Partition& p, int k) {
  requireOdd(p);
  requireFits(p, k);
  OddHookKey key{p.parts(), k};
  {
    const std::lock_guard<std::mutex> lock(gOddHookMutex);
    if (const auto it = gOddHookCache.find(key); it != gOddHookCache.end()) {
      return it->second;
    }
  }
  HookRef found{};
  int count = 0;
  for (const HookRef& h : hooksOfLength(p, 1 << k)) {
    if (isOdd(removeHook(p, h))) {
      found = h;
      ++count;
    }
  }
  if (count != 1) {
    throw std::logic_error("expected exactly one odd hook, found " +
                           std::to_string(count));
  }
  const std::lock_guard<std::mutex> lock(gOddHookMutex);
  gOddHookCache.emplace(std::move(key), found);
  return found;
}

}  // namespace

std::vector<HookRef> oddHooks(const Partition& p, int e) {
  requireOdd(p);
  std::vector<HookRef> result;
  for (const HookRef& h : hooksOfLength(p, e)) {
    if (isOdd(removeHook(p, h))) result.push_back(h);
  }
  return result;
}

Partition removeOddHook(const Partition& p, int k) {
  return removeHook(p, uniqueOddHook(p, k));
}

Partition removeOddHookClosedForm(const Partition& p, int k) {
  const int n = p.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("size must be a power of two");
  }
  const int w = p.rows() - 1;
  if (p.part(1) + w != n || (w > 0 && p.part(2) != 1)) {
    throw std::invalid_argument("not a hook partition");
  }
  if (k < 0 || (1 << k) >= n) {
    throw std::invalid_argument("level must satisfy 2^k < |p|");
  }
  std::vector<int> parts;
  if (w & (1 << k)) {
    // The leg carries the digit: shorten the leg.
    if (p.part(1) > 0) parts.push_back(p.part(1));
    parts.insert(parts.end(), w - (1 << k), 1);
  } else {
    const int newArm = p.part(1) - (1 << k);
    if (newArm > 0) parts.push_back(newArm);
    parts.insert(parts.end(), w, 1);
  }
  return Partition(std::move(parts));
}

OddHookData oddHookPosition(const Partition& p, int k) {
  const HookRef h = uniqueOddHook(p, k);
  return OddHookData{h.row, h.col, firstColumnHookLengths(p)[h.row - 1]};
}

namespace {

bool findChain(const Partition& p, const std::vector<int>& exponents,
               std::size_t index, std::vector<Partition>& chain,
               std::vector<Partition>& found) {
  if (index == exponents.size()) {
    found = chain;
    return true;
  }
  bool any = false;
  for (const HookRef& h : hooksOfLength(p, 1 << exponents[index])) {
    Partition next = removeHook(p, h);
    chain.push_back(next);
    std::vector<Partition> sub;
    if (findChain(next, exponents, index + 1, chain, sub)) {
      if (any && sub != found) {
        throw std::logic_error("hook chain is not unique");
      }
      found = std::move(sub);
      any = true;
    }
    chain.pop_back();
  }
  return any;
}

}  // namespace

std::optional<std::vector<Partition>> binaryHookChain(const Partition& p) {
  const std::vector<int> exponents = binaryExponents(p.size());
  std::vector<Partition> chain = {p};
  std::vector<Partition> found;
  if (!findChain(p, exponents, 0, chain, found)) return std::nullopt;
  return found;
}

std::pair<int, Partition> removalComponent(const Partition& p, int k, int j) {
  requireOdd(p);
  if (k < 0 || j < k) throw std::invalid_argument("requires 0 <= k <= j");
  if ((1 << j) > p.size()) {
    throw std::invalid_argument("2^j exceeds the partition size");
  }
  const std::vector<int> exponents = binaryExponents(p.size());
  int chosen = -1;
  for (int a : exponents) {
    if (a >= j) chosen = a;  // exponents are decreasing: keep the smallest >= j
  }
  const unsigned long long digit = 1ULL << (chosen - k);
  const QuotientTower qt = quotientTower(p, k);
  const std::vector<Partition>& row = qt.rows[k];
  int index = -1;
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (static_cast<unsigned long long>(row[s].size()) & digit) {
      if (index >= 0) throw std::logic_error("removal component is not unique");
      index = static_cast<int>(s);
    }
  }
  if (index < 0) throw std::logic_error("removal component not found");
  return {index, row[index]};
}

bool doubleRemovalMatches(const Partition& p, int k) {
  requireOdd(p);
  if (k < 0 || (1 << (k + 1)) > p.size()) {
    throw std::invalid_argument("requires 2^(k+1) <= |p|");
  }
  return removeOddHook(removeOddHook(p, k), k) == removeOddHook(p, k + 1);
}

bool removalsCommute(const Partition& p, int k, int l) {
  requireOdd(p);
  if (k < 0 || l <= k) throw std::invalid_argument("requires 0 <= k < l");
  if ((1 << k) + (1 << l) > p.size()) {
    throw std::invalid_argument("requires 2^k + 2^l <= |p|");
  }
  return removeOddHook(removeOddHook(p, l), k) ==
         removeOddHook(removeOddHook(p, k), l);
}

const char* str(HookAlignment alignment) {
  switch (alignment) {
    case HookAlignment::SameHand:
      return "1+";
    case HookAlignment::SameFoot:
      return "1-";
    case HookAlignment::Disjoint:
      return "2";
  }
  return "?";
}

HookAlignment hookAlignment(const Partition& p, int l) {
  const HookRef unit = uniqueOddHook(p, 0);
  const HookRef big = uniqueOddHook(p, l);
  if (unit.row == big.row) return HookAlignment::SameHand;
  if (unit.col == big.col) return HookAlignment::SameFoot;
  return HookAlignment::Disjoint;
}

std::vector<Partition> extensions(const Partition& g, int t) {
  const int e = 1 << t;
  std::vector<Partition> result;
  result.reserve(e);
  for (int runner = 0; runner < e; ++runner) {
    result.push_back(extensionOnRunner(g, t, runner));
  }
  return result;
}

Partition extensionOnRunner(const Partition& g, int t, int runner) {
  requireOdd(g);
  const int e = 1 << t;
  if (g.size() >= e) {
    throw std::invalid_argument("extension requires |g| < 2^t");
  }
  if (runner < 0 || runner >= e) {
    throw std::invalid_argument("runner out of range");
  }
  const AbacusConfig config = AbacusConfig::normalized(g, e);
  const int bottom = config.bottomBeadOnRunner(runner);
  return config.withBeadMoved(bottom, bottom + e).partition();
}

}  // namespace oddhooks
