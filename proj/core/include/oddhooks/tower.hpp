#pragma once

#include <vector>

#include "oddhooks/abacus.hpp"
#include "oddhooks/partition.hpp"

namespace oddhooks {

/// Iterated 2-quotient decomposition: row k holds 2^k partitions and the
/// quotient of row-k entry i lands in row k+1 at entries 2i and 2i+1
/// (0-based).
struct QuotientTower {
  std::vector<std::vector<Partition>> rows;
};

/// Row k holds the 2-cores of the quotient-tower row k, in the same order;
/// rowSizes[k] is the total number of nodes in row k.
struct CoreTower {
  std::vector<std::vector<Partition>> rows;
  std::vector<int> rowSizes;
};

/// Core-tower rows 0..k-1 together with quotient-tower row k. Determines the
/// partition uniquely.
struct TowerSection {
  std::vector<std::vector<Partition>> coreRows;
  std::vector<Partition> quotientRow;
  int k = 0;
};

QuotientTower quotientTower(const Partition& p, int depth);
CoreTower coreTower(const Partition& p, int depth);
TowerSection towerSection(const Partition& p, int k);

/// True when the character degree of p is odd: every core-tower row above
/// the vanishing depth carries at most one node.
bool isOdd(const Partition& p);

/// Sizes of the 2^k partitions in quotient-tower row k. For odd partitions
/// the nonzero entries are pairwise 2-disjoint and sum to floor(n / 2^k).
std::vector<int> levelSizes(const Partition& p, int k);

/// All partitions of n with odd character degree, generated by repeated
/// hook extension along the binary digits of n, sorted descending.
std::vector<Partition> enumerateOdd(int n);
std::vector<Partition> enumerateOddWithLevelSizes(int n, int k,
                                                  const std::vector<int>& sizes);

bool twoDisjoint(unsigned long long a, unsigned long long b);

/// Binary digits of n as powers of two, in decreasing order.
std::vector<unsigned long long> binaryDigits(unsigned long long n);
/// The exponents of the binary digits, in decreasing order.
std::vector<int> binaryExponents(unsigned long long n);
/// Number of binary digits needed for n (0 for n == 0).
int bitLength(unsigned long long n);

/// Quotient-tower row k lists the same partitions as the 2^k-quotient, with
/// the component at quotient position j sitting at the bit-reversed tower
/// position.
int towerIndexForQuotientIndex(int k, int quotientIndex);

}  // namespace oddhooks
