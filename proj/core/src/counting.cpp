#include "oddhooks/counting.hpp"

#include <stdexcept>

#include "oddhooks/tower.hpp"

namespace oddhooks {

namespace {

BigInt pow2(long long exponent) { return BigInt(1) << exponent; }

// Exponent sum for a subset of 1-based indices given as a bitmask.
long long exponentSum(const DigitProfile& profile, int k,
                      unsigned long long mask) {
  long long sum = 0;
  for (int j = 1; j <= profile.count(); ++j) {
    if (mask & (1ULL << (j - 1))) sum += profile.exponents[j - 1] - k;
  }
  return sum;
}

unsigned long long digitSum(const DigitProfile& profile, int k,
                            unsigned long long mask) {
  unsigned long long sum = 0;
  for (int j = 1; j <= profile.count(); ++j) {
    if (mask & (1ULL << (j - 1))) {
      sum += 1ULL << (profile.exponents[j - 1] - k);
    }
  }
  return sum;
}

constexpr int kMaxSubsetBits = 24;

}  // namespace

DigitProfile DigitProfile::of(unsigned long long n) {
  return DigitProfile{n, binaryExponents(n)};
}

int DigitProfile::maxIndexAtLeast(int bound) const {
  int index = 0;
  for (int j = 1; j <= count(); ++j) {
    if (exponents[j - 1] >= bound) index = j;
  }
  return index;
}

unsigned long long DigitProfile::upperPart(int q) const {
  unsigned long long sum = 0;
  for (int j = 1; j <= q && j <= count(); ++j) {
    sum += 1ULL << exponents[j - 1];
  }
  return sum;
}

BigInt DigitProfile::lowerProduct(int q) const {
  long long exponentTotal = 0;
  for (int j = q + 1; j <= count(); ++j) {
    exponentTotal += exponents[j - 1];
  }
  return pow2(exponentTotal);
}

BigInt oddCount(unsigned long long n) {
  long long exponentTotal = 0;
  for (int a : binaryExponents(n)) exponentTotal += a;
  return pow2(exponentTotal);
}

BigInt doubleMatchCountBase(unsigned long long n) {
  if (n < 2) throw std::invalid_argument("count requires n >= 2");
  const unsigned long long epsilon = n & 1ULL;
  const std::vector<int> exponents = binaryExponents(n - epsilon);
  const int lastExponent = exponents.back();
  BigInt result;
  if (lastExponent == 1) {
    result = 2;  // both 2 and 3
  } else {
    result = epsilon ? BigInt(4) : pow2(lastExponent - 1);
  }
  for (std::size_t j = 0; j + 1 < exponents.size(); ++j) {
    result *= pow2(exponents[j]) - 2;
  }
  return result;
}

BigInt doubleMatchWeight(const DigitProfile& profile, int k,
                         unsigned long long maskJ) {
  const int q = profile.maxIndexAtLeast(k);
  const unsigned long long maskI = (q >= 64) ? ~0ULL : ((1ULL << q) - 1);
  const unsigned long long outside = maskI & ~maskJ;
  BigInt weight = pow2(exponentSum(profile, k, outside));
  const int outsideCount = static_cast<int>(__builtin_popcountll(outside));
  BigInt factor = pow2(k) - 1;
  for (int i = 0; i < outsideCount; ++i) weight *= factor;
  return weight * doubleMatchCountBase(digitSum(profile, k, maskJ));
}

BigInt doubleMatchCount(unsigned long long n, int k) {
  if (k < 0 || k > 62 || (n >> (k + 1)) == 0) {
    throw std::invalid_argument("count requires 2^(k+1) <= n");
  }
  const DigitProfile profile = DigitProfile::of(n);
  const int q = profile.maxIndexAtLeast(k);
  const int p = profile.maxIndexAtLeast(k + 1);
  if (q > kMaxSubsetBits) {
    throw std::invalid_argument("too many binary digits for the subset sum");
  }
  const unsigned long long required =
      (1ULL << (p - 1)) | (1ULL << (q - 1));
  BigInt sum = 0;
  for (unsigned long long mask = 0; mask < (1ULL << q); ++mask) {
    if ((mask & required) != required) continue;
    sum += doubleMatchWeight(profile, k, mask);
  }
  return profile.lowerProduct(q) * pow2(k) * sum;
}

namespace {

BigInt baseNonCommuteCount(unsigned long long n, int l) {
  return oddCount(n) - baseCommuteCount(n, l);
}

}  // namespace

BigInt nonCommuteWeight(const DigitProfile& profile, int k, int l,
                        unsigned long long maskJ) {
  const int q = profile.maxIndexAtLeast(k);
  const unsigned long long maskI = (q >= 64) ? ~0ULL : ((1ULL << q) - 1);
  const unsigned long long outside = maskI & ~maskJ;
  BigInt weight = pow2(exponentSum(profile, k, outside));
  const int outsideCount = static_cast<int>(__builtin_popcountll(outside));
  BigInt factor = pow2(k) - 1;
  for (int i = 0; i < outsideCount; ++i) weight *= factor;
  return weight * baseNonCommuteCount(digitSum(profile, k, maskJ), l - k);
}

BigInt nonCommuteCount(unsigned long long n, int k, int l) {
  if (k < 0 || l <= k || l > 62) {
    throw std::invalid_argument("requires 0 <= k < l");
  }
  if ((n >> l) == 0 || (1ULL << k) + (1ULL << l) > n) {
    throw std::invalid_argument("count requires 2^k + 2^l <= n");
  }
  const DigitProfile profile = DigitProfile::of(n);
  const int t = profile.exponents.front();
  const unsigned long long m = n - (1ULL << t);

  // Degenerate windows in which every odd partition commutes.
  if (m < (1ULL << k) || l == t || (n == 6 && k == 0 && l == 1)) return 0;
  if (k == 0) return baseNonCommuteCount(n, l);

  const int q = profile.maxIndexAtLeast(k);
  const int p = profile.maxIndexAtLeast(l);
  if (q > kMaxSubsetBits) {
    throw std::invalid_argument("too many binary digits for the subset sum");
  }
  const int ap = profile.exponents[p - 1];
  const int aq = profile.exponents[q - 1];

  if (ap > aq || ap > l) {
    const unsigned long long required =
        (1ULL << (p - 1)) | (1ULL << (q - 1));
    BigInt sum = 0;
    for (unsigned long long mask = 0; mask < (1ULL << q); ++mask) {
      if ((mask & required) != required) continue;
      sum += nonCommuteWeight(profile, k, l, mask);
    }
    return profile.lowerProduct(q) * pow2(k) * sum;
  }

  // ap == aq == l; here p == q and p >= 2.
  if (p < 2) throw std::logic_error("unexpected digit layout");
  const unsigned long long required =
      (1ULL << (p - 2)) | (1ULL << (p - 1));
  BigInt sum = 0;
  for (unsigned long long mask = 0; mask < (1ULL << q); ++mask) {
    if ((mask & required) != required) continue;
    sum += nonCommuteWeight(profile, k, l, mask);
  }
  BigInt correction = pow2(static_cast<long long>(k) * (q - 1)) *
                      (pow2(k) - 1) *
                      pow2(exponentSum(profile, k, (1ULL << q) - 1));
  return profile.lowerProduct(q) * (pow2(k) * sum + correction);
}

BigInt commuteCount(unsigned long long n, int k, int l) {
  return oddCount(n) - nonCommuteCount(n, k, l);
}

BigInt baseCommuteCount(unsigned long long n, int l) {
  if (l < 1 || l > 62 || (n >> l) == 0) {
    throw std::invalid_argument("count requires 1 <= l and 2^l <= n");
  }
  if (n == (1ULL << l)) return oddCount(n);

  const std::vector<int> exponents = binaryExponents(n);
  const int r = static_cast<int>(exponents.size());
  const int last = exponents.back();

  if (last > l) {
    BigInt shifted = 1;
    BigInt full = 1;
    for (int j = 0; j + 1 < r; ++j) {
      shifted *= pow2(exponents[j]) - 3;
      full *= pow2(exponents[j]);
    }
    return pow2(last - 1) * (shifted + full);
  }

  if (last == l) {
    BigInt shifted = 1;
    BigInt full = 1;
    for (int j = 0; j + 2 < r; ++j) {
      shifted *= pow2(exponents[j]) - 3;
      full *= pow2(exponents[j]);
    }
    return pow2(l + 1) * (full + shifted);
  }

  // last < l: split at the smallest digit still >= l.
  int p = 0;
  for (int j = 1; j <= r; ++j) {
    if (exponents[j - 1] >= l) p = j;
  }
  BigInt upperFull = 1;
  BigInt upperShifted = 1;
  for (int j = 0; j + 1 < p; ++j) {
    upperFull *= pow2(exponents[j]);
    upperShifted *= pow2(exponents[j]) - 3;
  }
  BigInt lowerFull = 1;
  for (int j = p; j < r; ++j) {
    lowerFull *= pow2(exponents[j]);
  }
  return ((pow2(l) - 2) * pow2(exponents[p - 1] - l) * upperFull +
          2 * upperShifted) *
         lowerFull;
}

AlignmentCounts commuteAlignmentCounts(unsigned long long n, int l) {
  if (l < 1 || l > 62 || (n >> l) == 0) {
    throw std::invalid_argument("counts require 1 <= l and 2^l <= n");
  }
  const std::vector<int> exponents = binaryExponents(n);
  const int t = exponents.front();

  if (exponents.size() == 1) {
    if (l == t) return AlignmentCounts{pow2(t - 1), pow2(t - 1), 0};
    return AlignmentCounts{pow2(t - 2), pow2(t - 2), pow2(t - 1)};
  }

  const unsigned long long m = n - (1ULL << t);
  if (m >= (1ULL << l) + 1) {
    const AlignmentCounts inner = commuteAlignmentCounts(m, l);
    const BigInt oneFactor = pow2(t) - 3;
    return AlignmentCounts{inner.sameHand * oneFactor,
                           inner.sameFoot * oneFactor,
                           inner.disjoint * pow2(t)};
  }
  if (m == (1ULL << l)) {
    return AlignmentCounts{pow2(l), pow2(l), pow2(l + 1)};
  }
  // 1 <= m < 2^l: one shared-hand and one shared-foot extension per odd
  // core, the rest spread over the remaining runners.
  const BigInt cores = oddCount(m);
  return AlignmentCounts{cores, cores, cores * (pow2(l) - 2) * pow2(t - l)};
}

}  // namespace oddhooks
