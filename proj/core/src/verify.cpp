#include "oddhooks/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "oddhooks/abacus.hpp"
#include "oddhooks/characters.hpp"
#include "oddhooks/operators.hpp"
#include "oddhooks/tower.hpp"

namespace oddhooks {

namespace {

using nlohmann::json;

std::string str(const BigInt& value) { return value.str(); }

ClaimOutcome okOr(std::string failure) {
  const bool pass = failure.empty();
  return ClaimOutcome{"ok", pass ? "ok" : std::move(failure), pass};
}

ClaimOutcome equals(std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return ClaimOutcome{std::move(expected), std::move(actual), pass};
}

std::string joinParams(
    const std::vector<std::pair<std::string, long long>>& params) {
  std::ostringstream os;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) os << ',';
    os << params[i].first << '=' << params[i].second;
  }
  return os.str();
}

std::vector<Partition> allPartitions(int n) {
  std::vector<Partition> result;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, maxPart); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return result;
}

// Cycle types of n whose parts are all powers of two.
std::vector<CycleType> twoPowerClasses(int n) {
  std::vector<CycleType> result;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int maxPower) -> void {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int p = maxPower; p >= 1; p >>= 1) {
      if (p > remaining) continue;
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  int top = 1;
  while (top * 2 <= n) top *= 2;
  if (n > 0) rec(rec, n, top);
  return result;
}

BigInt multinomial(int total, const std::vector<int>& sizes) {
  BigInt value = 1;
  for (int i = 2; i <= total; ++i) value *= i;
  for (int s : sizes) {
    for (int i = 2; i <= s; ++i) value /= i;
  }
  return value;
}

// Commuting test with the small-size convention: partitions of at most 2^l
// nodes count as commuting.
bool extendedCommute(const Partition& p, int l) {
  if (p.size() <= (1 << l)) return true;
  return removalsCommute(p, 0, l);
}

}  // namespace

BigInt bruteDoubleMatchCount(int n, int k) {
  BigInt count = 0;
  for (const Partition& p : enumerateOdd(n)) {
    if (doubleRemovalMatches(p, k)) ++count;
  }
  return count;
}

BigInt bruteCommuteCount(int n, int k, int l) {
  BigInt count = 0;
  for (const Partition& p : enumerateOdd(n)) {
    if (removalsCommute(p, k, l)) ++count;
  }
  return count;
}

BigInt bruteNonCommuteCount(int n, int k, int l) {
  BigInt count = 0;
  for (const Partition& p : enumerateOdd(n)) {
    if (!removalsCommute(p, k, l)) ++count;
  }
  return count;
}

AlignmentCounts bruteCommuteAlignmentCounts(int n, int l) {
  AlignmentCounts counts{0, 0, 0};
  const bool testable = n > (1 << l);
  for (const Partition& p : enumerateOdd(n)) {
    if (testable && !removalsCommute(p, 0, l)) continue;
    switch (hookAlignment(p, l)) {
      case HookAlignment::SameHand:
        ++counts.sameHand;
        break;
      case HookAlignment::SameFoot:
        ++counts.sameFoot;
        break;
      case HookAlignment::Disjoint:
        ++counts.disjoint;
        break;
    }
  }
  return counts;
}

const char* str(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::GoldenCount:
      return "golden-count";
    case ClaimKind::FormulaVsOracle:
      return "formula-vs-oracle";
    case ClaimKind::OddnessEquivalence:
      return "oddness-equivalence";
    case ClaimKind::OddCountLaw:
      return "odd-count-law";
    case ClaimKind::CharacterDoubleMatch:
      return "character-double-match";
    case ClaimKind::CharacterUnitCount:
      return "character-unit-count";
    case ClaimKind::StructureLemma:
      return "structure-lemma";
    case ClaimKind::ReductionLemma:
      return "reduction-lemma";
    case ClaimKind::Consistency:
      return "consistency";
  }
  return "unknown";
}

namespace {

ClaimKind kindFromString(const std::string& text) {
  for (ClaimKind kind :
       {ClaimKind::GoldenCount, ClaimKind::FormulaVsOracle,
        ClaimKind::OddnessEquivalence, ClaimKind::OddCountLaw,
        ClaimKind::CharacterDoubleMatch, ClaimKind::CharacterUnitCount,
        ClaimKind::StructureLemma, ClaimKind::ReductionLemma,
        ClaimKind::Consistency}) {
    if (text == str(kind)) return kind;
  }
  return ClaimKind::Consistency;
}

struct Registry {
  std::vector<Claim>& claims;
  const VerifyOptions& options;

  bool wantSuite(const std::string& suite) const {
    return options.suite == "all" || options.suite == suite;
  }

  void add(std::string family, std::string suite, ClaimKind kind,
           std::vector<std::pair<std::string, long long>> params,
           std::function<ClaimOutcome()> run) {
    if (!wantSuite(suite)) return;
    std::string id = std::move(family);
    if (!params.empty()) {
      id += '/';
      id += joinParams(params);
    }
    claims.push_back(Claim{std::move(id), std::move(suite), kind,
                           std::move(params), std::move(run)});
  }
};

// ---------------------------------------------------------------------------
// counts suite

void addGoldenClaims(Registry& reg) {
  struct G0Case {
    int n;
    long long value;
  };
  static constexpr G0Case kG0[] = {{2, 2},   {3, 2},   {6, 4},  {4, 2},
                                   {8, 4},   {16, 8},  {32, 16}, {64, 32},
                                   {5, 4},   {9, 4},   {17, 4},  {33, 4}};
  for (const auto& c : kG0) {
    reg.add("golden/G0-formula", "counts", ClaimKind::GoldenCount,
            {{"n", c.n}}, [c] {
              return equals(std::to_string(c.value),
                            str(doubleMatchCountBase(c.n)));
            });
    reg.add("golden/G0-oracle", "counts", ClaimKind::GoldenCount, {{"n", c.n}},
            [c] {
              return equals(std::to_string(c.value),
                            str(bruteDoubleMatchCount(c.n, 0)));
            });
  }

  reg.add("golden/Gk-formula", "counts", ClaimKind::GoldenCount,
          {{"n", 24}, {"k", 2}},
          [] { return equals("112", str(doubleMatchCount(24, 2))); });
  reg.add("golden/Gk-oracle", "counts", ClaimKind::GoldenCount,
          {{"n", 24}, {"k", 2}},
          [] { return equals("112", str(bruteDoubleMatchCount(24, 2))); });

  struct FCase {
    int n, k, l;
    long long value;
  };
  static constexpr FCase kF[] = {
      {6, 0, 1, 0}, {9, 0, 1, 6}, {24, 2, 3, 96}, {36, 2, 3, 24}};
  for (const auto& c : kF) {
    reg.add("golden/F-formula", "counts", ClaimKind::GoldenCount,
            {{"n", c.n}, {"k", c.k}, {"l", c.l}}, [c] {
              return equals(std::to_string(c.value),
                            str(nonCommuteCount(c.n, c.k, c.l)));
            });
    reg.add("golden/F-oracle", "counts", ClaimKind::GoldenCount,
            {{"n", c.n}, {"k", c.k}, {"l", c.l}}, [c] {
              return equals(std::to_string(c.value),
                            str(bruteNonCommuteCount(c.n, c.k, c.l)));
            });
  }

  struct TCase {
    int l, t;
  };
  static constexpr TCase kT[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  for (const auto& c : kT) {
    const int n = (1 << c.t) + (1 << c.l);
    const long long value = 1LL << (c.l + 2);
    reg.add("golden/T0l-formula", "counts", ClaimKind::GoldenCount,
            {{"n", n}, {"l", c.l}}, [n, c, value] {
              return equals(std::to_string(value),
                            str(baseCommuteCount(n, c.l)));
            });
    reg.add("golden/T0l-oracle", "counts", ClaimKind::GoldenCount,
            {{"n", n}, {"l", c.l}}, [n, c, value] {
              return equals(std::to_string(value),
                            str(bruteCommuteCount(n, 0, c.l)));
            });
  }
}

void addCountOracleClaims(Registry& reg) {
  for (int n = 2; n <= reg.options.maxN; ++n) {
    for (int k = 0; (1 << (k + 1)) <= n; ++k) {
      reg.add("oracle/G", "counts", ClaimKind::FormulaVsOracle,
              {{"n", n}, {"k", k}}, [n, k] {
                return equals(str(bruteDoubleMatchCount(n, k)),
                              str(doubleMatchCount(n, k)));
              });
    }
    for (int k = 0; (1 << (k + 1)) < n; ++k) {
      for (int l = k + 1; (1 << k) + (1 << l) <= n; ++l) {
        reg.add("oracle/TF", "counts", ClaimKind::FormulaVsOracle,
                {{"n", n}, {"k", k}, {"l", l}}, [n, k, l] {
                  BigInt commuters = 0;
                  BigInt total = 0;
                  for (const Partition& p : enumerateOdd(n)) {
                    ++total;
                    if (removalsCommute(p, k, l)) ++commuters;
                  }
                  const std::string expected =
                      "T=" + str(commuters) + ";F=" + str(total - commuters);
                  const std::string actual =
                      "T=" + str(commuteCount(n, k, l)) +
                      ";F=" + str(nonCommuteCount(n, k, l));
                  return equals(expected, actual);
                });
      }
    }
    for (int l = 1; (1 << l) <= n; ++l) {
      reg.add("oracle/T0l", "counts", ClaimKind::FormulaVsOracle,
              {{"n", n}, {"l", l}}, [n, l] {
                const BigInt brute = n == (1 << l)
                                         ? oddCount(n)
                                         : bruteCommuteCount(n, 0, l);
                return equals(str(brute), str(baseCommuteCount(n, l)));
              });
      reg.add("oracle/alignment", "counts", ClaimKind::FormulaVsOracle,
              {{"n", n}, {"l", l}}, [n, l] {
                const AlignmentCounts brute =
                    bruteCommuteAlignmentCounts(n, l);
                const AlignmentCounts formula = commuteAlignmentCounts(n, l);
                auto render = [](const AlignmentCounts& c) {
                  return "1+=" + str(c.sameHand) + ";1-=" + str(c.sameFoot) +
                         ";2=" + str(c.disjoint);
                };
                return equals(render(brute), render(formula));
              });
    }
  }

  for (int n = 2; n <= reg.options.maxN; ++n) {
    reg.add("check/base-vs-general-double-match", "counts",
            ClaimKind::Consistency, {{"n", n}}, [n] {
              return equals(str(doubleMatchCountBase(n)),
                            str(doubleMatchCount(n, 0)));
            });
  }
}

void addOddCountClaims(Registry& reg) {
  for (int n = 0; n <= reg.options.maxN; ++n) {
    reg.add("oracle/odd-count", "counts", ClaimKind::OddCountLaw, {{"n", n}},
            [n] {
              return equals(str(oddCount(n)),
                            std::to_string(enumerateOdd(n).size()));
            });
  }
  const int filterMax = std::min(reg.options.maxN, 24);
  for (int n = 0; n <= filterMax; ++n) {
    reg.add("oracle/odd-filter", "counts", ClaimKind::Consistency, {{"n", n}},
            [n] {
              std::vector<Partition> filtered;
              for (const Partition& p : allPartitions(n)) {
                if ((degree(p) & 1) != 0) filtered.push_back(p);
              }
              std::sort(filtered.begin(), filtered.end(), std::greater<>());
              const std::vector<Partition> generated = enumerateOdd(n);
              if (filtered == generated) return okOr("");
              return okOr("generated and degree-filtered sets differ at n=" +
                          std::to_string(n));
            });
  }
}

// ---------------------------------------------------------------------------
// characters suite

void addOddnessClaims(Registry& reg) {
  for (int n = 0; n <= reg.options.maxNAllPartitions; ++n) {
    reg.add("character/oddness-equivalence", "characters",
            ClaimKind::OddnessEquivalence, {{"n", n}}, [n] {
              const CycleType omega = binaryCycleType(n);
              for (const Partition& p : allPartitions(n)) {
                const bool viaTower = isOdd(p);
                const bool viaDegree = (degree(p) & 1) != 0;
                const bool viaChain = binaryHookChain(p).has_value();
                const bool viaValue =
                    boost::multiprecision::abs(characterValue(p, omega)) == 1;
                if (viaTower != viaDegree || viaTower != viaChain ||
                    viaTower != viaValue) {
                  return okOr("criteria disagree on " + p.str());
                }
              }
              return okOr("");
            });
  }
}

void addCharacterMatchClaims(Registry& reg) {
  for (int n = 4; n <= reg.options.maxNCharacterMatch; ++n) {
    for (int k = 0; (1 << (k + 1)) <= n; ++k) {
      if ((n >> k) > 4) continue;
      reg.add("character/double-match-unit-value", "characters",
              ClaimKind::CharacterDoubleMatch, {{"n", n}, {"k", k}}, [n, k] {
                for (const Partition& p : enumerateOdd(n)) {
                  const auto [lhs, rhs] = doubleMatchCharacterCheck(p, k);
                  if (lhs != rhs) {
                    return okOr("sides differ on " + p.str());
                  }
                }
                return okOr("");
              });
    }
  }

  for (int n = 2; n <= reg.options.maxNUnitCount; ++n) {
    const std::vector<int> exponents = binaryExponents(n);
    for (int i = 1; i <= static_cast<int>(exponents.size()); ++i) {
      if (exponents[i - 1] < 1) continue;
      reg.add("character/unit-value-forward", "characters",
              ClaimKind::CharacterDoubleMatch, {{"n", n}, {"i", i}},
              [n, i, k = exponents[i - 1] - 1] {
                const CycleType cls = splitCycleType(n, i, k);
                for (const Partition& p : enumerateOdd(n)) {
                  if (!doubleRemovalMatches(p, k)) continue;
                  if (boost::multiprecision::abs(characterValue(p, cls)) !=
                      1) {
                    return okOr("forward implication fails on " + p.str());
                  }
                }
                return okOr("");
              });
    }
  }

  reg.add("character/unit-value-converse-fails", "characters",
          ClaimKind::CharacterDoubleMatch, {}, [] {
            const Partition p(std::vector<int>{10, 1, 1});
            const CycleType cls = splitCycleType(12, 2, 1);
            const bool unitValue =
                boost::multiprecision::abs(characterValue(p, cls)) == 1;
            const bool match = doubleRemovalMatches(p, 1);
            if (unitValue && !match) return okOr("");
            return okOr("expected |value| = 1 with distinct removals, got "
                        "|value|=1:" +
                        std::to_string(unitValue) +
                        " match:" + std::to_string(match));
          });
}

void addUnitCountClaims(Registry& reg) {
  for (int n = 1; n <= reg.options.maxNUnitCount; ++n) {
    for (int k = 0; (1 << k) <= n; ++k) {
      reg.add("character/unit-count", "characters",
              ClaimKind::CharacterUnitCount, {{"n", n}, {"k", k}}, [n, k] {
                const CycleType cls = repeatedCycleType(n, k);
                BigInt count = 0;
                for (const Partition& p : enumerateOdd(n)) {
                  const bool unitValue =
                      boost::multiprecision::abs(characterValue(p, cls)) == 1;
                  if (unitValue != unitValueCriterion(p, k)) {
                    return okOr("criterion disagrees with value on " +
                                p.str());
                  }
                  if (unitValue) ++count;
                }
                const DigitProfile profile = DigitProfile::of(n);
                const int q = profile.maxIndexAtLeast(k);
                const int kPrime = (n >> k) == 1 ? k : k + 1;
                const BigInt closed =
                    (BigInt(1) << kPrime) * profile.lowerProduct(q);
                return equals(str(closed), str(count));
              });
    }
  }

  const int parityMax = std::min(reg.options.maxNUnitCount, 14);
  for (int n = 1; n <= parityMax; ++n) {
    reg.add("check/parity-transfer", "characters", ClaimKind::Consistency,
            {{"n", n}}, [n] {
              const std::vector<Partition> all = allPartitions(n);
              for (const CycleType& cls : twoPowerClasses(n)) {
                for (const Partition& p : all) {
                  const BigInt value = characterValue(p, cls);
                  if (((value - degree(p)) & 1) != 0) {
                    return okOr("parity differs for " + p.str() + " on " +
                                cls.str());
                  }
                }
              }
              return okOr("");
            });
  }

  const int factorMax = std::min(reg.options.maxNUnitCount, 20);
  for (int n = 1; n <= factorMax; ++n) {
    for (int k = 0; (1 << k) <= n; ++k) {
      reg.add("check/weight-factorization", "characters",
              ClaimKind::Consistency, {{"n", n}, {"k", k}}, [n, k] {
                const int e = 1 << k;
                const int w = n / e;
                const int m = n - w * e;
                const CycleType cls = repeatedCycleType(n, k);
                const CycleType tail = binaryCycleType(m);
                for (const Partition& p : allPartitions(n)) {
                  const BigInt value = characterValue(p, cls);
                  if (weight(p, e) < w) {
                    if (value != 0) {
                      return okOr("expected zero on " + p.str());
                    }
                    continue;
                  }
                  const QuotientTower qt = quotientTower(p, k);
                  std::vector<int> sizes;
                  BigInt product = 1;
                  for (const Partition& comp : qt.rows[k]) {
                    sizes.push_back(comp.size());
                    product *= degree(comp);
                  }
                  const BigInt expected =
                      multinomial(w, sizes) * product *
                      boost::multiprecision::abs(
                          characterValue(core(p, e), tail));
                  if (boost::multiprecision::abs(value) != expected) {
                    return okOr("magnitude mismatch on " + p.str());
                  }
                }
                return okOr("");
              });
    }
  }
}

// ---------------------------------------------------------------------------
// lemmas suite: structural descriptions

void addStructureClaims(Registry& reg) {
  const int maxN = reg.options.maxNLemmas;

  for (int n = 3; n <= maxN; ++n) {
    if ((n & (n - 1)) == 0) continue;  // no room below the top digit
    reg.add("lemma/top-core-commute", "lemmas", ClaimKind::StructureLemma,
            {{"n", n}}, [n] {
              const int t = binaryExponents(n).front();
              const int m = n - (1 << t);
              for (const Partition& p : enumerateOdd(n)) {
                const Partition gamma = core(p, 1 << t);
                for (int l = 0; (1 << l) <= m; ++l) {
                  if (removeOddHook(gamma, l) !=
                      core(removeOddHook(p, l), 1 << t)) {
                    return okOr("core does not commute on " + p.str() +
                                " at l=" + std::to_string(l));
                  }
                }
              }
              return okOr("");
            });
  }

  for (int m = 2; m <= maxN; ++m) {
    reg.add("lemma/good-core-criterion", "lemmas", ClaimKind::StructureLemma,
            {{"m", m}}, [m] {
              for (const Partition& g : enumerateOdd(m)) {
                const int r0 = oddHookPosition(g, 0).firstColumnLength;
                const int r1 = oddHookPosition(g, 1).firstColumnLength;
                const bool structural = (r0 == r1) || (r0 == r1 - 1);
                if (structural != doubleRemovalMatches(g, 0)) {
                  return okOr("criterion disagrees on " + g.str());
                }
              }
              return okOr("");
            });
  }

  for (int t = 2; (1 << t) + 2 <= maxN; ++t) {
    for (int m = 2; m < (1 << t); ++m) {
      const int n = (1 << t) + m;
      if (n > maxN) break;
      reg.add("lemma/good-core-extensions", "lemmas",
              ClaimKind::StructureLemma, {{"t", t}, {"m", m}}, [t, m] {
                for (const Partition& g : enumerateOdd(m)) {
                  const bool goodCore = doubleRemovalMatches(g, 0);
                  const int r0 = oddHookPosition(g, 0).firstColumnLength;
                  const int r1 = oddHookPosition(g, 1).firstColumnLength;
                  for (int x = 0; x < (1 << t); ++x) {
                    const Partition ext = extensionOnRunner(g, t, x);
                    const bool match = doubleRemovalMatches(ext, 0);
                    bool expected = false;
                    if (goodCore && r0 == r1) {
                      expected = x != r0 - 2 && x != r0 - 1;
                    } else if (goodCore && r0 == r1 - 1) {
                      expected = x != r0 && x != r0 + 1;
                    }
                    if (match != expected) {
                      return okOr("extension case fails for core " + g.str() +
                                  " on runner " + std::to_string(x));
                    }
                  }
                }
                return okOr("");
              });
    }
  }

  for (int t = 2; (1 << t) + 4 <= maxN; ++t) {
    for (int l = 1; l < t; ++l) {
      for (int m = (1 << l) + 1; m < (1 << t); ++m) {
        const int n = (1 << t) + m;
        if (n > maxN) break;
        reg.add("lemma/extension-commute", "lemmas", ClaimKind::StructureLemma,
                {{"n", n}, {"t", t}, {"l", l}}, [t, l, m] {
                  const int e = 1 << t;
                  for (const Partition& g : enumerateOdd(m)) {
                    const bool coreCommutes = removalsCommute(g, 0, l);
                    HookAlignment coreType{};
                    int r0 = 0;
                    int rl = 0;
                    if (coreCommutes) {
                      coreType = hookAlignment(g, l);
                      r0 = oddHookPosition(g, 0).firstColumnLength;
                      rl = oddHookPosition(g, l).firstColumnLength;
                    }
                    for (int x = 0; x < e; ++x) {
                      const Partition ext = extensionOnRunner(g, t, x);
                      const bool commutes = removalsCommute(ext, 0, l);
                      bool expected = false;
                      if (coreCommutes) {
                        switch (coreType) {
                          case HookAlignment::Disjoint:
                            expected = true;
                            break;
                          case HookAlignment::SameHand:
                            expected = x != r0 - 1 && x != rl - (1 << l) &&
                                       x != rl - (1 << l) - 1;
                            break;
                          case HookAlignment::SameFoot:
                            expected = x != r0 && x != rl && x != rl + 1;
                            break;
                        }
                      }
                      if (commutes != expected) {
                        return okOr("commute case fails for core " + g.str() +
                                    " on runner " + std::to_string(x));
                      }
                      if (commutes &&
                          hookAlignment(ext, l) != coreType) {
                        return okOr("type not preserved for core " + g.str() +
                                    " on runner " + std::to_string(x));
                      }
                    }
                  }
                  return okOr("");
                });
      }
    }
  }

  for (int t = 1; (1 << t) + 1 <= maxN; ++t) {
    for (int l = 1; l <= t; ++l) {
      for (int m = 1; m < (1 << l); ++m) {
        const int n = (1 << t) + m;
        if (n > maxN) break;
        reg.add("lemma/base-runner-cases", "lemmas", ClaimKind::StructureLemma,
                {{"n", n}, {"l", l}}, [t, l, m, n] {
                  const int e = 1 << l;
                  const int u = 1 << (t - l);
                  const Partition rowShape(std::vector<int>{u});
                  const Partition columnShape(std::vector<int>(u, 1));
                  for (const Partition& p : enumerateOdd(n)) {
                    const Partition gamma = core(p, 1 << t);
                    const int b0 = oddHookPosition(gamma, 0).firstColumnLength;
                    // Bead count normalized for the core and large enough to
                    // hold every part of p.
                    const int bound = (n + e) / e + 1;
                    const AbacusConfig config = AbacusConfig::forPartition(
                        p, e, e * bound + gamma.rows());
                    const std::vector<Partition> mu =
                        config.runnerPartitions();
                    int x = -1;
                    for (int j = 0; j < e; ++j) {
                      if (!mu[j].empty()) {
                        if (x >= 0) return okOr("two loaded runners");
                        x = j;
                      }
                    }
                    if (x < 0 || mu[x].size() != u) {
                      return okOr("runner load is not a single 2^(t-l) hook");
                    }
                    bool expected = true;
                    if (x == b0) {
                      expected = mu[x] == rowShape;
                    } else if (x == b0 - 1) {
                      expected = mu[x] == columnShape;
                    }
                    const bool commutes = removalsCommute(p, 0, l);
                    if (commutes != expected) {
                      return okOr("runner case fails on " + p.str());
                    }
                    if (commutes) {
                      const HookAlignment type = hookAlignment(p, l);
                      const HookAlignment want =
                          x == b0 ? HookAlignment::SameHand
                          : x == b0 - 1 ? HookAlignment::SameFoot
                                        : HookAlignment::Disjoint;
                      if (type != want) {
                        return okOr("runner type fails on " + p.str());
                      }
                    }
                  }
                  return okOr("");
                });
      }
    }
  }

  for (int t = 2; (1 << t) + 2 <= maxN; ++t) {
    for (int l = 1; l < t; ++l) {
      const int n = (1 << t) + (1 << l);
      if (n > maxN) continue;
      reg.add("lemma/base-matching-digit", "lemmas", ClaimKind::StructureLemma,
              {{"t", t}, {"l", l}}, [t, l] {
                const int e = 1 << t;
                const int low = 1 << l;
                for (const Partition& g : enumerateOdd(low)) {
                  const int w = g.rows() - 1;
                  const int step = (w % 2 == 1) ? 1 : -1;
                  const std::set<int> allowed = {
                      0, (step + e) % e, low, (low + step + e) % e};
                  for (int x = 0; x < e; ++x) {
                    const Partition ext = extensionOnRunner(g, t, x);
                    const bool commutes = removalsCommute(ext, 0, l);
                    if (commutes != (allowed.count(x) > 0)) {
                      return okOr("allowed-runner case fails for core " +
                                  g.str() + " on runner " +
                                  std::to_string(x));
                    }
                    if (!commutes) continue;
                    HookAlignment want = HookAlignment::Disjoint;
                    if (w % 2 == 0 && (x == low || x == e - 1)) {
                      want = HookAlignment::SameHand;
                    } else if (w % 2 == 1 && (x == 0 || x == low + 1)) {
                      want = HookAlignment::SameFoot;
                    }
                    if (hookAlignment(ext, l) != want) {
                      return okOr("alignment fails for core " + g.str() +
                                  " on runner " + std::to_string(x));
                    }
                  }
                }
                return okOr("");
              });
    }
  }

  for (int m = 1; m <= maxN; ++m) {
    reg.add("check/odd-hook-first-column", "lemmas", ClaimKind::Consistency,
            {{"m", m}}, [m] {
              for (const Partition& g : enumerateOdd(m)) {
                for (int l = 0; (1 << l) <= m; ++l) {
                  if (oddHookPosition(g, l).firstColumnLength < (1 << l)) {
                    return okOr("first-column length below hook length on " +
                                g.str());
                  }
                }
              }
              return okOr("");
            });
  }

  const int uniqueMax = std::min(reg.options.maxNLemmas, 32);
  for (int n = 1; n <= uniqueMax; ++n) {
    reg.add("check/unique-odd-hook", "lemmas", ClaimKind::Consistency,
            {{"n", n}}, [n] {
              for (const Partition& p : enumerateOdd(n)) {
                for (int k = 0; (1 << k) <= n; ++k) {
                  if (oddHooks(p, 1 << k).size() != 1) {
                    return okOr("odd hook not unique on " + p.str());
                  }
                }
              }
              return okOr("");
            });
  }

  for (int n = 2; n <= maxN; ++n) {
    reg.add("check/conjugation-symmetry", "lemmas", ClaimKind::Consistency,
            {{"n", n}}, [n] {
              for (const Partition& p : enumerateOdd(n)) {
                const Partition conj = p.conjugate();
                for (int k = 0; (1 << (k + 1)) <= n; ++k) {
                  if (doubleRemovalMatches(p, k) !=
                      doubleRemovalMatches(conj, k)) {
                    return okOr("double match differs under conjugation on " +
                                p.str());
                  }
                }
                for (int l = 1; (1 << l) <= n; ++l) {
                  const HookAlignment a = hookAlignment(p, l);
                  const HookAlignment b = hookAlignment(conj, l);
                  const bool flipped =
                      (a == HookAlignment::SameHand &&
                       b == HookAlignment::SameFoot) ||
                      (a == HookAlignment::SameFoot &&
                       b == HookAlignment::SameHand) ||
                      (a == HookAlignment::Disjoint &&
                       b == HookAlignment::Disjoint);
                  if (!flipped) {
                    return okOr("alignment does not flip on " + p.str());
                  }
                }
              }
              return okOr("");
            });
  }
}

// ---------------------------------------------------------------------------
// lemmas suite: tower reductions

void addReductionClaims(Registry& reg) {
  const int maxN = reg.options.maxNLemmas;

  for (int n = 2; n <= maxN; ++n) {
    for (int k = 0; (1 << (k + 1)) <= n; ++k) {
      reg.add("reduction/double-match-component", "lemmas",
              ClaimKind::ReductionLemma, {{"n", n}, {"k", k}}, [n, k] {
                for (const Partition& p : enumerateOdd(n)) {
                  const auto [sk, compK] = removalComponent(p, k, k);
                  const auto [sk1, compK1] = removalComponent(p, k, k + 1);
                  const bool reduced =
                      sk == sk1 && doubleRemovalMatches(compK, 0);
                  if (reduced != doubleRemovalMatches(p, k)) {
                    return okOr("component reduction fails on " + p.str());
                  }
                }
                return okOr("");
              });

      reg.add("reduction/double-match-digit", "lemmas",
              ClaimKind::ReductionLemma, {{"n", n}, {"k", k}}, [n, k] {
                const DigitProfile profile = DigitProfile::of(n);
                const int q = profile.maxIndexAtLeast(k);
                const int p2 = profile.maxIndexAtLeast(k + 1);
                const int bp = profile.exponents[p2 - 1] - k;
                const int bq = profile.exponents[q - 1] - k;
                for (const Partition& p : enumerateOdd(n)) {
                  const QuotientTower qt = quotientTower(p, k);
                  bool viaDigits = false;
                  for (const Partition& comp : qt.rows[k]) {
                    const int size = comp.size();
                    if ((size & (1 << bp)) && (size & (1 << bq))) {
                      viaDigits = doubleRemovalMatches(comp, 0);
                      break;
                    }
                  }
                  if (viaDigits != doubleRemovalMatches(p, k)) {
                    return okOr("digit criterion fails on " + p.str());
                  }
                }
                return okOr("");
              });

      reg.add("reduction/double-match-types", "lemmas",
              ClaimKind::ReductionLemma, {{"n", n}, {"k", k}}, [n, k] {
                const DigitProfile profile = DigitProfile::of(n);
                const int q = profile.maxIndexAtLeast(k);
                const int p2 = profile.maxIndexAtLeast(k + 1);
                const int bp = profile.exponents[p2 - 1] - k;
                const int bq = profile.exponents[q - 1] - k;
                std::map<std::vector<int>, std::pair<long long, long long>>
                    byType;  // type -> (matching, expected)
                for (const Partition& p : enumerateOdd(n)) {
                  const QuotientTower qt = quotientTower(p, k);
                  std::vector<int> type;
                  for (const Partition& comp : qt.rows[k]) {
                    type.push_back(comp.size());
                  }
                  auto& entry = byType[type];
                  if (doubleRemovalMatches(p, k)) ++entry.first;
                  int posP = -1;
                  int posQ = -1;
                  for (std::size_t s = 0; s < type.size(); ++s) {
                    if (type[s] & (1 << bp)) posP = static_cast<int>(s);
                    if (type[s] & (1 << bq)) posQ = static_cast<int>(s);
                  }
                  if (posP == posQ &&
                      doubleRemovalMatches(qt.rows[k][posP], 0)) {
                    ++entry.second;
                  }
                }
                for (const auto& [type, counts] : byType) {
                  if (counts.first != counts.second) {
                    return okOr("per-type counts differ");
                  }
                }
                return okOr("");
              });

      reg.add("reduction/double-match-core-factor", "lemmas",
              ClaimKind::ReductionLemma, {{"n", n}, {"k", k}}, [n, k] {
                const DigitProfile profile = DigitProfile::of(n);
                const int q = profile.maxIndexAtLeast(k);
                const long long nBar =
                    static_cast<long long>(profile.upperPart(q));
                const BigInt factor = profile.lowerProduct(q);
                auto countsByType = [k](int size) {
                  std::map<std::vector<int>, BigInt> counts;
                  for (const Partition& p : enumerateOdd(size)) {
                    if (doubleRemovalMatches(p, k)) {
                      ++counts[levelSizes(p, k)];
                    }
                  }
                  return counts;
                };
                const auto full = countsByType(n);
                const auto upper = countsByType(static_cast<int>(nBar));
                std::set<std::vector<int>> keys;
                for (const auto& [key, value] : full) keys.insert(key);
                for (const auto& [key, value] : upper) keys.insert(key);
                for (const auto& key : keys) {
                  const BigInt lhs =
                      full.count(key) ? full.at(key) : BigInt(0);
                  const BigInt rhs =
                      upper.count(key) ? upper.at(key) : BigInt(0);
                  if (lhs != factor * rhs) {
                    return okOr("per-type core factor fails");
                  }
                }
                return okOr("");
              });
    }

    for (int k = 0; (1 << (k + 1)) < n; ++k) {
      for (int l = k + 1; (1 << k) + (1 << l) <= n; ++l) {
        reg.add("reduction/commute-components", "lemmas",
                ClaimKind::ReductionLemma, {{"n", n}, {"k", k}, {"l", l}},
                [n, k, l] {
                  for (const Partition& p : enumerateOdd(n)) {
                    const auto [sk, mu] = removalComponent(p, k, k);
                    const auto [sl, nu] = removalComponent(p, k, l);
                    const bool commutes = removalsCommute(p, k, l);
                    if (sk != sl) {
                      if (!commutes) {
                        return okOr(
                            "distinct components should commute on " +
                            p.str());
                      }
                      continue;
                    }
                    const Partition image = removeOddHook(mu, l - k);
                    const auto afterL = removalComponent(
                        removeOddHook(p, l), k, k);
                    const bool reduced = afterL.second == image &&
                                         extendedCommute(mu, l - k);
                    if (reduced != commutes) {
                      return okOr("same-component reduction fails on " +
                                  p.str());
                    }
                  }
                  return okOr("");
                });

        const int t = binaryExponents(n).front();
        const int m = n - (1 << t);
        if (n > 6 && l < t && (1 << k) <= m) {
          reg.add("reduction/commute-types", "lemmas",
                  ClaimKind::ReductionLemma, {{"n", n}, {"k", k}, {"l", l}},
                  [n, k, l] {
                    const DigitProfile profile = DigitProfile::of(n);
                    const int q = profile.maxIndexAtLeast(k);
                    const int p2 = profile.maxIndexAtLeast(l);
                    const int bp = profile.exponents[p2 - 1] - k;
                    const int bq = profile.exponents[q - 1] - k;
                    const int bpPrev =
                        p2 >= 2 ? profile.exponents[p2 - 2] - k : -1;
                    std::map<std::vector<int>,
                             std::array<long long, 3>>
                        byType;  // commuting, filtered, total
                    for (const Partition& p : enumerateOdd(n)) {
                      const QuotientTower qt = quotientTower(p, k);
                      std::vector<int> type;
                      for (const Partition& comp : qt.rows[k]) {
                        type.push_back(comp.size());
                      }
                      auto& entry = byType[type];
                      if (removalsCommute(p, k, l)) ++entry[0];
                      int posP = -1;
                      int posQ = -1;
                      int posPrev = -1;
                      for (std::size_t s = 0; s < type.size(); ++s) {
                        if (type[s] & (1 << bp)) posP = static_cast<int>(s);
                        if (type[s] & (1 << bq)) posQ = static_cast<int>(s);
                        if (bpPrev >= 0 && (type[s] & (1 << bpPrev))) {
                          posPrev = static_cast<int>(s);
                        }
                      }
                      ++entry[2];
                      if (posP != posQ) {
                        ++entry[1];  // every partition of this type commutes
                      } else if (bp > bq || bp > l - k) {
                        if (extendedCommute(qt.rows[k][posP], l - k)) {
                          ++entry[1];
                        }
                      } else {
                        // bp == bq == l - k
                        if (posPrev == posP &&
                            extendedCommute(qt.rows[k][posP], l - k)) {
                          ++entry[1];
                        }
                      }
                    }
                    for (const auto& [type, counts] : byType) {
                      if (counts[0] != counts[1]) {
                        return okOr("per-type commuting counts differ");
                      }
                    }
                    return okOr("");
                  });
        }

        reg.add("reduction/commute-core-factor", "lemmas",
                ClaimKind::ReductionLemma, {{"n", n}, {"k", k}, {"l", l}},
                [n, k, l] {
                  const DigitProfile profile = DigitProfile::of(n);
                  const int q = profile.maxIndexAtLeast(k);
                  const long long nBar =
                      static_cast<long long>(profile.upperPart(q));
                  if ((1 << k) + (1 << l) > nBar) {
                    return okOr("");  // reduced size leaves no room
                  }
                  const BigInt factor = profile.lowerProduct(q);
                  auto countsByType = [k, l](int size) {
                    std::map<std::vector<int>, std::pair<BigInt, BigInt>>
                        counts;
                    for (const Partition& p : enumerateOdd(size)) {
                      auto& entry = counts[levelSizes(p, k)];
                      if (removalsCommute(p, k, l)) {
                        ++entry.first;
                      } else {
                        ++entry.second;
                      }
                    }
                    return counts;
                  };
                  const auto full = countsByType(n);
                  const auto upper = countsByType(static_cast<int>(nBar));
                  std::set<std::vector<int>> keys;
                  for (const auto& [key, value] : full) keys.insert(key);
                  for (const auto& [key, value] : upper) keys.insert(key);
                  for (const auto& key : keys) {
                    const auto lhs = full.count(key)
                                         ? full.at(key)
                                         : std::pair<BigInt, BigInt>{0, 0};
                    const auto rhs = upper.count(key)
                                         ? upper.at(key)
                                         : std::pair<BigInt, BigInt>{0, 0};
                    if (lhs.first != factor * rhs.first ||
                        lhs.second != factor * rhs.second) {
                      return okOr("per-type core factor fails");
                    }
                  }
                  return okOr("");
                });
      }
    }
  }
}

}  // namespace

std::vector<Claim> buildClaims(const VerifyOptions& options) {
  std::vector<Claim> claims;
  Registry reg{claims, options};
  addGoldenClaims(reg);
  addCountOracleClaims(reg);
  addOddCountClaims(reg);
  addOddnessClaims(reg);
  addCharacterMatchClaims(reg);
  addUnitCountClaims(reg);
  addStructureClaims(reg);
  addReductionClaims(reg);
  return claims;
}

int defaultWorkerCount() {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* cap = std::getenv("ODDHOOKS_MAX_WORKERS")) {
    const int parsed = std::atoi(cap);
    if (parsed >= 1 && parsed < workers) workers = parsed;
  }
  return workers;
}

VerificationReport runClaims(const std::vector<Claim>& claims, int workers) {
  if (workers <= 0) workers = defaultWorkerCount();
  std::vector<ClaimResult> results(claims.size());

  auto runOne = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    ClaimOutcome outcome;
    try {
      outcome = claims[i].run();
    } catch (const std::exception& e) {
      outcome = ClaimOutcome{"ok", std::string("exception: ") + e.what(),
                             false};
    }
    const auto stop = std::chrono::steady_clock::now();
    results[i] = ClaimResult{
        claims[i].id,
        claims[i].suite,
        claims[i].kind,
        claims[i].params,
        std::move(outcome.expected),
        std::move(outcome.actual),
        outcome.pass,
        std::chrono::duration<double, std::milli>(stop - start).count()};
  };

  if (workers == 1 || claims.size() < 2) {
    for (std::size_t i = 0; i < claims.size(); ++i) runOne(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int used = static_cast<int>(std::min(
        static_cast<std::size_t>(workers), claims.size()));
    pool.reserve(used);
    for (int w = 0; w < used; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= claims.size()) return;
          runOne(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) {
              return a.id < b.id;
            });
  VerificationReport report;
  report.version = "1";
  report.claims = std::move(results);
  for (const ClaimResult& r : report.claims) {
    if (r.pass) {
      ++report.passCount;
    } else {
      ++report.failCount;
    }
  }
  return report;
}

VerificationReport verifyAll(const VerifyOptions& options) {
  if (options.maxN < 8) {
    throw std::invalid_argument("verification requires max n >= 8");
  }
  VerificationReport report =
      runClaims(buildClaims(options), options.workers);
  report.bounds = {{"max_n", options.maxN},
                   {"max_n_lemmas", options.maxNLemmas},
                   {"max_n_character_match", options.maxNCharacterMatch},
                   {"max_n_unit_count", options.maxNUnitCount},
                   {"max_n_all_partitions", options.maxNAllPartitions}};
  return report;
}

VerificationReport verifyStructureLemmas(int maxN) {
  VerifyOptions options;
  options.maxNLemmas = maxN;
  options.suite = "lemmas";
  std::vector<Claim> claims;
  for (Claim& claim : buildClaims(options)) {
    if (claim.kind == ClaimKind::StructureLemma) {
      claims.push_back(std::move(claim));
    }
  }
  VerificationReport report = runClaims(claims, options.workers);
  report.bounds = {{"max_n", maxN}};
  return report;
}

std::string VerificationReport::toJsonString(bool includeTimings,
                                             int indent) const {
  json doc;
  doc["version"] = version;
  json boundsDoc = json::object();
  for (const auto& [key, value] : bounds) boundsDoc[key] = value;
  doc["bounds"] = boundsDoc;
  json claimsDoc = json::array();
  for (const ClaimResult& r : claims) {
    json claim;
    claim["id"] = r.id;
    claim["suite"] = r.suite;
    claim["kind"] = str(r.kind);
    json params = json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    claim["params"] = params;
    claim["expected"] = r.expected;
    claim["actual"] = r.actual;
    claim["pass"] = r.pass;
    if (includeTimings) claim["ms"] = r.ms;
    claimsDoc.push_back(std::move(claim));
  }
  doc["claims"] = std::move(claimsDoc);
  doc["summary"] = {{"pass", passCount}, {"fail", failCount}};
  return doc.dump(indent);
}

VerificationReport VerificationReport::fromJsonString(
    const std::string& text) {
  const json doc = json::parse(text);
  VerificationReport report;
  report.version = doc.at("version").get<std::string>();
  if (doc.contains("bounds")) {
    for (const auto& [key, value] : doc.at("bounds").items()) {
      report.bounds.emplace_back(key, value.get<long long>());
    }
  }
  for (const json& claim : doc.at("claims")) {
    ClaimResult r;
    r.id = claim.at("id").get<std::string>();
    r.suite = claim.at("suite").get<std::string>();
    r.kind = kindFromString(claim.at("kind").get<std::string>());
    for (const auto& [key, value] : claim.at("params").items()) {
      r.params.emplace_back(key, value.get<long long>());
    }
    r.expected = claim.at("expected").get<std::string>();
    r.actual = claim.at("actual").get<std::string>();
    r.pass = claim.at("pass").get<bool>();
    if (claim.contains("ms")) r.ms = claim.at("ms").get<double>();
    report.claims.push_back(std::move(r));
  }
  report.passCount = doc.at("summary").at("pass").get<int>();
  report.failCount = doc.at("summary").at("fail").get<int>();
  return report;
}

std::string VerificationReport::toCsv() const {
  auto quote = [](const std::string& field) {
    std::string quoted = "\"";
    for (char ch : field) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += '"';
    return quoted;
  };
  std::ostringstream os;
  os << "id,suite,kind,pass,expected,actual,ms\n";
  for (const ClaimResult& r : claims) {
    os << quote(r.id) << ',' << r.suite << ',' << str(r.kind) << ','
       << (r.pass ? "true" : "false") << ',' << quote(r.expected) << ','
       << quote(r.actual) << ',' << r.ms << '\n';
  }
  return os.str();
}

}  // namespace oddhooks
