#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oddhooks/bigint.hpp"
#include "oddhooks/counting.hpp"
#include "oddhooks/partition.hpp"

namespace oddhooks {

/// Exhaustive counterparts of the closed-form counters, by direct iteration
/// over the odd partitions of n.
BigInt bruteDoubleMatchCount(int n, int k);
BigInt bruteCommuteCount(int n, int k, int l);
BigInt bruteNonCommuteCount(int n, int k, int l);
AlignmentCounts bruteCommuteAlignmentCounts(int n, int l);

enum class ClaimKind {
  GoldenCount,        // pinned count values, closed form and oracle
  FormulaVsOracle,    // closed forms against exhaustive counting
  OddnessEquivalence, // degree parity, hook chains, character values
  OddCountLaw,        // enumeration size law
  CharacterDoubleMatch,
  CharacterUnitCount,
  StructureLemma,     // abacus-level descriptions of the operator sets
  ReductionLemma,     // tower reductions of the operator sets
  Consistency,        // extra cross-checks
};

const char* str(ClaimKind kind);

struct ClaimOutcome {
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Claim {
  std::string id;
  std::string suite;  // counts | lemmas | characters
  ClaimKind kind = ClaimKind::Consistency;
  std::vector<std::pair<std::string, long long>> params;
  std::function<ClaimOutcome()> run;
};

struct ClaimResult {
  std::string id;
  std::string suite;
  ClaimKind kind = ClaimKind::Consistency;
  std::vector<std::pair<std::string, long long>> params;
  std::string expected;
  std::string actual;
  bool pass = false;
  double ms = 0.0;
};

struct VerificationReport {
  std::string version;
  std::vector<std::pair<std::string, long long>> bounds;
  std::vector<ClaimResult> claims;
  int passCount = 0;
  int failCount = 0;

  bool allPassed() const { return failCount == 0; }
  /// Timings live in their own field so reports can be compared without them.
  std::string toJsonString(bool includeTimings = true, int indent = -1) const;
  static VerificationReport fromJsonString(const std::string& text);
  std::string toCsv() const;
};

struct VerifyOptions {
  int maxN = 48;              // enumeration and count claims
  int maxNLemmas = 40;        // structure and reduction sweeps
  int maxNCharacterMatch = 36;
  int maxNUnitCount = 24;
  int maxNAllPartitions = 18;
  std::string suite = "all";  // all | counts | lemmas | characters
  int workers = 0;            // 0 = hardware default, capped by
                              // ODDHOOKS_MAX_WORKERS
};

std::vector<Claim> buildClaims(const VerifyOptions& options);
VerificationReport runClaims(const std::vector<Claim>& claims, int workers);
VerificationReport verifyAll(const VerifyOptions& options = {});
VerificationReport verifyStructureLemmas(int maxN);

int defaultWorkerCount();

}  // namespace oddhooks
