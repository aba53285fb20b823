/*
 * The verification suite: a registry of named checks, each computing one
 * claimed dimension/span/decomposition fact exactly and comparing against
 * the frozen expected value.  Checks run concurrently up to a worker count;
 * the assembled report is ordered by check id, so its content (everything
 * but the timing fields) is deterministic for a fixed configuration.
 *
 * Passing results can be cached in a content-addressed directory keyed by a
 * digest of (version, check id, relevant options); a corrupt or mismatched
 * cache entry is recomputed, never trusted.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ginv/field.hpp"

namespace ginv {

enum class Verdict { Pass, Fail, Skipped };

std::string verdict_str(Verdict v);

struct CheckResult {
  std::string id;
  std::string statement;  // the fact being checked, in words
  std::string computed;
  std::string expected;
  Verdict verdict = Verdict::Fail;
  std::string skip_reason;  // nonempty iff verdict == Skipped
  FieldSpec field = FieldSpec::rationals();  // field of the decisive run
  double elapsed_seconds = 0.0;
};

enum class SuiteKind { Quick, Full };

struct VerifyOptions {
  SuiteKind suite = SuiteKind::Quick;
  // Field override for the field-generic property checks (straightening
  // oracle, rewriting-move expansion, rank/nullity).  The dimension and
  // span checks always run over their mandated fields and ignore this.
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> claims;  // run only these ids; empty = whole suite
  std::size_t jobs = 0;             // 0 = hardware concurrency, clamped to 8
  std::uint64_t seed = 0;
  std::string cache_dir;  // empty = caching off
  bool stretch = false;   // include the skipped-by-default n = 12 check
  // Estimated-operation budget gating the stretch kernel; the check reports
  // its estimate and stays skipped until the budget covers it.
  std::uint64_t stretch_ops_budget = 20'000'000'000ULL;
};

struct VerificationReport {
  std::string version;
  VerifyOptions config;
  std::vector<CheckResult> checks;  // sorted by id
  bool all_passed() const;          // no Fail verdicts (skips are not fails)
};

inline constexpr const char* kReportVersion = "1.0.0";

// Ids of every registered check, sorted; includes the stretch check.
std::vector<std::string> known_claim_ids();

// Throws std::invalid_argument on an unknown claim id in opts.claims.
VerificationReport run_verification(const VerifyOptions& opts);

std::string report_to_text(const VerificationReport& r);
// {version, config, checks:[...]}, keys in fixed order.
std::string report_to_json(const VerificationReport& r);

}  // namespace ginv
