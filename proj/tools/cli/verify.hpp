#pragma once

// Cross-path verification sweeps behind `horikawa verify`.

#include "table.hpp"

#include <horikawa/exact.hpp>

#include <optional>
#include <string>
#include <vector>

namespace horikawa::cli {

struct GramTamper {
  std::size_t i = 0;
  std::size_t j = 0;
  Integer value;
};

struct VerifyOptions {
  std::string scope = "all";
  long n_max = 200;
  std::optional<long> hj_n_max;  // defaults to n_max
  std::size_t chain_max_len = 9;
  long chain_max_entry = 6;
  std::size_t t_chain_max_len = 12;
  std::size_t two_gorenstein_max_len = 30;
  /// Overwrites one Gram entry of every Y_ij lattice (fault injection).
  std::optional<GramTamper> tamper;
};

struct CellFailure {
  std::string check;
  Json cell;  // n, d, which, ...
  std::string expected;
  std::string got;
};

struct CheckResult {
  std::string name;
  std::string module;
  bool ran = false;
  long passed = 0;
  long failed = 0;
  std::string detail;
  std::optional<CellFailure> first_failure;
  bool ok() const { return !ran || failed == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CellFailure* first_failure() const;
};

/// Canonical module name for a scope ("hj" -> "hj-calculus", ...); throws
/// UsageError for an unknown scope.
std::string canonical_scope(const std::string& scope);

/// n_max >= 14 is required (DomainError otherwise).
VerifyReport run_verify(const VerifyOptions& opts);

Json verify_json(const VerifyReport& r);
Json failure_json(const CellFailure& f);
void render_verify(std::ostream& os, const VerifyReport& r, Format f);

/// Sum of Euler phi(n) for 2 <= n <= n_max, by sieve.
long coprime_pair_count(long n_max);

}  // namespace horikawa::cli
