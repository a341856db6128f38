#pragma once

// Hirzebruch-Jung continued fractions and T-chain combinatorics.
//
// A chain [e_1, ..., e_r] (all e_i >= 2) is the string of rational curves
// C_1 + ... + C_r with C_i^2 = -e_i resolving the cyclic quotient
// singularity 1/n(1, q), where n/q = e_1 - 1/(e_2 - 1/(... - 1/e_r)).
//
// T-singularities in the sense used here are 1/(delta m^2)(1, delta m a - 1)
// with m >= 2 and gcd(m, a) = 1. Du Val strings (all entries 2) are kept as
// their own kind; ChainClassification::is_t() folds them back in on request.

#include <horikawa/exact.hpp>

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace horikawa {

class Chain {
 public:
  /// Throws DomainError if empty or if some entry is < 2.
  explicit Chain(std::vector<Integer> entries);
  Chain(std::initializer_list<long> entries);

  std::size_t length() const { return entries_.size(); }
  const std::vector<Integer>& entries() const { return entries_; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const Integer& front() const { return entries_.front(); }
  const Integer& back() const { return entries_.back(); }

  Chain reversed() const;
  bool all_twos() const;
  /// [4] or [3, 2^k, 3].
  bool is_two_gorenstein_seed() const;

  /// "[3,2,3]"
  std::string str() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  /// Canonical order: by length, then lexicographically by entries.
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

 private:
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const Chain& c);

/// 1/n(1, q) with 0 < q < n and gcd(n, q) = 1.
struct CyclicQuotientSingularity {
  Integer n;
  Integer q;

  /// Validating constructor; throws DomainError on a bad pair.
  static CyclicQuotientSingularity make(const Integer& n, const Integer& q);
  friend bool operator==(const CyclicQuotientSingularity&, const CyclicQuotientSingularity&) = default;
};

enum class ChainKind { DuVal, T, NotT };

std::string_view kind_name(ChainKind k);

struct TParameters {
  Integer delta;
  Integer m;
  Integer a;
  friend bool operator==(const TParameters&, const TParameters&) = default;
};

struct ChainClassification {
  ChainKind kind = ChainKind::NotT;
  std::optional<TParameters> t;  // engaged iff kind == T
  bool two_gorenstein = false;   // [4] or [3,2^k,3], equivalently m == 2

  /// Folds Du Val into T when `du_val_counts_as_t` is set.
  bool is_t(bool du_val_counts_as_t = false) const {
    return kind == ChainKind::T || (du_val_counts_as_t && kind == ChainKind::DuVal);
  }
  friend bool operator==(const ChainClassification&, const ChainClassification&) = default;
};

Chain hj_expand(const CyclicQuotientSingularity& s);
Rational hj_eval(const Chain& c);

/// The pair (n, q) with n/q = hj_eval(c).
CyclicQuotientSingularity singularity_of(const Chain& c);

/// Decides the T form through gcd(n, q + 1) = delta * m.
ChainClassification classify_singularity(const CyclicQuotientSingularity& s);

/// Result of peeling growth steps off a chain until a seed is reached.
struct ReductionResult {
  ChainKind kind = ChainKind::NotT;
  std::optional<Integer> delta;  // seed delta, when kind == T
  std::size_t steps = 0;         // number of growth steps undone
};

/// Reduction route: undo growth moves until [4] / [3,2^k,3] or a dead end.
ReductionResult reduce_chain(const Chain& c);

/// Classifies by both the reduction route and classify_singularity(), and
/// throws InvariantError if they disagree on kind or delta.
ChainClassification classify_chain(const Chain& c);

enum class Side { Left, Right };

/// Left: [2, e_1, ..., e_r + 1]. Right: [e_1 + 1, ..., e_r, 2].
Chain grow_chain(const Chain& c, Side side);

struct EnumerateOptions {
  bool only_two_gorenstein = false;
  /// Keep a chain only if it is <= its reversal in canonical order.
  bool dedupe_reversals = false;
};

/// All T-chains of length <= max_length, sorted in canonical order.
std::vector<Chain> enumerate_t_chains(std::size_t max_length, EnumerateOptions opts = {});

/// r - delta + 1; throws DomainError for non-T chains.
Integer k2_contribution(const Chain& c);

}  // namespace horikawa
