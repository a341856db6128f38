#pragma once

// Linear systems L_ij on Y_ij, the blow-up of F_d at two points P1, P2 on
// one ruling: P1 lies on the negative section D iff i = 1, and P2 is
// infinitely near P1 iff j = 1.

#include <horikawa/admissibility.hpp>
#include <horikawa/picard_lattice.hpp>
#include <horikawa/poly.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace horikawa {

struct BlowupConfig {
  long d = 0;
  int i = 0;
  int j = 0;

  /// Validates i, j in {0, 1}, d >= 0, and i = 0 when d = 0.
  static BlowupConfig make(long d, int i, int j);
  /// "Y10" style name.
  std::string str() const;
  friend bool operator==(const BlowupConfig&, const BlowupConfig&) = default;
};

/// Rows of the L_ij tables, in the order they are printed.
enum class Regime {
  Generic,        // n >= 3d-1
  ThreeDMinus3,   // n = 3d-3
  Middle,         // 2d-1 <= n < 3d-3
  TwoDMinus2,     // n = 2d-2
  TwoDMinus3,     // n = 2d-3
};

inline constexpr Regime kAllRegimes[] = {Regime::Generic, Regime::ThreeDMinus3, Regime::Middle, Regime::TwoDMinus2,
                                         Regime::TwoDMinus3};

/// "n>=3d-1", "n=3d-3", "2d-1<=n<3d-3", "n=2d-2", "n=2d-3".
std::string_view regime_label(Regime r);

/// Requires first-kind admissibility (parity is checked before dispatch,
/// so the unreachable n = 3d-2 never gets a row).
Regime regime_of(long n, long d);

/// For the single-value rows, the n they pin down; nullopt for ranges.
std::optional<long> regime_point(Regime r, long d);

/// Some admissible n falls in this row for this d.
bool regime_nonempty(Regime r, long d);

enum class FixedPart { Zero, DPrime, DPrimePlusE1MinusE2, NonReduced };

std::string_view fixed_part_name(FixedPart f);

struct YLattice {
  BlowupConfig config;
  PicardLattice lattice;
  DivisorClass d_prime;      // strict transform of D
  DivisorClass r_prime;      // strict transform of the ruling through P1
  DivisorClass e1_minus_e2;  // effective (-2)-class when j = 1
  bool e1_minus_e2_effective;
};

/// F_d blown up at P1 then P2, basis (D, F, E1, E2).
YLattice y_lattice(const BlowupConfig& cfg);

/// 6D + (n+3+3d)F - 2E1 - 2E2 with n a polynomial (symbol or constant).
DivisorClass l_class(const YLattice& y, const Poly& n);
/// Checked variant: throws DomainError for inadmissible (n, d).
DivisorClass l_class(const BlowupConfig& cfg, long n);

/// dim|L_i0| (= dim|L_i1| when reduced) per row; nullopt for an undefined cell.
std::optional<LinearForm> table2_closed_form(Regime r, int i);

/// Recorded fixed part of |L_ij| per row.
FixedPart table3_fixed_part(Regime r, int i, int j);

struct SystemAnalysis {
  BlowupConfig config;
  Regime regime = Regime::Generic;
  Poly n;
  DivisorClass L;
  FixedPart fixed = FixedPart::Zero;
  bool reduced = true;
  DivisorClass Z;  // zero class when non-reduced
  DivisorClass M;  // L - Z
  std::optional<Poly> dim;  // (M^2 - M.K)/2; absent when non-reduced
  Poly m_squared;
  Poly m_dot_k;
  // Sign certificate inputs.
  Poly d_prime_dot_l;
  Poly d_prime_dot_l_minus_d_prime;
  std::optional<Poly> e12_dot_l_minus_d_prime;  // j = 1 only
  // (E1-E2).(L - D') when D' is fixed, (E1-E2).L otherwise; j = 1 only.
  std::optional<Poly> e12_dot_residual;
};

/// Raw computation on a given lattice with the recorded fixed part of the
/// row; no cross-checks beyond RR parity. Used directly by fault injection.
SystemAnalysis analyze_on(const YLattice& y, Regime r, const Poly& n);

/// Concrete n: picks the row, then asserts dim against the closed form,
/// M^2 > 0 and M.K < 0 when reduced, and the greedy certificate against
/// the recorded fixed part. Throws DomainError / InvariantError.
SystemAnalysis analyze_system(const BlowupConfig& cfg, long n);

/// Symbolic n for range rows; single-value rows substitute their n.
/// Asserts dim agrees with the closed form identically in n.
SystemAnalysis analyze_system(const BlowupConfig& cfg, Regime r);

/// Fixed part recomputed from pairings alone: take D' if D'.L < 0, then
/// E1-E2 (j = 1) if it meets L - D' negatively; a further negative D'
/// pairing with what is left means D' is a multiple fixed component.
FixedPart certify_fixed_part(const YLattice& y, long n);

}  // namespace horikawa
