#pragma once

// Numerical bookkeeping for Horikawa surfaces: invariants, branch classes,
// stratum dimensions, A1 counts, components and intersection forms.

#include <horikawa/admissibility.hpp>
#include <horikawa/hirzebruch_systems.hpp>
#include <horikawa/picard_lattice.hpp>
#include <horikawa/poly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace horikawa {

struct Invariants {
  Integer p_g;
  Integer k_squared;
  Integer chi;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// p_g = n+1, K^2 = 2n-2 or 2n-1, chi = n+2. n >= 3, or n >= 1 for the
/// second kind (n = 1 gives the I-surfaces).
Invariants invariants(Kind kind, long n);

/// Branch divisor on F_d: 6D + (n+3+3d)F (first) or 6D + (n+5+3d)F (second).
DivisorClass branch_class(Kind kind, long n, long d);

enum class Which { DPrime, DDoublePrime };
std::string_view which_name(Which w);  // "D'" / "D''"

/// Stratum families: second-kind type (d) strata, and the D' / D'' / D
/// strata of the divisor D_n (tag "D" when d = 0).
enum class Family { Hor2, DPrime, DDoublePrime, D };
std::string_view family_name(Family f);  // "Mnd-Hor2", "D'", "D''", "D"

struct StratumRecord {
  Family family = Family::D;
  long n = 0;
  long d = 0;
  std::optional<Integer> dim;  // nullopt = empty stratum
  long nu = 0;
  bool is_component = false;
  std::optional<long> eta;  // second kind only
  bool empty() const { return !dim.has_value(); }
};

/// Second-kind type (d) stratum. Dimension from the branch-curve count on
/// F_d, asserted against the three closed forms; is_component = dense in
/// the (7n+19)-dimensional moduli space.
StratumRecord stratum_dim_second(long n, long d);

struct ModuliComponent {
  std::string tag;  // "1", "1a", "1b", "2", "2a", "2b"
  Integer dim;
  std::vector<long> ds;  // types (d) whose surfaces it contains
};

/// Tags of the components of the first/second kind moduli space at n.
std::vector<std::string> component_tags(Kind kind, long n);

/// n >= 6 (first), n >= 7 (second); otherwise DomainError.
std::vector<ModuliComponent> moduli_components(Kind kind, long n);

/// dim D'_{n,d} = dim|L00| - dim Aut(Y00) and dim D''_{n,d} = dim|L10| -
/// dim Aut(Y10), through the lattice. Requires n >= 14 and first-kind
/// admissibility of (n, d).
std::pair<StratumRecord, StratumRecord> d_strata(long n, long d);

struct Table1Row {
  std::string label;
  std::optional<LinearForm> d_prime;   // nullopt = empty
  std::optional<LinearForm> d_double;  // nullopt = empty
  bool d_prime_component = false;
  bool d_double_component = false;
};

/// The row of the stratum table containing (n, d), with its closed forms.
Table1Row table1_row(long n, long d);

/// dim Aut(Y00) and dim Aut(Y10).
Integer aut_dim_y00(long d);
Integer aut_dim_y10(long d);

/// Number of A1 points on a general surface of the stratum.
long nu_count(long n, long d, Which which);

struct DnComponent {
  Family family;
  long d;
  Integer dim;
  std::string ambient;  // component of the second-kind moduli it lies in
};

/// Top-dimensional strata of D_n. Requires n >= 14.
std::vector<DnComponent> dn_components(long n);

struct IntersectionForm {
  Integer rank;
  Integer signature;
  bool even = false;
  std::string freedman;  // "a<1>+b<-1>" or "pH+q(-E8)"
};

IntersectionForm intersection_form(Kind kind, long n, const std::string& tag);

}  // namespace horikawa
