#pragma once

// h^1 and h^2 of the tangent sheaf at a general point of a stratum
// D_{n,d}, assembled from Riemann-Roch on the resolution Y.

#include <horikawa/horikawa_moduli.hpp>
#include <horikawa/picard_lattice.hpp>

#include <string>
#include <vector>

namespace horikawa {

struct H2Assembly {
  long degree_a = 0;  // (n+d-5)/2
  long degree_b = 0;  // (n-d-5)/2
  long h2 = 0;
};

/// Sections of O(a) + O(b) on P^1, with a, b read off K + B/2 on F_d.
/// Requires n >= d + 3 and n - d odd.
H2Assembly h2_assembly(long n, long d);
long h2_tx(long n, long d);

struct CurveTerm {
  std::string name;
  Integer value;  // (C^2 - K.C)/2 = -chi(K|_C)
};

struct H1Assembly {
  long nu = 0;
  Integer euler_term;   // 10 chi(O_Y) - 2 K_Y^2
  std::vector<CurveTerm> branch_terms;
  Integer branch_whole;  // same quantity for B as one class
  Integer ruling_term;   // -chi(K_Y|_Delta)
  Integer h1;
  bool split = false;    // B = D' + B0
};

/// Lattice Y: F_d blown up at P1, P2 and the nu points A_k.
PicardLattice h1_lattice(long d, long nu);

/// Throws DomainError for inadmissible (n, d) or an empty stratum, and
/// InvariantError when the bookkeeping identities fail.
H1Assembly h1_assembly(long n, long d, Which which);
H1Assembly h1_assembly_on(const PicardLattice& y, long n, long d, Which which, long nu);
long h1_tx(long n, long d, Which which);

struct TangentReport {
  long n = 0;
  long d = 0;
  Which which = Which::DPrime;
  long nu = 0;
  long h1 = 0;
  long h2 = 0;
  long qg_tangent_dim = 0;       // h1 + 1 + nu: global plus one per singular point
  long divisor_tangent_dim = 0;  // kernel at the non-canonical point
  bool smooth_point = true;
  bool h1_invariant = true;       // recorded, not checked
  bool h2_anti_invariant = true;  // recorded, not checked
};

/// Requires n >= 14 and a nonempty stratum.
TangentReport tangent_report(long n, long d, Which which);

}  // namespace horikawa
