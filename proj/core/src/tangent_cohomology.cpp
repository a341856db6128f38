#include <horikawa/tangent_cohomology.hpp>

namespace horikawa {

namespace {

std::string at(long n, long d) { return " at (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"; }

Integer curve_term(const PicardLattice& y, const DivisorClass& c) {
  const DivisorClass K = y.canonical();
  return (intersect(y, c, c) - intersect(y, c, K)).half().constant_value();
}

}  // namespace

H2Assembly h2_assembly(long n, long d) {
  if (d < 0) throw DomainError("d must be >= 0");
  if (n < d + 3) throw DomainError("h2 needs n >= d + 3" + at(n, d));
  if ((n - d) % 2 == 0) throw DomainError("h2 needs n - d odd" + at(n, d));
  const PicardLattice f = hirzebruch(d);
  // K + B/2 = D + mF + 2F; pushing Omega^1(K + B/2) down to the base gives
  // O(m) + O(m - d).
  const DivisorClass half_b = f.make({{"D", 3}, {"F", (n + 3 + 3 * d) / 2}});
  const DivisorClass h = f.canonical() + half_b;
  if (h.coords[0].constant_value() != 1) throw InvariantError("K + B/2 is not a section class" + at(n, d));
  H2Assembly a;
  a.degree_a = h.coords[1].constant_value().get_si() - 2;
  a.degree_b = a.degree_a - d;
  for (long deg : {a.degree_a, a.degree_b})
    if (deg >= 0) a.h2 += deg + 1;
  return a;
}

long h2_tx(long n, long d) { return h2_assembly(n, d).h2; }

PicardLattice h1_lattice(long d, long nu) {
  PicardLattice y = blow_up(blow_up(hirzebruch(d), "E1"), "E2");
  for (long k = 1; k <= nu; ++k) y = blow_up(y, "A" + std::to_string(k));
  return y;
}

H1Assembly h1_assembly_on(const PicardLattice& y, long n, long d, Which which, long nu) {
  const DivisorClass K = y.canonical();
  H1Assembly a;
  a.nu = nu;
  a.euler_term = 10 * y.chi_o() - 2 * intersect(y, K, K).constant_value();
  if (a.euler_term != 2 * nu - 2)
    throw InvariantError("10 chi(O_Y) - 2 K_Y^2 = " + to_string(a.euler_term) + ", expected 2nu-2" + at(n, d));

  DivisorClass sum_a = y.zero();
  for (long k = 1; k <= nu; ++k) sum_a += y.basis("A" + std::to_string(k));

  const DivisorClass B = y.make({{"D", 6}, {"F", n + 3 + 3 * d}, {"E1", -2}, {"E2", -2}}) - Poly(2) * sum_a;
  a.branch_whole = curve_term(y, B);

  a.split = n + 3 < 3 * d;
  if (a.split) {
    DivisorClass dp = y.basis("D") - sum_a;
    if (which == Which::DDoublePrime) dp -= y.basis("E1");
    const DivisorClass b0 = B - dp;
    if (intersect(y, dp, b0).constant_value() != 0)
      throw InvariantError("D' meets B0" + at(n, d));
    a.branch_terms.push_back({"D'", curve_term(y, dp)});
    a.branch_terms.push_back({"B0", curve_term(y, b0)});
  } else {
    a.branch_terms.push_back({"B", a.branch_whole});
  }
  Integer branch_sum = 0;
  for (const auto& t : a.branch_terms) branch_sum += t.value;
  if (branch_sum != a.branch_whole)
    throw InvariantError("component terms " + to_string(branch_sum) + " != whole-class term " +
                         to_string(a.branch_whole) + at(n, d));

  // Delta is the strict transform R' of the ruling through P1: -chi(K|_R').
  const DivisorClass r = y.make({{"F", 1}, {"E1", -1}, {"E2", -1}});
  const Integer chi_o_r = 1 - arithmetic_genus(y, r).constant_value();
  a.ruling_term = -(intersect(y, K, r).constant_value() + chi_o_r);

  a.h1 = a.euler_term + branch_sum + a.ruling_term;
  return a;
}

H1Assembly h1_assembly(long n, long d, Which which) {
  const long nu = nu_count(n, d, which);
  H1Assembly a = h1_assembly_on(h1_lattice(d, nu), n, d, which, nu);
  if (a.h1 != 7 * n + 18 - nu)
    throw InvariantError("h1 = " + to_string(a.h1) + " != 7n+18-nu = " + std::to_string(7 * n + 18 - nu) + at(n, d));
  return a;
}

long h1_tx(long n, long d, Which which) { return h1_assembly(n, d, which).h1.get_si(); }

TangentReport tangent_report(long n, long d, Which which) {
  if (n < 14) throw DomainError("tangent_report needs n >= 14, got " + std::to_string(n));
  TangentReport t;
  t.n = n;
  t.d = d;
  t.which = which;
  t.nu = nu_count(n, d, which);
  t.h1 = h1_tx(n, d, which);
  t.h2 = h2_tx(n, d);
  if (t.h2 != n - 3) throw InvariantError("h2 != n-3" + at(n, d));
  t.qg_tangent_dim = t.h1 + 1 + t.nu;
  t.divisor_tangent_dim = t.qg_tangent_dim - 1;
  if (t.divisor_tangent_dim != 7 * n + 18) throw InvariantError("divisor tangent dim != 7n+18" + at(n, d));

  if (n >= 2 * d - 2 && n <= 3 * d - 5) {
    const auto strata = d_strata(n, d);
    const StratumRecord& rec = which == Which::DPrime ? strata.first : strata.second;
    if (rec.empty() || *rec.dim != t.h1)
      throw InvariantError("stratum dim disagrees with h1 = 7n+18-nu" + at(n, d));
  }
  return t;
}

}  // namespace horikawa
