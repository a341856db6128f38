#pragma once

// Intersection theory on rational surfaces presented by a labelled basis,
// a symmetric Gram matrix and the class of the canonical divisor.
//
// Divisor classes are coordinate vectors whose entries are polynomials in
// a single symbol n (degree <= 1 in practice), so a table entry such as
// "7n+21" comes out of the same bilinear algebra as its value at n = 20.

#include <horikawa/exact.hpp>
#include <horikawa/hj_calculus.hpp>
#include <horikawa/poly.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horikawa {

using IntMatrix = std::vector<std::vector<Integer>>;

struct DivisorClass {
  std::vector<Poly> coords;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Poly& k, DivisorClass a);
  DivisorClass operator-() const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// Substitute a concrete n into every coordinate.
  DivisorClass at(const Integer& n) const;
};

class PicardLattice {
 public:
  /// Validates shape and symmetry; throws DomainError otherwise.
  PicardLattice(std::vector<std::string> labels, IntMatrix gram, std::vector<Integer> canonical,
                Integer chi_o = 1);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& gram() const { return gram_; }
  const Integer& chi_o() const { return chi_o_; }
  DivisorClass canonical() const;

  /// Throws DomainError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  bool has(std::string_view label) const;

  DivisorClass zero() const;
  DivisorClass basis(std::string_view label) const;
  /// Sum of coefficient * basis(label).
  DivisorClass make(std::initializer_list<std::pair<std::string_view, Poly>> terms) const;

  /// Copy with one symmetric Gram entry overwritten. Used to tamper with a
  /// lattice in fault-injection runs; no invariant is re-checked.
  PicardLattice with_gram_entry(std::size_t i, std::size_t j, const Integer& value) const;

 private:
  std::vector<std::string> labels_;
  IntMatrix gram_;
  std::vector<Integer> canonical_;
  Integer chi_o_;
};

/// F_d with basis (D, F): D^2 = -d, D.F = 1, F^2 = 0, K = -2D - (d+2)F.
PicardLattice hirzebruch(long d);

/// Blow up a point: new class E with E^2 = -1 orthogonal to everything
/// pulled back, and K <- K + E. Asserts K^2 + rank = 10 afterwards.
PicardLattice blow_up(const PicardLattice& lattice, std::string label);

Poly intersect(const PicardLattice& lattice, const DivisorClass& a, const DivisorClass& b);

/// chi(O(a)) = chi(O) + a.(a - K)/2.
Poly chi_rr(const PicardLattice& lattice, const DivisorClass& a);

/// p_a(a) = 1 + a.(a + K)/2.
Poly arithmetic_genus(const PicardLattice& lattice, const DivisorClass& a);

/// K^2 + rank; equals 10 for the rational surfaces built here.
Integer noether_defect(const PicardLattice& lattice);

/// Tridiagonal: -e_i on the diagonal, 1 beside it.
IntMatrix chain_gram(const Chain& c);

/// Leading principal minors via fraction-free elimination.
std::vector<Integer> leading_minors(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/// All leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IntMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by exact congruence diagonalisation.
Inertia inertia(const IntMatrix& m);

/// Solves the adjunction system C_j^2 + C_j.(sum a_i C_i) = -2 exactly.
/// Throws InvariantError if the chain's Gram matrix is singular.
std::vector<Rational> discrepancies(const Chain& c);

using NamedClasses = std::vector<std::pair<std::string, DivisorClass>>;

/// a.C for every named C; a finite certificate, not a nefness proof.
std::map<std::string, Poly> pairing_report(const PicardLattice& lattice, const DivisorClass& a,
                                           const NamedClasses& curves);

}  // namespace horikawa
