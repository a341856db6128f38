#pragma once

// Integer polynomials in the single symbol n, and bivariate closed forms
// a*n + b*d + c used to state table entries.

#include <horikawa/exact.hpp>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace horikawa {

/// Polynomial in n with exact integer coefficients. coeffs_[k] multiplies
/// n^k; trailing zeros are never stored, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: constants convert implicitly
  Poly(const Integer& c);  // NOLINT
  explicit Poly(std::vector<Integer> coeffs);

  /// The symbol n itself.
  static Poly symbol();
  /// a*n + b.
  static Poly linear(const Integer& a, const Integer& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coeff(std::size_t k) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Constant value; throws DomainError if the polynomial involves n.
  Integer constant_value() const;
  Integer eval(const Integer& n) const;

  /// Exact division by 2. Every coefficient must be even.
  Poly half() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// ASCII rendering such as "7n+21", "-2n-14", "n", "0".
  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Closed form n_coef*n + d_coef*d + constant.
struct LinearForm {
  Integer n_coef;
  Integer d_coef;
  Integer constant;

  Integer eval(long n, long d) const;
  /// Specialise d, keeping n symbolic.
  Poly at_d(long d) const;
  /// Renders like "7n+19-d" or "6n+2d+15".
  std::string str() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const LinearForm& f);

}  // namespace horikawa
