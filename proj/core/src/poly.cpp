#include <horikawa/poly.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace horikawa {

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly::Poly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::symbol() { return Poly(std::vector<Integer>{0, 1}); }

Poly Poly::linear(const Integer& a, const Integer& b) { return Poly(std::vector<Integer>{b, a}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer Poly::constant_value() const {
  if (!is_constant()) throw DomainError("expected a constant, got " + str());
  return coeff(0);
}

Integer Poly::eval(const Integer& n) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Poly Poly::half() const {
  Poly out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (mpz_odd_p(c.get_mpz_t())) throw InvariantError("parity violation: " + str() + " is not even");
    Integer h = c / 2;
    out.coeffs_.push_back(h);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

// Appends "+3n", "-n", "+7" style terms; `first` suppresses a leading '+'.
void append_term(std::ostringstream& os, const Integer& c, const std::string& monomial, bool& first) {
  if (c == 0) return;
  if (c < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  Integer mag = abs(c);
  if (monomial.empty() || mag != 1) os << mag.get_str();
  os << monomial;
  first = false;
}

}  // namespace

std::string Poly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    std::string mono;
    if (k == 1) mono = var;
    if (k > 1) mono = var + "^" + std::to_string(k);
    append_term(os, coeffs_[k], mono, first);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Integer LinearForm::eval(long n, long d) const { return n_coef * n + d_coef * d + constant; }

Poly LinearForm::at_d(long d) const { return Poly::linear(n_coef, d_coef * d + constant); }

std::string LinearForm::str() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, n_coef, "n", first);
  append_term(os, d_coef, "d", first);
  append_term(os, constant, "", first);
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LinearForm& f) { return os << f.str(); }

}  // namespace horikawa
