#pragma once

// Exact scalar types and the error vocabulary shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace horikawa {

using Integer = mpz_class;
using Rational = mpq_class;

/// A caller violated a documented precondition (bad (n, q), inadmissible
/// (n, d), unknown label, non-T chain where one is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing one of these means either
/// a bug or a tampered input (see the fault-injection hooks in verify).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace horikawa
