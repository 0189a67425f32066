#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsdist {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in the variable v with exact integer coefficients.
/// The variable q is identified with v^2 throughout; quantities that live
/// in Z[q] are Laurent polynomials whose support consists of even,
/// nonnegative v-exponents.
class Laurent {
 public:
  /// The zero polynomial.
  Laurent() = default;

  static Laurent from_int(long long c);
  static Laurent v_power(int e);        // v^e
  static Laurent q_power(int k);        // q^k = v^{2k}
  static Laurent one() { return from_int(1); }
  static Laurent one_plus_q();          // 1 + q
  /// Build a polynomial in q from ascending q-coefficients (index k = coeff of q^k).
  static Laurent from_q_coeffs(const std::vector<Int>& asc);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest v-exponents with nonzero coefficient (0 for the zero polynomial).
  int low() const { return is_zero() ? 0 : low_; }
  int high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }

  Int coeff_v(int e) const;

  /// True when every nonzero term has an even, nonnegative v-exponent.
  bool is_q_polynomial() const;
  /// Coefficient of q^k. Throws std::domain_error if the polynomial has any
  /// odd-exponent term; such a term means a q-view was requested of a value
  /// that is not a polynomial in q.
  Int coeff_q(int k) const;
  /// Ascending q-coefficients starting from q^0; requires is_q_polynomial().
  std::vector<Int> q_coeffs() const;
  int q_degree() const;

  /// True when every coefficient is >= 0.
  bool nonnegative() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiply by v^e (shift every exponent).
  Laurent shifted(int e) const;
  Laurent pow(unsigned k) const;

  bool operator==(const Laurent& o) const = default;

  /// Evaluate a q-polynomial at a rational value of q.
  Rational eval_q(const Rational& q) const;
  /// Evaluate a q-polynomial at an integer value of q.
  Int eval_q_int(const Int& q) const;

  /// Text forms, ascending exponents: "1 + 2*v + v^3", "q + q^2", "0".
  std::string str_v() const;
  std::string str_q() const;

  /// Deterministic key string, used for hashing/grouping.
  std::string key() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Int> coeffs_;  // coeffs_[k] = coefficient of v^{low_+k}; front/back nonzero
};

/// Exact equality of num1/(1+q)^{L1} and num2/(1+q)^{L2} as rational functions.
bool rational_equal(const Laurent& num1, int l1, const Laurent& num2, int l2);

/// Coefficient of q^k; throws std::domain_error when p is not a polynomial in q.
Int q_coefficient(const Laurent& p, int k);

}  // namespace bsdist
