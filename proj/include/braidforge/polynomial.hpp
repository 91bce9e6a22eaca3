#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidforge {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over the integers, coefficient i of t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients);
  IntegerPolynomial(std::initializer_list<long long> coefficients);

  /// 1 + t + ... + t^degree.
  static IntegerPolynomial geometric(int degree);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  BigInt coefficient(std::size_t i) const;
  BigInt evaluate(const BigInt& t) const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator-=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(IntegerPolynomial a, const IntegerPolynomial& b) { return a *= b; }
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// First `terms` coefficients of the power series num/den. The constant term
/// of `den` must be +1 or -1 so the division stays in the integers; throws
/// std::domain_error otherwise.
std::vector<BigInt> series_divide(const IntegerPolynomial& num,
                                  const IntegerPolynomial& den, std::size_t terms);

std::string to_string(const IntegerPolynomial& p);

}  // namespace braidforge
