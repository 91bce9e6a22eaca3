#include "braidforge/polynomial.hpp"

#include <stdexcept>

namespace braidforge {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntegerPolynomial IntegerPolynomial::geometric(int degree) {
  return IntegerPolynomial(std::vector<BigInt>(static_cast<std::size_t>(degree + 1), BigInt(1)));
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntegerPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::vector<BigInt> series_divide(const IntegerPolynomial& num,
                                  const IntegerPolynomial& den, std::size_t terms) {
  const BigInt lead = den.coefficient(0);
  if (lead != 1 && lead != -1) {
    throw std::domain_error("series division needs a unit constant term in the denominator");
  }
  // num = den * q  =>  q_k = (num_k - sum_{i>=1} den_i q_{k-i}) / den_0
  std::vector<BigInt> q(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    BigInt acc = num.coefficient(k);
    const std::size_t reach = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den.degree(), 0)));
    for (std::size_t i = 1; i <= reach; ++i) acc -= den.coefficient(i) * q[k - i];
    q[k] = acc * lead;
  }
  return q;
}

std::string to_string(const IntegerPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const auto& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace braidforge
