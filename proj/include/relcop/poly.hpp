#pragma once

#include <string>
#include <vector>

#include "relcop/arith.hpp"

namespace relcop {

// Dense univariate polynomial with exact integer coefficients, ascending by
// degree. Normalized: no trailing zero coefficient (zero polynomial has an
// empty coefficient vector, degree() == -1).
struct CoeffPoly {
  std::vector<BigInt> c;

  CoeffPoly() = default;
  explicit CoeffPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  BigInt coeff(int k) const;

  static CoeffPoly zero() { return CoeffPoly{}; }
  static CoeffPoly constant(const BigInt& v);
  static CoeffPoly x();

  bool operator==(const CoeffPoly&) const = default;
};

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b);
CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b);
CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);

// p(x) * x^k
CoeffPoly shift_up(const CoeffPoly& p, int k);
CoeffPoly derivative(const CoeffPoly& p);

BigInt eval_int(const CoeffPoly& p, const BigInt& x);
BigRat eval_rat(const CoeffPoly& p, const BigRat& x);

// Sign of p(num/den) for den > 0, computed in integers (no rational blowup).
int sign_at(const CoeffPoly& p, const BigInt& num, const BigInt& den);
int sign_at(const CoeffPoly& p, const BigRat& x);
int sign_at_pos_infinity(const CoeffPoly& p);

// Paper-style rendering, descending degrees: "x^8 + 8x^7 + ... + 8x".
std::string pretty(const CoeffPoly& p, const std::string& var = "x");

// Ascending coefficients as decimal strings (serialization form).
std::vector<std::string> coeff_strings(const CoeffPoly& p);

}  // namespace relcop
