#include "relcop/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace relcop {

void CoeffPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt CoeffPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return BigInt(0);
  return c[k];
}

CoeffPoly CoeffPoly::constant(const BigInt& v) {
  CoeffPoly p;
  if (v != 0) p.c = {v};
  return p;
}

CoeffPoly CoeffPoly::x() {
  CoeffPoly p;
  p.c = {BigInt(0), BigInt(1)};
  return p;
}

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  r.normalize();
  return r;
}

CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  r.normalize();
  return r;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.is_zero() || b.is_zero()) return CoeffPoly::zero();
  CoeffPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

CoeffPoly shift_up(const CoeffPoly& p, int k) {
  if (p.is_zero()) return p;
  CoeffPoly r;
  r.c.assign(p.c.size() + k, BigInt(0));
  std::copy(p.c.begin(), p.c.end(), r.c.begin() + k);
  return r;
}

CoeffPoly derivative(const CoeffPoly& p) {
  CoeffPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * BigInt(static_cast<long>(i));
  r.normalize();
  return r;
}

BigInt eval_int(const CoeffPoly& p, const BigInt& x) {
  BigInt acc(0);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat eval_rat(const CoeffPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

int sign_at(const CoeffPoly& p, const BigInt& num, const BigInt& den) {
  // sign of p(num/den) equals sign of sum c_i num^i den^(d-i) for den > 0
  if (p.is_zero()) return 0;
  if (den <= 0) throw std::invalid_argument("sign_at: denominator must be positive");
  const int d = p.degree();
  BigInt acc(0), dpow(1);
  std::vector<BigInt> dens(d + 1);
  for (int i = d; i >= 0; --i) {
    dens[i] = dpow;
    dpow *= den;
  }
  for (int i = d; i >= 0; --i) acc = acc * num + p.c[i] * dens[i];
  return sgn(acc);
}

int sign_at(const CoeffPoly& p, const BigRat& x) {
  return sign_at(p, BigInt(x.get_num()), BigInt(x.get_den()));
}

int sign_at_pos_infinity(const CoeffPoly& p) {
  if (p.is_zero()) return 0;
  return sgn(p.c.back());
}

std::string pretty(const CoeffPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& a = p.c[k];
    if (a == 0) continue;
    BigInt mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::vector<std::string> coeff_strings(const CoeffPoly& p) {
  std::vector<std::string> v;
  v.reserve(p.c.size());
  for (const auto& x : p.c) v.push_back(x.get_str());
  return v;
}

}  // namespace relcop
