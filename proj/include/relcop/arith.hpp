#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace relcop {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k) as an exact integer; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

inline int sign_of(const BigInt& x) { return sgn(x); }
inline int sign_of(const BigRat& q) { return sgn(q); }

// "num/den" in lowest terms, or plain "num" when den == 1.
std::string rat_to_string(const BigRat& q);

inline BigRat make_rat(long num, long den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace relcop
