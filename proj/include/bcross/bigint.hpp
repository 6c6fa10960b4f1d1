#pragma once

#include <gmpxx.h>

#include <vector>

namespace bcross {

using BigInt = mpz_class;
using BigRat = mpq_class;

// binom(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// Exact determinant by fraction-free Bareiss elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace bcross
