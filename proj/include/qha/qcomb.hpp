#pragma once

#include <vector>

#include "qha/scalar.hpp"

namespace qha {

// gauss: (n)_q = 1 + q + ... + q^{n-1}; symmetric: [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}
enum class QConvention { gauss, symmetric };

Scalar q_int(long n, const Scalar& q, QConvention conv);
Scalar q_factorial(long n, const Scalar& q, QConvention conv);
// q-Pascal recurrence; never divides, so roots of unity are safe
Scalar q_binomial(long n, long i, const Scalar& q, QConvention conv);

long inversion_count(const std::vector<int>& perm);

// sum over S_m of q^{inv(sigma)}
Scalar s_m_polynomial(int m, const Scalar& q, int bound = 8);

}  // namespace qha
