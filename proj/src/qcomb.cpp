#include "qha/qcomb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qha {

Scalar q_int(long n, const Scalar& q, QConvention conv) {
  if (n < 0) throw std::invalid_argument("q-integer of negative n");
  if (n == 0) return Scalar(0);
  if (conv == QConvention::gauss) {
    Scalar r(1);
    for (long k = 1; k < n; ++k) r = r * q + Scalar(1);
    return r;
  }
  Scalar q2 = q * q;
  Scalar r(1);
  for (long k = 1; k < n; ++k) r = r * q2 + Scalar(1);
  return r * q.pow(-(n - 1));
}

Scalar q_factorial(long n, const Scalar& q, QConvention conv) {
  if (n < 0) throw std::invalid_argument("q-factorial of negative n");
  Scalar r(1);
  for (long k = 1; k <= n; ++k) {
    r *= q_int(k, q, conv);
    if (r.is_zero()) break;
  }
  return r;
}

Scalar q_binomial(long n, long i, const Scalar& q, QConvention conv) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("q-binomial index out of range");
  // row[k] holds the binomial (row, k)
  std::vector<Scalar> row{Scalar(1)};
  for (long r = 1; r <= n; ++r) {
    std::vector<Scalar> next(static_cast<std::size_t>(r + 1));
    next[0] = Scalar(1);
    next[static_cast<std::size_t>(r)] = Scalar(1);
    for (long k = 1; k < r; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (conv == QConvention::gauss)
        next[uk] = row[uk - 1] + q.pow(k) * row[uk];
      else
        next[uk] = q.pow(-k) * row[uk] + q.pow(r - k) * row[uk - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

long inversion_count(const std::vector<int>& perm) {
  long c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++c;
  return c;
}

Scalar s_m_polynomial(int m, const Scalar& q, int bound) {
  if (m < 1) throw std::invalid_argument("S_m needs m >= 1");
  if (m > bound) throw std::out_of_range("S_m enumeration bound exceeded");
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<long> tally(static_cast<std::size_t>(m * (m - 1) / 2 + 1), 0);
  do {
    ++tally[static_cast<std::size_t>(inversion_count(perm))];
  } while (std::next_permutation(perm.begin(), perm.end()));
  Scalar r(0);
  for (std::size_t k = tally.size(); k-- > 0;) r = r * q + Scalar(tally[k]);
  return r;
}

}  // namespace qha
