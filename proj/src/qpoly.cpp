#include "qha/qpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qha {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t deg) {
  std::vector<mpq_class> v(deg + 1, mpq_class(0));
  v[deg] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class QPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

std::size_t QPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return 0;
}

bool QPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  QPoly p;
  p.c_ = std::move(r);
  p.trim();
  return p;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  q = QPoly();
  if (a.degree() < b.degree()) return;
  std::vector<mpq_class> qc(a.degree() - b.degree() + 1, mpq_class(0));
  const mpq_class inv_lead = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = r.degree() - b.degree();
    mpq_class f = r.lead() * inv_lead;
    qc[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q.c_ = std::move(qc);
  q.trim();
}

QPoly QPoly::mod(const QPoly& m) const {
  QPoly q, r;
  divmod(*this, m, q, r);
  return r;
}

QPoly QPoly::exact_div(const QPoly& b) const {
  QPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * mpq_class(1 / lead());
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly QPoly::inverse_mod(const QPoly& a, const QPoly& m) {
  // extended Euclid on (m, a)
  QPoly r0 = m, r1 = a.mod(m);
  QPoly s0, s1 = constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial not invertible modulo");
  return (s0 * mpq_class(1 / r0.lead())).mod(m);
}

QPoly QPoly::shift_down(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) throw std::logic_error("shift_down of non-divisible polynomial");
  QPoly r;
  if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  return r;
}

QPoly QPoly::shift_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  QPoly r;
  r.c_.assign(k, mpq_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

QPoly QPoly::compose_power(std::size_t k) const {
  if (k == 1 || is_zero()) return *this;
  QPoly r;
  r.c_.assign((c_.size() - 1) * k + 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

mpq_class QPoly::content() const {
  if (is_zero()) return 1;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& x : c_) {
    if (sgn(x) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  mpq_class r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

std::string QPoly::str(const std::string& var, bool descending) const {
  if (is_zero()) return "0";
  std::string out;
  auto emit = [&](std::size_t i) {
    const mpq_class& c = c_[i];
    if (sgn(c) == 0) return;
    bool neg = sgn(c) < 0;
    mpq_class a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    if (i > 0) mono = i == 1 ? var : var + "^" + std::to_string(i);
    if (i == 0)
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  };
  if (descending)
    for (std::size_t i = c_.size(); i-- > 0;) emit(i);
  else
    for (std::size_t i = 0; i < c_.size(); ++i) emit(i);
  return out;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const QPoly& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for proper divisors d
  QPoly p = QPoly::monomial(1, n) - QPoly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto jt = cache.find(d);
    QPoly phi_d;
    if (jt == cache.end()) {
      // compute recursively without holding the cache entry
      QPoly pd = QPoly::monomial(1, d) - QPoly::constant(1);
      for (int e = 1; e < d; ++e)
        if (d % e == 0) pd = pd.exact_div(cache.at(e));
      phi_d = pd;
      cache.emplace(d, pd);
    } else {
      phi_d = jt->second;
    }
    p = p.exact_div(phi_d);
  }
  return cache.emplace(n, p).first->second;
}

}  // namespace qha
