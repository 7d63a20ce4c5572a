#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qha {

// Dense univariate polynomial over Q. c[i] is the coefficient of x^i; no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t deg);
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpq_class& lead() const { return c_.back(); }
  mpq_class coeff(std::size_t i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  std::size_t valuation() const;
  bool is_monomial() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  QPoly mod(const QPoly& m) const;
  QPoly exact_div(const QPoly& b) const;
  static QPoly gcd(QPoly a, QPoly b);
  // s with s*a == 1 mod m; a and m coprime.
  static QPoly inverse_mod(const QPoly& a, const QPoly& m);

  QPoly monic() const;
  QPoly shift_down(std::size_t k) const;
  QPoly shift_up(std::size_t k) const;
  QPoly compose_power(std::size_t k) const;
  // positive rational c with p/c a primitive integer polynomial (1 for zero)
  mpq_class content() const;

  std::string str(const std::string& var, bool descending) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

const QPoly& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace qha
