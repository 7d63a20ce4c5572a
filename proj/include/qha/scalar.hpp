#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qha/qpoly.hpp"

namespace qha {

// Exact coefficient: a rational number, an element of Q(zeta_N), or a rational
// function in v where q = v^2. Values are kept canonical, so == is semantic equality:
// cyclotomic elements live in their smallest field Q(zeta_N) and fall back to rationals,
// rational functions that are constant fall back to rationals.
class Scalar {
 public:
  enum class Mode { rational, cyclotomic, rational_function };

  Scalar() : rat_(0) {}
  Scalar(int n) : rat_(n) {}
  Scalar(long n) : rat_(n) {}
  Scalar(const mpq_class& r) : rat_(r) { rat_.canonicalize(); }
  static Scalar frac(long num, long den);
  static Scalar zeta(int n, long k = 1);
  static Scalar v();
  static Scalar q();
  static Scalar from_cyclotomic(int n, const QPoly& p);
  static Scalar from_v_fraction(const QPoly& num, const QPoly& den);
  static Scalar parse(std::string_view text);

  Mode mode() const { return mode_; }
  int cyclotomic_order() const { return n_; }
  bool is_zero() const { return mode_ == Mode::rational && sgn(rat_) == 0; }
  bool is_one() const { return mode_ == Mode::rational && rat_ == 1; }
  bool is_rational() const { return mode_ == Mode::rational; }
  const mpq_class& rational_value() const { return rat_; }
  const QPoly& cyclotomic_poly() const { return cyc_; }
  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long k) const;
  // multiplicative order if this is a root of unity
  std::optional<long> root_of_unity_order() const;
  // an exact square root when one is available in the supported fields
  std::optional<Scalar> sqrt() const;

  std::string str() const;

 private:
  static Scalar cyc_raw(int n, QPoly p);
  static Scalar ratfun_raw(QPoly num, QPoly den);
  void normalize_cyclotomic();
  void normalize_ratfun();
  QPoly cyc_embedded(int order) const;
  void as_fraction(QPoly& num, QPoly& den) const;

  Mode mode_ = Mode::rational;
  int n_ = 0;
  mpq_class rat_;
  QPoly cyc_;
  QPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qha
