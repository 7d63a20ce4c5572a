#include "qha/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qha {

namespace {

// Pivot rows and inverse used to express an element of Q(zeta_L) in the subfield Q(zeta_d).
struct SubfieldSolver {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<mpq_class>> inv;  // phi(d) x phi(d)
  std::vector<std::vector<mpq_class>> basis;  // columns: reduced x^{(L/d) j}
};

const SubfieldSolver& subfield_solver(int L, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SubfieldSolver> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(L, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const QPoly& phiL = cyclotomic_polynomial(L);
  const std::size_t nL = static_cast<std::size_t>(euler_phi(L));
  const std::size_t nd = static_cast<std::size_t>(euler_phi(d));
  SubfieldSolver s;
  s.basis.resize(nd);
  for (std::size_t j = 0; j < nd; ++j) {
    QPoly col = QPoly::monomial(1, (L / d) * j).mod(phiL);
    s.basis[j].resize(nL);
    for (std::size_t i = 0; i < nL; ++i) s.basis[j][i] = col.coeff(i);
  }
  // greedy independent rows of the nL x nd matrix
  std::vector<std::vector<mpq_class>> echelon;
  std::vector<std::size_t> lead_cols;
  for (std::size_t i = 0; i < nL && s.pivots.size() < nd; ++i) {
    std::vector<mpq_class> row(nd);
    for (std::size_t j = 0; j < nd; ++j) row[j] = s.basis[j][i];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const mpq_class f = row[lead_cols[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < nd; ++j) row[j] -= f * echelon[k][j];
    }
    std::size_t lc = nd;
    for (std::size_t j = 0; j < nd; ++j)
      if (sgn(row[j]) != 0) {
        lc = j;
        break;
      }
    if (lc == nd) continue;
    const mpq_class inv_lead = 1 / row[lc];
    for (auto& x : row) x *= inv_lead;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const mpq_class f = echelon[k][lc];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < nd; ++j) echelon[k][j] -= f * row[j];
    }
    echelon.push_back(row);
    lead_cols.push_back(lc);
    s.pivots.push_back(i);
  }
  // invert the square submatrix on the pivot rows by Gauss-Jordan
  std::vector<std::vector<mpq_class>> a(nd, std::vector<mpq_class>(2 * nd));
  for (std::size_t r = 0; r < nd; ++r) {
    for (std::size_t j = 0; j < nd; ++j) a[r][j] = s.basis[j][s.pivots[r]];
    a[r][nd + r] = 1;
  }
  for (std::size_t c = 0; c < nd; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    const mpq_class inv_lead = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv_lead;
    for (std::size_t r = 0; r < nd; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < 2 * nd; ++j) a[r][j] -= f * a[c][j];
    }
  }
  s.inv.assign(nd, std::vector<mpq_class>(nd));
  for (std::size_t r = 0; r < nd; ++r)
    for (std::size_t j = 0; j < nd; ++j) s.inv[r][j] = a[r][nd + j];
  return cache.emplace(key, std::move(s)).first->second;
}

std::optional<QPoly> express_in_subfield(const QPoly& p, int L, int d) {
  const SubfieldSolver& s = subfield_solver(L, d);
  const std::size_t nd = s.pivots.size();
  std::vector<mpq_class> y(nd, mpq_class(0));
  for (std::size_t r = 0; r < nd; ++r)
    for (std::size_t k = 0; k < nd; ++k) y[r] += s.inv[r][k] * p.coeff(s.pivots[k]);
  const std::size_t nL = static_cast<std::size_t>(euler_phi(L));
  for (std::size_t i = 0; i < nL; ++i) {
    mpq_class v = 0;
    for (std::size_t j = 0; j < nd; ++j) v += s.basis[j][i] * y[j];
    if (v != p.coeff(i)) return std::nullopt;
  }
  return QPoly(std::move(y));
}

bool perfect_square(const mpz_class& z) { return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

mpz_class isqrt(const mpz_class& z) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

}  // namespace

Scalar Scalar::frac(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::cyc_raw(int n, QPoly p) {
  Scalar s;
  s.mode_ = Mode::cyclotomic;
  s.n_ = n;
  s.cyc_ = p.mod(cyclotomic_polynomial(n));
  s.normalize_cyclotomic();
  return s;
}

Scalar Scalar::ratfun_raw(QPoly num, QPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  Scalar s;
  s.mode_ = Mode::rational_function;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize_ratfun();
  return s;
}

Scalar Scalar::zeta(int n, long k) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  long e = ((k % n) + n) % n;
  return cyc_raw(n, QPoly::monomial(1, static_cast<std::size_t>(e)));
}

Scalar Scalar::v() { return ratfun_raw(QPoly::x(), QPoly::constant(1)); }

Scalar Scalar::q() { return ratfun_raw(QPoly::monomial(1, 2), QPoly::constant(1)); }

Scalar Scalar::from_cyclotomic(int n, const QPoly& p) { return cyc_raw(n, p); }

Scalar Scalar::from_v_fraction(const QPoly& num, const QPoly& den) { return ratfun_raw(num, den); }

void Scalar::normalize_cyclotomic() {
  if (cyc_.degree() <= 0) {
    mpq_class c = cyc_.coeff(0);
    *this = Scalar(c);
    return;
  }
  for (int d = 2; d < n_; ++d) {
    if (n_ % d != 0 || d % 4 == 2) continue;
    auto sub = express_in_subfield(cyc_, n_, d);
    if (sub) {
      n_ = d;
      cyc_ = std::move(*sub);
      if (cyc_.degree() <= 0) *this = Scalar(cyc_.coeff(0));
      return;
    }
  }
}

void Scalar::normalize_ratfun() {
  if (num_.is_zero()) {
    *this = Scalar(0);
    return;
  }
  if (den_.is_monomial()) {
    std::size_t k = std::min<std::size_t>(num_.valuation(), static_cast<std::size_t>(den_.degree()));
    if (k > 0) {
      num_ = num_.shift_down(k);
      den_ = den_.shift_down(k);
    }
  } else {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  // scale so both are integer polynomials with coprime contents and positive leading denominator
  mpq_class cn = num_.content(), cd = den_.content();
  num_ *= mpq_class(1 / cn);
  den_ *= mpq_class(1 / cd);
  mpq_class ratio = cn / cd;  // value = ratio * num/den with primitive num, den
  if (sgn(den_.lead()) < 0) {
    den_ = -den_;
    ratio = -ratio;
  }
  num_ *= mpq_class(ratio.get_num());
  den_ *= mpq_class(ratio.get_den());
  if (num_.degree() == 0 && den_.degree() == 0) {
    mpq_class c = num_.coeff(0) / den_.coeff(0);
    *this = Scalar(c);
  }
}

QPoly Scalar::cyc_embedded(int order) const {
  if (mode_ == Mode::rational) return sgn(rat_) == 0 ? QPoly() : QPoly::constant(rat_);
  if (order % n_ != 0) throw std::logic_error("bad cyclotomic embedding");
  if (order == n_) return cyc_;
  return cyc_.compose_power(static_cast<std::size_t>(order / n_)).mod(cyclotomic_polynomial(order));
}

void Scalar::as_fraction(QPoly& num, QPoly& den) const {
  if (mode_ == Mode::rational) {
    num = sgn(rat_) == 0 ? QPoly() : QPoly::constant(rat_);
    den = QPoly::constant(1);
  } else if (mode_ == Mode::rational_function) {
    num = num_;
    den = den_;
  } else {
    throw std::domain_error("cannot mix cyclotomic and rational-function scalars");
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.cyc_ = -r.cyc_;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (mode_ == Mode::rational && o.mode_ == Mode::rational) {
    rat_ += o.rat_;
    return *this;
  }
  if (mode_ == Mode::rational_function || o.mode_ == Mode::rational_function) {
    QPoly n1, d1, n2, d2;
    as_fraction(n1, d1);
    o.as_fraction(n2, d2);
    if (d1 == d2)
      *this = ratfun_raw(n1 + n2, d1);
    else
      *this = ratfun_raw(n1 * d2 + n2 * d1, d1 * d2);
    return *this;
  }
  int a = mode_ == Mode::rational ? 1 : n_;
  int b = o.mode_ == Mode::rational ? 1 : o.n_;
  int L = std::lcm(a, b);
  *this = cyc_raw(L, cyc_embedded(L) + o.cyc_embedded(L));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (mode_ == Mode::rational && o.mode_ == Mode::rational) {
    rat_ *= o.rat_;
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar(0);
    return *this;
  }
  if (is_one()) {
    *this = o;
    return *this;
  }
  if (o.is_one()) return *this;
  if (mode_ == Mode::rational_function || o.mode_ == Mode::rational_function) {
    QPoly n1, d1, n2, d2;
    as_fraction(n1, d1);
    o.as_fraction(n2, d2);
    *this = ratfun_raw(n1 * n2, d1 * d2);
    return *this;
  }
  int a = mode_ == Mode::rational ? 1 : n_;
  int b = o.mode_ == Mode::rational ? 1 : o.n_;
  int L = std::lcm(a, b);
  *this = cyc_raw(L, cyc_embedded(L) * o.cyc_embedded(L));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  switch (mode_) {
    case Mode::rational:
      return Scalar(mpq_class(1 / rat_));
    case Mode::rational_function:
      return ratfun_raw(den_, num_);
    case Mode::cyclotomic:
      return cyc_raw(n_, QPoly::inverse_mod(cyc_, cyclotomic_polynomial(n_)));
  }
  return *this;
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode_ != b.mode_) return false;
  switch (a.mode_) {
    case Scalar::Mode::rational:
      return a.rat_ == b.rat_;
    case Scalar::Mode::cyclotomic:
      return a.n_ == b.n_ && a.cyc_ == b.cyc_;
    case Scalar::Mode::rational_function:
      return a.num_ == b.num_ && a.den_ == b.den_;
  }
  return false;
}

std::optional<long> Scalar::root_of_unity_order() const {
  if (mode_ == Mode::rational) {
    if (rat_ == 1) return 1;
    if (rat_ == -1) return 2;
    return std::nullopt;
  }
  if (mode_ == Mode::rational_function) return std::nullopt;
  const long bound = std::lcm(2L, static_cast<long>(n_));
  Scalar p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return std::nullopt;
}

std::optional<Scalar> Scalar::sqrt() const {
  switch (mode_) {
    case Mode::rational: {
      mpq_class a = abs(rat_);
      if (!perfect_square(a.get_num()) || !perfect_square(a.get_den())) return std::nullopt;
      Scalar r(mpq_class(isqrt(a.get_num()), isqrt(a.get_den())));
      if (sgn(rat_) < 0) r *= zeta(4);
      return r;
    }
    case Mode::cyclotomic: {
      auto ord = root_of_unity_order();
      if (!ord) return std::nullopt;
      const int o = static_cast<int>(*ord);
      for (int j = 0; j < o; ++j)
        if (zeta(o, j) == *this) return zeta(2 * o, j);
      return std::nullopt;
    }
    case Mode::rational_function: {
      if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
      long s = num_.degree() - den_.degree();
      if (s % 2 != 0) return std::nullopt;
      auto c = Scalar(mpq_class(num_.lead() / den_.lead())).sqrt();
      if (!c) return std::nullopt;
      return *c * v().pow(s / 2);
    }
  }
  return std::nullopt;
}

std::string Scalar::str() const {
  switch (mode_) {
    case Mode::rational:
      return rat_.get_str();
    case Mode::cyclotomic:
      return cyc_.str("zeta_" + std::to_string(n_), false);
    case Mode::rational_function:
      if (den_.degree() == 0 && den_.lead() == 1) return num_.str("v", true);
      return "(" + num_.str("v", true) + ")/(" + den_.str("v", true) + ")";
  }
  return "";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---- parsing ---------------------------------------------------------------

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("scalar parse error at " + std::to_string(pos_) + " in '" + std::string(s_) +
                                "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Scalar expr() {
    Scalar r;
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      Scalar t = term();
      r += neg ? -t : t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return r;
  }
  Scalar term() {
    Scalar r = power();
    while (true) {
      if (eat('*'))
        r *= power();
      else if (eat('/'))
        r /= power();
      else
        break;
    }
    return r;
  }
  Scalar power() {
    Scalar b = atom();
    if (eat('^')) {
      bool neg = eat('-');
      bool paren = eat('(');
      if (paren) neg = eat('-') || neg;
      long k = integer();
      if (paren && !eat(')')) fail("expected )");
      b = b.pow(neg ? -k : k);
    }
    return b;
  }
  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar r = expr();
      if (!eat(')')) fail("expected )");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (s_.compare(pos_, 5, "zeta_") == 0) {
      pos_ += 5;
      long n = integer();
      return Scalar::zeta(static_cast<int>(n));
    }
    if (c == 'v') {
      ++pos_;
      return Scalar::v();
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c == 'i' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return Scalar::zeta(4);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace qha
