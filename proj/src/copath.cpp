#include "qha/copath.hpp"

#include <stdexcept>

#include "qha/qcomb.hpp"

namespace qha {

CopathAlgebra::CopathAlgebra(ArrowBimodule b, std::size_t cutoff) : bim_(std::move(b)), cutoff_(cutoff) {}

PathElement CopathAlgebra::multiply(const Path& a, const Path& b) const {
  const std::size_t n = a.length(), m = b.length();
  if (n + m > cutoff_) throw std::out_of_range("product degree " + std::to_string(n + m) + " exceeds cutoff");
  const Group& G = group();
  PathElement out;
  for (const auto& d : thin_splits(static_cast<int>(n), static_cast<int>(m), static_cast<int>(std::max<std::size_t>(12, cutoff_)))) {
    Scalar c(1);
    Path p;
    p.start = G.mul(a.start, b.start);
    std::size_t ia = 0, ib = 0;
    for (int bit : d) {
      if (bit == 1) {
        const Element& bv = ib == 0 ? b.start : b.arrows[ib - 1].target;
        auto [s, arr] = bim_.right_action(a.arrows[ia++], bv);
        c *= s;
        p.arrows.push_back(std::move(arr));
      } else {
        const Element& av = ia == 0 ? a.start : a.arrows[ia - 1].target;
        p.arrows.push_back(bim_.left_action(av, b.arrows[ib++]));
      }
      const Element& prev = p.arrows.size() == 1 ? p.start : p.arrows[p.arrows.size() - 2].target;
      if (p.arrows.back().source != prev) throw std::logic_error("thin-split product produced a broken path");
    }
    add_to(out, p, c);
  }
  return out;
}

PathElement CopathAlgebra::multiply(const PathElement& a, const PathElement& b) const {
  return bilinear(a, b, [this](const Path& x, const Path& y) { return multiply(x, y); });
}

PathTensor CopathAlgebra::comultiply(const Path& p) const {
  PathTensor out;
  const std::size_t n = p.length();
  for (std::size_t k = 0; k <= n; ++k) add_to(out, std::make_pair(p.slice(k, n), p.slice(0, k)), Scalar(1));
  return out;
}

PathElement CopathAlgebra::antipode(const Path& p) const {
  auto it = antipode_cache_.find(p);
  if (it != antipode_cache_.end()) return it->second;
  const Group& G = group();
  PathElement out;
  if (p.length() == 0) {
    out = single(Path::vertex(G.inv(p.start)));
  } else {
    // S(p) s(p) + sum_{k>=1} S(p_{>k}) p_{<=k} = 0
    const std::size_t n = p.length();
    PathElement acc;
    for (std::size_t k = 1; k <= n; ++k) add_all(acc, multiply(antipode(p.slice(k, n)), single(p.slice(0, k))));
    out = multiply(acc, single(Path::vertex(G.inv(p.start))));
    for (auto& [q, c] : out) c = -c;
  }
  antipode_cache_.emplace(p, out);
  return out;
}

PathElement CopathAlgebra::antipode(const PathElement& x) const {
  PathElement out;
  for (const auto& [p, c] : x) add_all(out, antipode(p), c);
  return out;
}

HopfOps<Path> CopathAlgebra::ops() const {
  HopfOps<Path> o;
  o.mul = [this](const Path& a, const Path& b) { return multiply(a, b); };
  o.delta = [this](const Path& p) { return comultiply(p); };
  o.eps = [this](const Path& p) { return counit(p); };
  o.antipode = [this](const Path& p) { return antipode(p); };
  o.degree = [](const Path& p) { return static_cast<int>(p.length()); };
  o.render = [this](const Path& p) { return quiver().render(p); };
  o.unit = Path::vertex(group().identity());
  return o;
}

std::string CopathAlgebra::render(const PathElement& x) const {
  return render_lin<Path>(x, [this](const Path& p) { return quiver().render(p); });
}

Path power_path(const HopfQuiver& q, int label, const Element& h, const Element& g, int m) {
  const Group& G = q.group();
  Path p = Path::vertex(h);
  Element x = h;
  for (int k = 0; k < m; ++k) {
    Element y = G.mul(x, g);
    p.arrows.push_back(q.arrow(y, x, label));
    x = y;
  }
  return p;
}

PowerProduct product_along_powers(const CopathAlgebra& alg, int label, const std::vector<long>& exponents) {
  const HopfQuiver& q = alg.quiver();
  const Group& G = q.group();
  const auto& rc = q.rsc().class_of_label(label);
  if (rc.cls.members.size() != 1 || !G.is_central(rc.cls.rep)) throw std::invalid_argument("power products need a central class");
  const Element g = rc.cls.rep;
  const int m = static_cast<int>(exponents.size());
  if (m < 1) throw std::invalid_argument("power product needs at least one factor");
  const Scalar qv = alg.bimodule().character_value(q.arrow(g, G.identity(), label), g);

  PathElement prod = single(Path::of(q.arrow(G.pow(g, exponents[0] + 1), G.pow(g, exponents[0]), label)));
  for (int k = 1; k < m; ++k) {
    const long i = exponents[static_cast<std::size_t>(k)];
    prod = alg.multiply(single(Path::of(q.arrow(G.pow(g, i + 1), G.pow(g, i), label))), prod);
  }
  long alpha = 0, beta = 0, partial = 0;
  for (int k = 0; k < m; ++k) {
    alpha += exponents[static_cast<std::size_t>(k)];
    if (k < m - 1) {
      partial += exponents[static_cast<std::size_t>(k)];
      beta += partial;
    }
  }
  PowerProduct r;
  r.product = prod;
  r.scalar = qv.pow(beta) * q_factorial(m, qv, QConvention::gauss);
  r.factorial_form = qv.pow(beta + m * (m - 1) / 2) * s_m_polynomial(m, qv.inverse());
  add_to(r.expected, power_path(q, label, G.pow(g, alpha), g, m), r.scalar);
  r.ok = r.product == r.expected && r.scalar == r.factorial_form;
  return r;
}

std::vector<CheckResult> verify_bialgebra(const CopathAlgebra& alg, int degree) {
  if (static_cast<std::size_t>(degree) > alg.cutoff()) throw std::out_of_range("verification degree exceeds cutoff");
  std::vector<Path> basis;
  for (int k = 0; k <= degree; ++k)
    for (auto& p : alg.quiver().paths(static_cast<std::size_t>(k))) basis.push_back(std::move(p));
  return verify_hopf(alg.ops(), basis, degree);
}

}  // namespace qha
