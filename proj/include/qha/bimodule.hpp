#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qha/quiver.hpp"
#include "qha/report.hpp"

namespace qha {

// kG-Hopf bimodule on the arrows of a Hopf quiver
class ArrowBimodule {
 public:
  // replaces the scalar of a right action; used to build corrupted structures for negative controls
  using Twist = std::function<Scalar(const Arrow& a, const Element& h, const Scalar& value)>;

  explicit ArrowBimodule(HopfQuiver q, Twist twist = nullptr);

  const HopfQuiver& quiver() const { return quiver_; }
  const RSC& rsc() const { return quiver_.rsc(); }
  const Group& group() const { return quiver_.group(); }

  // chi_C^{(i)}(z) for z in the centralizer
  Scalar character_value(const Arrow& a, const Element& z) const;
  Arrow left_action(const Element& h, const Arrow& a) const;
  std::pair<Scalar, Arrow> right_action(const Arrow& a, const Element& h) const;
  // (t(a), a) and (a, s(a))
  std::pair<Element, Arrow> left_coaction(const Arrow& a) const { return {a.target, a}; }
  std::pair<Arrow, Element> right_coaction(const Arrow& a) const { return {a, a.source}; }

 private:
  HopfQuiver quiver_;
  Twist twist_;
};

// b <| h = h^{-1} . b . h on the arrows a^{(i)}_{u(C),1}
struct WEntry {
  std::size_t cls = 0;
  int label = 0;
  std::vector<std::pair<Element, Scalar>> values;  // h in Z_{u(C)}
  bool diagonal = true;  // a <| h stays a multiple of a
  Character recovered;
};
std::vector<WEntry> w_functor(const ArrowBimodule& b);

struct DualTerm {
  Element h;  // the functional p_h
  Scalar coeff;
  Arrow arrow;
};
// sum_h p_h (x) a_{h^{-1}y, h^{-1}x}
std::vector<DualTerm> dual_left_coaction(const ArrowBimodule& b, const Arrow& a);
// sum_h chi(zeta_theta(h^{-1})^{-1}) a_{yh^{-1}, xh^{-1}} (x) p_h
std::vector<DualTerm> dual_right_coaction(const ArrowBimodule& b, const Arrow& a);

// diagonal f(a) = chi(g_theta h_theta^{-1}) a from the structure of `from` to that of `to`
std::map<Arrow, Scalar> coset_change_iso(const ArrowBimodule& from, const ArrowBimodule& to);

CheckResult check_bimodule_axioms(const ArrowBimodule& b);
CheckResult check_pointed(const ArrowBimodule& b);
CheckResult check_w_round_trip(const ArrowBimodule& b);
CheckResult check_dual_pairing(const ArrowBimodule& b);
CheckResult check_intertwines(const ArrowBimodule& from, const ArrowBimodule& to, const std::map<Arrow, Scalar>& f);

}  // namespace qha
