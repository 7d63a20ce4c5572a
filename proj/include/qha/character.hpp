#pragma once

#include <map>
#include <string>
#include <vector>

#include "qha/group.hpp"
#include "qha/scalar.hpp"

namespace qha {

// One-dimensional character of a group or of a finite subgroup (centralizer).
class Character {
 public:
  Character() = default;
  // abelian group: chi(g) = prod_k zeta_{n_k}^{e_k g_k}
  static Character from_exponents(const Group& g, std::vector<long> exps);
  // free abelian group: values on the standard generators
  static Character from_generator_values(const Group& g, std::vector<Scalar> values);
  // finite subgroup: exponents against greedy_generators(g, subgroup), extended by closure
  static Character on_subgroup(const Group& g, const std::vector<Element>& subgroup, const std::vector<long>& exps);
  static Character from_table(const Group& g, std::map<Element, Scalar> values);
  static Character trivial(const Group& g, const std::vector<Element>& domain);

  Scalar operator()(const Element& x) const;
  Character operator*(const Character& o) const;
  Character inverse() const;
  // chi o f for a map from another group into this domain
  Character pullback(const Group& src, const std::vector<Element>& src_domain, const GroupMap& f) const;

  const Group& group() const { return group_; }
  const std::vector<Element>& domain() const { return domain_; }
  const std::vector<long>& exponents() const { return exps_; }
  bool finite_domain() const { return !free_; }
  bool verify_multiplicative() const;
  std::string str() const;

  friend bool operator==(const Character& a, const Character& b);

 private:
  Group group_;
  bool free_ = false;
  std::vector<Element> domain_;
  std::map<Element, Scalar> table_;
  std::vector<Scalar> gen_values_;
  std::vector<long> exps_;
};

// all characters of a finite abelian group, exponent rows in lexicographic order
std::vector<Character> dual_group(const Group& g);

}  // namespace qha
