#include "qha/character.hpp"

#include <numeric>
#include <stdexcept>

namespace qha {

Character Character::from_exponents(const Group& g, std::vector<long> exps) {
  if (g.kind() != Group::Kind::abelian) throw std::invalid_argument("exponent characters need an abelian group");
  const auto& f = g.factors();
  if (exps.size() != f.size()) throw std::invalid_argument("character exponent row has wrong length");
  for (std::size_t k = 0; k < exps.size(); ++k) exps[k] = ((exps[k] % f[k]) + f[k]) % f[k];
  Character c;
  c.group_ = g;
  c.domain_ = g.elements();
  for (const auto& x : c.domain_) {
    Scalar val(1);
    for (std::size_t k = 0; k < f.size(); ++k) val *= Scalar::zeta(static_cast<int>(f[k]), exps[k] * x.v[k]);
    c.table_.emplace(x, val);
  }
  c.exps_ = std::move(exps);
  return c;
}

Character Character::from_generator_values(const Group& g, std::vector<Scalar> values) {
  if (g.kind() != Group::Kind::free_abelian) throw std::invalid_argument("generator values need a free abelian group");
  if (values.size() != static_cast<std::size_t>(g.rank())) throw std::invalid_argument("wrong number of generator values");
  for (const auto& v : values)
    if (v.is_zero()) throw std::invalid_argument("character value must be invertible");
  Character c;
  c.group_ = g;
  c.free_ = true;
  c.gen_values_ = std::move(values);
  return c;
}

Character Character::on_subgroup(const Group& g, const std::vector<Element>& subgroup, const std::vector<long>& exps) {
  const auto gens = greedy_generators(g, subgroup);
  if (gens.size() != exps.size())
    throw std::invalid_argument("centralizer character needs " + std::to_string(gens.size()) + " exponents");
  std::vector<Scalar> gv;
  for (std::size_t k = 0; k < gens.size(); ++k)
    gv.push_back(Scalar::zeta(static_cast<int>(g.element_order(gens[k])), exps[k]));
  std::map<Element, Scalar> table{{g.identity(), Scalar(1)}};
  std::vector<Element> queue{g.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = g.mul(x, gens[k]);
      Scalar val = table.at(x) * gv[k];
      auto [it, fresh] = table.emplace(y, val);
      if (fresh)
        queue.push_back(y);
      else if (!(it->second == val))
        throw std::invalid_argument("exponents do not define a character of the centralizer");
    }
  }
  Character c = from_table(g, std::move(table));
  c.exps_ = exps;
  return c;
}

Character Character::from_table(const Group& g, std::map<Element, Scalar> values) {
  Character c;
  c.group_ = g;
  for (const auto& [x, v] : values) c.domain_.push_back(x);
  c.table_ = std::move(values);
  if (!c.verify_multiplicative()) throw std::invalid_argument("character table is not multiplicative");
  return c;
}

Character Character::trivial(const Group& g, const std::vector<Element>& domain) {
  if (!g.finite()) return from_generator_values(g, std::vector<Scalar>(static_cast<std::size_t>(g.rank()), Scalar(1)));
  if (g.kind() == Group::Kind::abelian && domain.size() == g.elements().size())
    return from_exponents(g, std::vector<long>(g.factors().size(), 0));
  std::map<Element, Scalar> t;
  for (const auto& x : domain) t.emplace(x, Scalar(1));
  Character c = from_table(g, std::move(t));
  c.exps_ = std::vector<long>(greedy_generators(g, domain).size(), 0);
  return c;
}

Scalar Character::operator()(const Element& x) const {
  if (free_) {
    Scalar r(1);
    for (std::size_t k = 0; k < gen_values_.size(); ++k)
      if (x.v[k] != 0) r *= gen_values_[k].pow(x.v[k]);
    return r;
  }
  auto it = table_.find(x);
  if (it == table_.end()) throw std::out_of_range("element " + group_.render(x) + " outside character domain");
  return it->second;
}

Character Character::operator*(const Character& o) const {
  Character c = *this;
  if (free_) {
    for (std::size_t k = 0; k < c.gen_values_.size(); ++k) c.gen_values_[k] *= o.gen_values_[k];
    return c;
  }
  for (auto& [x, v] : c.table_) v *= o(x);
  if (!c.exps_.empty() && c.exps_.size() == o.exps_.size()) {
    if (group_.kind() == Group::Kind::abelian && domain_.size() == group_.elements().size()) {
      for (std::size_t k = 0; k < c.exps_.size(); ++k)
        c.exps_[k] = (c.exps_[k] + o.exps_[k]) % group_.factors()[k];
    } else {
      c.exps_.clear();
    }
  } else {
    c.exps_.clear();
  }
  return c;
}

Character Character::inverse() const {
  Character c = *this;
  if (free_) {
    for (auto& v : c.gen_values_) v = v.inverse();
    return c;
  }
  for (auto& [x, v] : c.table_) v = v.inverse();
  if (group_.kind() == Group::Kind::abelian && !c.exps_.empty() && domain_.size() == group_.elements().size())
    for (std::size_t k = 0; k < c.exps_.size(); ++k) c.exps_[k] = (group_.factors()[k] - c.exps_[k]) % group_.factors()[k];
  else
    c.exps_.clear();
  return c;
}

Character Character::pullback(const Group& src, const std::vector<Element>& src_domain, const GroupMap& f) const {
  std::map<Element, Scalar> t;
  for (const auto& x : src_domain) t.emplace(x, (*this)(f.at(x)));
  return from_table(src, std::move(t));
}

bool Character::verify_multiplicative() const {
  if (free_) return true;
  for (const auto& [a, va] : table_)
    for (const auto& [b, vb] : table_) {
      auto it = table_.find(group_.mul(a, b));
      if (it == table_.end() || !(it->second == va * vb)) return false;
    }
  return true;
}

std::string Character::str() const {
  if (free_) {
    std::string s = "chi(";
    for (std::size_t k = 0; k < gen_values_.size(); ++k) {
      if (k) s += ", ";
      s += gen_values_[k].str();
    }
    return s + ")";
  }
  if (!exps_.empty() || group_.kind() == Group::Kind::abelian) {
    std::string s = "chi[";
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(exps_[k]);
    }
    return s + "]";
  }
  std::string s = "chi{";
  bool first = true;
  for (const auto& [x, v] : table_) {
    if (!first) s += ", ";
    first = false;
    s += group_.render(x) + ":" + v.str();
  }
  return s + "}";
}

bool operator==(const Character& a, const Character& b) {
  if (a.free_ != b.free_) return false;
  if (a.free_) return a.gen_values_ == b.gen_values_;
  return a.table_ == b.table_;
}

std::vector<Character> dual_group(const Group& g) {
  if (g.kind() != Group::Kind::abelian) throw std::invalid_argument("dual group needs an abelian group in invariant-factor form");
  std::vector<Character> out;
  for (const auto& x : g.elements()) out.push_back(Character::from_exponents(g, x.v));
  return out;
}

}  // namespace qha
