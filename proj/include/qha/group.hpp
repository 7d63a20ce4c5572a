#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qha {

// Cayley elements are {index}; abelian and free abelian elements are exponent vectors.
struct Element {
  std::vector<long> v;
  auto operator<=>(const Element&) const = default;
};

struct ConjClass {
  Element rep;
  std::vector<Element> members;
  std::vector<Element> centralizer;
  bool contains(const Element& x) const;
  bool operator==(const ConjClass& o) const { return rep == o.rep; }
};

class Group {
 public:
  enum class Kind { cayley, abelian, free_abelian };

  // table[a][b] = index of a*b; validated as a group table
  static Group cayley(std::vector<std::vector<int>> table);
  static Group abelian(std::vector<long> factors);
  static Group free_abelian(int rank);
  static Group cyclic(long n) { return abelian({n}); }

  Kind kind() const;
  bool finite() const { return kind() != Kind::free_abelian; }
  bool is_abelian() const;
  long order() const;
  int rank() const;
  const std::vector<long>& factors() const;
  const std::vector<Element>& elements() const;

  Element identity() const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, long k) const;
  Element conj(const Element& g, const Element& x) const;  // g^{-1} x g
  long index_of(const Element& a) const;
  bool contains(const Element& a) const;
  bool is_central(const Element& a) const;
  // 0 when a has infinite order
  long element_order(const Element& a) const;
  // k-th standard generator of an abelian or free abelian group
  Element generator(int k) const;

  std::vector<ConjClass> conjugacy_classes() const;
  ConjClass class_of(const Element& x) const;
  std::vector<Element> centralizer(const Element& x) const;

  std::string render(const Element& a) const;
  Element parse(std::string_view text) const;

  bool operator==(const Group& o) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Right cosets Z_{u(C)} g_theta with g_0 = 1.
class CosetSystem {
 public:
  CosetSystem() = default;
  CosetSystem(const Group& g, const ConjClass& cls);
  // explicit representatives; throws when they are not a transversal or the first is not 1
  CosetSystem(const Group& g, const ConjClass& cls, std::vector<Element> reps);

  const ConjClass& cls() const { return cls_; }
  const std::vector<Element>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  // theta with g_theta^{-1} u g_theta = member
  std::size_t theta_of(const Element& member) const;
  Element conjugate(std::size_t theta) const;
  // (h', theta') with g_theta h = h' g_theta'
  std::pair<Element, std::size_t> zeta(std::size_t theta, const Element& h) const;

 private:
  void index();
  Group group_;
  ConjClass cls_;
  std::vector<Element> reps_;
  bool trivial_ = false;
  std::map<Element, std::size_t> coset_of_;
  std::map<Element, std::size_t> theta_of_member_;
};

using GroupMap = std::map<Element, Element>;

// all isomorphisms a -> b, deterministic order; throws std::out_of_range above the bound
std::vector<GroupMap> isomorphisms(const Group& a, const Group& b, long bound = 64);
std::vector<GroupMap> automorphisms(const Group& g, long bound = 64);
// greedy generating set in element order
std::vector<Element> greedy_generators(const Group& g, const std::vector<Element>& subgroup);

}  // namespace qha
