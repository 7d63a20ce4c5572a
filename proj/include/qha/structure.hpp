#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/character.hpp"
#include "qha/group.hpp"

namespace qha {

struct RSCClass {
  ConjClass cls;
  std::vector<int> labels;  // I_C(r), 1-based and unique across classes
  std::vector<Character> chars;  // characters of Z_{u(C)}
  std::size_t r() const { return chars.size(); }
};

// Ramification system with characters; only classes with r_C > 0 are stored, ordered by u(C).
struct RSC {
  Group group;
  std::vector<RSCClass> classes;

  std::size_t total_r() const;
  // the class entry containing an element, or nullptr when r_C = 0
  const RSCClass* find_class(const Element& member) const;
  const RSCClass& class_of_label(int label) const;
  std::size_t position_of_label(int label) const;
  bool is_central() const;
  void validate() const;
  std::string str() const;
};

// Element system with characters; J = 0..size()-1, displayed 1-based.
struct ESC {
  Group group;
  std::vector<Element> g;
  std::vector<Character> chi;

  std::size_t size() const { return g.size(); }
  // chi_i(g_j)
  Scalar q(std::size_t i, std::size_t j) const { return chi[i](g[j]); }
  void validate() const;
  std::string str() const;
};

// r_C per class, the class named by any member
using Ramification = std::vector<std::pair<Element, int>>;

RSC make_rsc(const Group& g, const std::vector<std::pair<Element, std::vector<Character>>>& data);
RSC esc_to_crsc(const ESC& e);
ESC crsc_to_esc(const RSC& r);

struct RSCWitness {
  GroupMap phi;
  std::vector<Element> h;  // h_C per class of the source
  std::vector<std::vector<std::size_t>> match;  // phi_C as positions in the target class
};
std::optional<RSCWitness> rsc_isomorphic(const RSC& a, const RSC& b, long bound = 64);

struct ESCWitness {
  GroupMap phi;
  std::vector<std::size_t> sigma;
};
std::optional<ESCWitness> esc_isomorphic(const ESC& a, const ESC& b, long bound = 64);

// pairwise non-isomorphic representatives; abelian groups in invariant-factor form use canonical encodings,
// other finite groups an exhaustive search in enumeration order
std::vector<RSC> classify_rsc(const Group& g, const Ramification& r, long bound = 200000);

enum class Commutativity { commutative, weakly_commutative, neither };
Commutativity quantum_commutativity(const ESC& e);
std::string to_string(Commutativity c);

// ESC with Cartan data. J = 0..2n-1 with J1 = 0..n-1 and sigma(i) = i + n.
struct FLData {
  ESC esc;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> blocks;  // partition of J1
  std::vector<Scalar> q;  // q_u per block
  std::vector<long> d;  // per J1 index
  std::vector<std::vector<long>> A;  // J1 x J1
  std::vector<Element> xi;  // per J index
  std::vector<std::vector<long>> r;  // J x J, diagonal unused

  std::size_t sigma(std::size_t i) const { return i + n; }
  bool in_j1(std::size_t i) const { return i < n; }
  std::size_t base(std::size_t i) const { return i < n ? i : i - n; }
  std::size_t block_of(std::size_t i) const;
};

struct FLReport {
  std::array<bool, 7> pass{};
  std::vector<std::string> failures;
  bool matrix_type = false;
  bool fl_type = false;
  bool free_type = false;
  bool quantum_group_type = false;
  std::string type() const;
  bool local = false;
};

FLReport validate_fl(const FLData& fl);

}  // namespace qha
