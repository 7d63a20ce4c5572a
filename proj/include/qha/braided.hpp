#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qha/linear.hpp"
#include "qha/semipath.hpp"
#include "qha/structure.hpp"

namespace qha {

// V(G, g_i, chi_i): h . x_i = chi_i(h) x_i, delta(x_i) = g_i (x) x_i
struct YDModule {
  ESC data;

  Scalar action(const Element& h, std::size_t i) const { return data.chi[i](h); }
  const Element& coaction(std::size_t i) const { return data.g[i]; }
  // delta(h.x) = h x_(-1) h^{-1} (x) h.x_(0) on the basis
  CheckResult check_yd() const;
};

enum class Flavor { tensor, symmetric, linear };
std::string to_string(Flavor f);

// letters are 0-based indices into J
using BWord = std::vector<int>;
using BElement = Lin<BWord>;
using BTensor = Tensor<BWord>;

// quantum tensor algebra T, quantum symmetric algebra S or quantum linear space R on V
class BraidedAlgebra {
 public:
  BraidedAlgebra(ESC data, Flavor flavor, std::size_t cutoff = 4);

  const ESC& data() const { return data_; }
  Flavor flavor() const { return flavor_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t size() const { return data_.size(); }

  // c(x_i (x) x_j) = chi_j(g_i) x_j (x) x_i
  Scalar braid(int i, int j) const { return data_.chi[static_cast<std::size_t>(j)](data_.g[static_cast<std::size_t>(i)]); }
  // c(u (x) v) = braid_words(u, v) v (x) u
  Scalar braid_words(const BWord& u, const BWord& v) const;
  // order of chi_i(g_i), 0 when infinite
  long nilpotency(int i) const;
  Element degree_element(const BWord& w) const;
  Scalar act(const Element& h, const BWord& w) const;

  BElement reduce(const BWord& w) const;
  BElement reduce(const BElement& x) const;
  BElement multiply(const BWord& u, const BWord& v) const;
  BElement multiply(const BElement& a, const BElement& b) const;
  BTensor comultiply(const BWord& w) const;
  BTensor comultiply(const BElement& x) const;
  Scalar counit(const BWord& w) const { return w.empty() ? Scalar(1) : Scalar(0); }
  BElement antipode(const BWord& w) const;
  // (a (x) b)(c (x) d) = braid_words(b, c) ac (x) bd
  BTensor tensor_multiply(const BTensor& x, const BTensor& y) const;

  // normal-form words of one degree
  std::vector<BWord> basis(std::size_t degree) const;
  std::string render(const BWord& w) const;
  std::string render(const BElement& x) const;
  std::string render(const BTensor& t) const;

 private:
  ESC data_;
  Flavor flavor_;
  std::size_t cutoff_;
  std::vector<long> nil_;
};

// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on x_i (x) x_j (x) x_k
CheckResult check_braid_relation(const BraidedAlgebra& alg);
// coassociativity, counit, braided multiplicativity of Delta, antipode
std::vector<CheckResult> verify_braided(const BraidedAlgebra& alg, int degree);
// Delta of each relator vanishes modulo the relations
CheckResult check_relations_descend(const BraidedAlgebra& alg, int degree);

bool is_primitive(const BraidedAlgebra& alg, const BElement& x);
// basis of the primitives among normal-form elements of one degree
std::vector<BElement> primitives(const BraidedAlgebra& alg, std::size_t degree);

// R # kG
using BiWord = std::pair<BWord, Element>;
class Biproduct {
 public:
  explicit Biproduct(BraidedAlgebra r) : r_(std::move(r)) {}
  const BraidedAlgebra& braided() const { return r_; }
  const Group& group() const { return r_.data().group; }

  Lin<BiWord> multiply(const BiWord& a, const BiWord& b) const;
  Tensor<BiWord> comultiply(const BiWord& a) const;
  Scalar counit(const BiWord& a) const { return a.first.empty() ? Scalar(1) : Scalar(0); }
  Lin<BiWord> antipode(const BiWord& a) const;
  HopfOps<BiWord> ops() const;
  std::string render(const BiWord& a) const;

 private:
  BraidedAlgebra r_;
};

std::vector<CheckResult> verify_biproduct(const Biproduct& b, const std::vector<Element>& window, int degree);

// h |> E_j = h E_j h^{-1} in kQ^s; returns V with the recovered characters
YDModule adjoint_arrow_module(const ESC& e);
CheckResult check_adjoint_is_dual(const ESC& e);

struct YDTables {
  Group group;
  std::size_t dim = 0;
  // action[h][row][col] for h in G
  std::map<Element, std::vector<std::vector<Scalar>>> action;
  // coaction[k] = list of (h, vector w) with delta(v_k) = sum h (x) w
  std::vector<std::vector<std::pair<Element, std::vector<Scalar>>>> coaction;
};
// throws std::invalid_argument for non-pointed input
ESC pointed_yd_decompose(const YDTables& t);
YDTables yd_tables(const YDModule& m);

// diag(kQ^s) against T(G, g_i, chi_i^{-1}) via E_j -> x_j: products, Delta, action and coaction
std::vector<CheckResult> check_diagram_tensor(const ESC& e, int degree);

}  // namespace qha
