#pragma once

#include <string>
#include <vector>

#include "qha/braided.hpp"
#include "qha/semipath.hpp"
#include "qha/structure.hpp"

namespace qha {

// K^h X_{j_1} ... X_{j_s}; the K-monomial is stored as the group element h with K_i = xi_i
struct UWord {
  Element k;
  std::vector<int> x;
  auto operator<=>(const UWord&) const = default;
};
using UElement = Lin<UWord>;

struct Relator {
  std::string name;
  std::size_t i = 0, j = 0;
  SemipathElement element;
};

// generators of I in kQ^s: commutator relators and q-Serre relators
std::vector<Relator> build_ideal(const FLData& fl, const SemipathAlgebra& alg);

struct URelation {
  std::string name;
  UElement lhs_minus_rhs;
  std::string text;
};

// U with rewriting rules whose left sides are deglex-leading words
class QuantumGroup {
 public:
  explicit QuantumGroup(FLData fl);

  const FLData& fl() const { return fl_; }
  const Group& group() const { return fl_.esc.group; }
  std::vector<std::string> generators() const;
  const std::vector<URelation>& relations() const { return relations_; }
  std::size_t serre_count() const { return serre_count_; }

  UElement K(const Element& h) const { return single(UWord{h, {}}); }
  UElement X(std::size_t j) const { return single(UWord{group().identity(), {static_cast<int>(j)}}); }
  // X_j K^h = chi_j(h) K^h X_j
  UElement multiply(const UWord& a, const UWord& b) const;
  UElement multiply(const UElement& a, const UElement& b) const;
  UElement reduce(const UElement& x) const;

  Tensor<UWord> comultiply(const UWord& w) const;
  Scalar counit(const UWord& w) const { return w.x.empty() ? Scalar(1) : Scalar(0); }
  UElement antipode_generator(std::size_t j) const;

  // exponents of a group element in the xi basis of J1
  std::vector<long> xi_coordinates(const Element& h) const;
  std::string render(const UWord& w) const;
  std::string render(const UElement& x) const;

 private:
  struct Rule {
    std::vector<int> lead;
    UElement replacement;
  };
  void add_relation(std::string name, UElement rel, std::vector<int> lead, Scalar lead_coeff);

  FLData fl_;
  std::vector<Rule> rules_;
  std::vector<URelation> relations_;
  std::size_t serre_count_ = 0;
};

// Phi(g) = K^g, Phi(a^{(j)}_{h g_j, h}) = Phi(h) K_{base j} X_j
UElement phi_map(const QuantumGroup& u, const TensorWord& w);
UElement phi_map(const QuantumGroup& u, const SemipathElement& x);
// Psi(K^h) = h, Psi(X_j) = xi_{base j}^{-1} E_j
SemipathElement psi_map(const QuantumGroup& u, const SemipathAlgebra& alg, const UWord& w);
SemipathElement psi_map(const QuantumGroup& u, const SemipathAlgebra& alg, const UElement& x);

// the relators come from ideal_fl, which may differ from the data of U in negative controls
CheckResult verify_phi_kills_I(const QuantumGroup& u, const FLData& ideal_fl);
std::vector<CheckResult> psi_phi_roundtrip(const QuantumGroup& u);
// chi_i(xi_j) = chi_j(xi_i) within every block, J1 and J2 together
CheckResult check_xi_symmetry(const FLData& fl);
// textbook U_Q(sl2) with E = X_1, F = -X_2, K = K_1^2, Q = chi_1(xi_1)^{-1}
CheckResult sl2_textbook_match(const QuantumGroup& u);

// x_1, x_2 with delta(x_j) = g_j (x) x_j and h . x_j = chi_j(h^{-1}) x_j
struct SerreData {
  ESC esc;  // two entries
  long r = 1;
};
std::vector<CheckResult> serre_primitive_check(const SerreData& s);
// sqrt(chi_2(g_1)) x_1 x_2 - sqrt(chi_1(g_2)) x_2 x_1
std::vector<CheckResult> serre_pair_check(const SerreData& s);

// FL-quantum-group data from a symmetrizable Cartan matrix; throws std::invalid_argument otherwise
FLData cartan_to_esc(const std::vector<std::vector<long>>& A, const std::vector<long>& d, const Scalar& q);

}  // namespace qha
