#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qha/braided.hpp"
#include "qha/copath.hpp"
#include "qha/linear.hpp"
#include "qha/structure.hpp"

namespace qha {

// g E_1^{m_1} ... E_t^{m_t}, J in config order
struct PBWMonomial {
  Element g;
  std::vector<long> m;

  long degree() const;
  auto operator<=>(const PBWMonomial&) const = default;
};

using TaftElement = Lin<PBWMonomial>;
// a group element or the 0-based generator index
using TaftToken = std::variant<Element, int>;
using TaftWord = std::vector<TaftToken>;

// multiple Taft algebra kG[kQ_1^c, G, g_i, chi_i]
class TaftAlgebra {
 public:
  // throws std::invalid_argument unless the system is quantum weakly commutative
  explicit TaftAlgebra(ESC e);

  const ESC& esc() const { return e_; }
  const Group& group() const { return e_.group; }
  std::size_t size() const { return e_.size(); }
  // order of chi_j(g_j), 0 when infinite
  long nilpotency(std::size_t j) const { return n_.at(j); }

  PBWMonomial vertex(const Element& g) const;
  PBWMonomial generator(std::size_t j) const;

  TaftElement multiply(const PBWMonomial& a, const PBWMonomial& b) const;
  TaftElement multiply(const TaftElement& a, const TaftElement& b) const;
  TaftElement normal_form(const TaftWord& w) const;
  // rewriting with the redex chosen uniformly at random at each step
  TaftElement normal_form_random(const TaftWord& w, std::mt19937_64& rng) const;

  Tensor<PBWMonomial> comultiply(const PBWMonomial& a) const;
  Scalar counit(const PBWMonomial& a) const { return a.degree() == 0 ? Scalar(1) : Scalar(0); }
  TaftElement antipode(const PBWMonomial& a) const;
  HopfOps<PBWMonomial> ops() const;

  // PBW basis with total E-degree <= max_degree (finite groups only)
  std::vector<PBWMonomial> basis(long max_degree) const;
  // |G| N_1 ... N_t, or nullopt when infinite
  std::optional<long> dimension() const;
  std::vector<PBWMonomial> diagram_basis(long cutoff) const;

  std::string render(const PBWMonomial& a) const;
  std::string render(const TaftElement& x) const;
  std::string render(const TaftWord& w) const;
  // "g^[1] * E2 * g * E1"
  TaftWord parse(std::string_view text) const;

 private:
  ESC e_;
  std::vector<long> n_;
};

// E_j -> a^{(j)}_{g_j,1}, g -> g, computed with co-path products
PathElement to_copath(const CopathAlgebra& c, const TaftAlgebra& t, const PBWMonomial& a);
// taft multiply against co-path multiply on all basis pairs of total degree <= degree, plus injectivity
std::vector<CheckResult> check_embedding(const TaftAlgebra& t, int degree);
CheckResult check_confluence(const TaftAlgebra& t, int words, std::uint64_t seed, int max_length = 8);
std::vector<CheckResult> verify_taft(const TaftAlgebra& t, int degree);

// Delta_R on the diagram computed from the Hopf structure of the Taft algebra
Tensor<PBWMonomial> taft_diagram_comultiply(const TaftAlgebra& t, const PBWMonomial& r);
std::vector<CheckResult> nichols_check(const ESC& e, int cutoff);
std::vector<CheckResult> presentation_check(const ESC& e);

// E_i E_j = chi_j(g_i^{-1}) E_j E_i in kQ^c for each ordered pair i != j
struct CommutationEntry {
  std::size_t i = 0, j = 0;
  bool holds = false;
};
std::vector<CommutationEntry> commutation_table(const ESC& e);

// R(G, g_i, chi_i^{-1}) # kG against the Taft algebra via r # g -> r g
std::vector<CheckResult> check_biproduct_iso(const TaftAlgebra& t, int pairs, std::uint64_t seed, int degree = 3);

}  // namespace qha
