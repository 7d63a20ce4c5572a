#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qha/bimodule.hpp"
#include "qha/linear.hpp"
#include "qha/structure.hpp"

namespace qha {

// the arrow a^{(label)}_{y,1}
struct Letter {
  int label = 0;
  Element y;
  auto operator<=>(const Letter&) const = default;
};

// g . L_1 (x) ... (x) L_t over kG
struct TensorWord {
  Element g;
  std::vector<Letter> letters;

  std::size_t degree() const { return letters.size(); }
  auto operator<=>(const TensorWord&) const = default;
};

using SemipathElement = Lin<TensorWord>;
using SemipathTensor = Tensor<TensorWord>;

// semi-path Hopf algebra kQ^s = T_kG(kQ_1^c), with Delta(a) = a (x) s(a) + t(a) (x) a
class SemipathAlgebra {
 public:
  explicit SemipathAlgebra(ArrowBimodule b, std::size_t cutoff = 4);
  static SemipathAlgebra from_esc(const ESC& e, std::size_t cutoff = 4);

  const ArrowBimodule& bimodule() const { return bim_; }
  const HopfQuiver& quiver() const { return bim_.quiver(); }
  const Group& group() const { return bim_.group(); }
  std::size_t cutoff() const { return cutoff_; }
  bool central() const { return central_; }

  TensorWord vertex(const Element& g) const { return TensorWord{g, {}}; }
  // E_label = a^{(label)}_{u(C),1}
  TensorWord generator(int label) const;
  // L . h = c h . L'
  std::pair<Scalar, Letter> push(const Letter& l, const Element& h) const;

  std::pair<Scalar, TensorWord> multiply_words(const TensorWord& u, const TensorWord& v) const;
  SemipathElement multiply(const TensorWord& u, const TensorWord& v) const;
  SemipathElement multiply(const SemipathElement& a, const SemipathElement& b) const;
  SemipathTensor comultiply(const TensorWord& w) const;
  Scalar counit(const TensorWord& w) const { return w.letters.empty() ? Scalar(1) : Scalar(0); }
  SemipathElement antipode(const TensorWord& w) const;
  HopfOps<TensorWord> ops() const;

  // all words of one degree with leading element in gs
  std::vector<TensorWord> words(const std::vector<Element>& gs, std::size_t degree) const;

  std::string render(const TensorWord& w) const;
  std::string render(const SemipathElement& x) const;
  // "g^[1] * E1 * E3"; general letters as "a2[y]"
  TensorWord parse(std::string_view text) const;

 private:
  ArrowBimodule bim_;
  std::size_t cutoff_;
  bool central_;
};

// basis of (kQ^s)^{co kG} through a degree: pure arrow tensors
std::vector<TensorWord> coinvariants_basis(const SemipathAlgebra& alg, std::size_t cutoff);

// Delta_R(r) = sum r_(1) S(pi(r_(2))) (x) r_(3) on the diagram
SemipathTensor diagram_comultiply(const SemipathAlgebra& alg, const TensorWord& r);

std::vector<CheckResult> verify_semipath(const SemipathAlgebra& alg, const std::vector<Element>& window, int degree);

}  // namespace qha
