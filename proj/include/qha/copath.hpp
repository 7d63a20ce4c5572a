#pragma once

#include <map>
#include <vector>

#include "qha/bimodule.hpp"
#include "qha/linear.hpp"
#include "qha/quiver.hpp"

namespace qha {

using PathElement = Lin<Path>;
using PathTensor = Tensor<Path>;

// co-path Hopf algebra kQ^c, truncated at a degree cutoff
class CopathAlgebra {
 public:
  explicit CopathAlgebra(ArrowBimodule b, std::size_t cutoff = 4);

  const ArrowBimodule& bimodule() const { return bim_; }
  const HopfQuiver& quiver() const { return bim_.quiver(); }
  const Group& group() const { return bim_.group(); }
  std::size_t cutoff() const { return cutoff_; }

  // thin-split product; throws std::out_of_range past the cutoff
  PathElement multiply(const Path& a, const Path& b) const;
  PathElement multiply(const PathElement& a, const PathElement& b) const;
  PathTensor comultiply(const Path& p) const;
  Scalar counit(const Path& p) const { return p.length() == 0 ? Scalar(1) : Scalar(0); }
  PathElement antipode(const Path& p) const;
  PathElement antipode(const PathElement& x) const;

  HopfOps<Path> ops() const;
  std::string render(const PathElement& x) const;

 private:
  ArrowBimodule bim_;
  std::size_t cutoff_;
  mutable std::map<Path, PathElement> antipode_cache_;
};

// P^{(label)}_h(g, m) = a_{h g^m, h g^{m-1}} ... a_{h g, h}
Path power_path(const HopfQuiver& q, int label, const Element& h, const Element& g, int m);

struct PowerProduct {
  PathElement product;  // computed with multiply
  PathElement expected;  // q^{beta_m} (m)_q! P
  Scalar scalar;  // q^{beta_m} (m)_q!
  Scalar factorial_form;  // q^{beta_m + m(m-1)/2} S_m(q^{-1})
  bool ok = false;
};
// product a_{g^{i_m+1}, g^{i_m}} ... a_{g^{i_1+1}, g^{i_1}} for exponents (i_1, ..., i_m)
PowerProduct product_along_powers(const CopathAlgebra& alg, int label, const std::vector<long>& exponents);

std::vector<CheckResult> verify_bialgebra(const CopathAlgebra& alg, int degree);

}  // namespace qha
