#include "qha/braided.hpp"

#include <algorithm>
#include <stdexcept>

#include "qha/linalg.hpp"

namespace qha {

namespace {

std::vector<Element> probe_elements(const Group& G) {
  if (G.finite()) return G.elements();
  std::vector<Element> out;
  for (int k = 0; k < G.rank(); ++k) {
    out.push_back(G.generator(k));
    out.push_back(G.inv(G.generator(k)));
  }
  return out;
}

Character recover_character(const Group& G, const std::map<Element, Scalar>& table) {
  if (G.finite()) return Character::from_table(G, table);
  std::vector<Scalar> values;
  for (int k = 0; k < G.rank(); ++k) values.push_back(table.at(G.generator(k)));
  return Character::from_generator_values(G, values);
}

ESC inverted(const ESC& e) {
  ESC out = e;
  for (auto& c : out.chi) c = c.inverse();
  return out;
}

}  // namespace

CheckResult YDModule::check_yd() const {
  CheckResult r{"Yetter-Drinfeld compatibility", true, 0, ""};
  const Group& G = data.group;
  for (const auto& h : probe_elements(G))
    for (std::size_t i = 0; i < data.size(); ++i) {
      ++r.checked;
      if (G.mul(G.mul(h, data.g[i]), G.inv(h)) != data.g[i])
        r.fail("delta(h.x" + std::to_string(i + 1) + ") != h g h^-1 (x) h.x at h=" + G.render(h));
    }
  return r;
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::tensor:
      return "tensor";
    case Flavor::symmetric:
      return "symmetric";
    case Flavor::linear:
      return "linear";
  }
  return "";
}

BraidedAlgebra::BraidedAlgebra(ESC data, Flavor flavor, std::size_t cutoff)
    : data_(std::move(data)), flavor_(flavor), cutoff_(cutoff) {
  data_.validate();
  for (std::size_t i = 0; i < data_.size(); ++i) {
    const auto ord = data_.q(i, i).root_of_unity_order();
    nil_.push_back(ord && *ord > 1 ? *ord : 0);
  }
  if (flavor_ != Flavor::tensor)
    for (std::size_t i = 0; i < data_.size(); ++i)
      for (std::size_t j = 0; j < data_.size(); ++j)
        if (i != j && !(data_.q(i, j) * data_.q(j, i) == Scalar(1)))
          throw std::invalid_argument("quantum symmetric algebras need a quantum weakly commutative system");
}

Scalar BraidedAlgebra::braid_words(const BWord& u, const BWord& v) const {
  Scalar c(1);
  for (int a : u)
    for (int b : v) c *= braid(a, b);
  return c;
}

long BraidedAlgebra::nilpotency(int i) const { return nil_.at(static_cast<std::size_t>(i)); }

Element BraidedAlgebra::degree_element(const BWord& w) const {
  const Group& G = data_.group;
  Element g = G.identity();
  for (int i : w) g = G.mul(g, data_.g[static_cast<std::size_t>(i)]);
  return g;
}

Scalar BraidedAlgebra::act(const Element& h, const BWord& w) const {
  Scalar c(1);
  for (int i : w) c *= data_.chi[static_cast<std::size_t>(i)](h);
  return c;
}

BElement BraidedAlgebra::reduce(const BWord& w) const {
  if (flavor_ == Flavor::tensor) return single(w);
  BWord s = w;
  Scalar c(1);
  // x_i x_j = chi_j(g_i) x_j x_i
  for (std::size_t pass = 0; pass < s.size(); ++pass)
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
      if (s[k] > s[k + 1]) {
        c *= braid(s[k], s[k + 1]);
        std::swap(s[k], s[k + 1]);
      }
  if (flavor_ == Flavor::linear) {
    for (std::size_t k = 0; k < s.size();) {
      std::size_t e = k;
      while (e < s.size() && s[e] == s[k]) ++e;
      const long n = nilpotency(s[k]);
      if (n > 0 && static_cast<long>(e - k) >= n) return {};
      k = e;
    }
  }
  return single(s, c);
}

BElement BraidedAlgebra::reduce(const BElement& x) const {
  BElement out;
  for (const auto& [w, c] : x) add_all(out, reduce(w), c);
  return out;
}

BElement BraidedAlgebra::multiply(const BWord& u, const BWord& v) const {
  if (u.size() + v.size() > cutoff_) throw std::out_of_range("product degree exceeds cutoff");
  BWord w = u;
  w.insert(w.end(), v.begin(), v.end());
  return reduce(w);
}

BElement BraidedAlgebra::multiply(const BElement& a, const BElement& b) const {
  return bilinear(a, b, [this](const BWord& x, const BWord& y) { return multiply(x, y); });
}

BTensor BraidedAlgebra::tensor_multiply(const BTensor& x, const BTensor& y) const {
  BTensor out;
  for (const auto& [ab, c1] : x)
    for (const auto& [cd, c2] : y) {
      const Scalar s = braid_words(ab.second, cd.first);
      const BElement l = multiply(ab.first, cd.first);
      if (l.empty()) continue;
      const BElement r = multiply(ab.second, cd.second);
      for (const auto& [lw, lc] : l)
        for (const auto& [rw, rc] : r) add_to(out, std::make_pair(lw, rw), c1 * c2 * s * lc * rc);
    }
  return out;
}

BTensor BraidedAlgebra::comultiply(const BWord& w) const {
  if (w.size() > cutoff_) throw std::out_of_range("comultiplication degree exceeds cutoff");
  // Delta(u x_i) = Delta(u) (x_i (x) 1 + 1 (x) x_i), built on raw words and reduced at the end
  BTensor acc = single(std::make_pair(BWord{}, BWord{}));
  for (int i : w) {
    BTensor next;
    for (const auto& [ab, c] : acc) {
      BWord a = ab.first, b = ab.second;
      a.push_back(i);
      add_to(next, std::make_pair(a, ab.second), c * braid_words(ab.second, {i}));
      b.push_back(i);
      add_to(next, std::make_pair(ab.first, b), c);
    }
    acc = std::move(next);
  }
  if (flavor_ == Flavor::tensor) return acc;
  BTensor out;
  for (const auto& [ab, c] : acc) {
    const BElement l = reduce(ab.first);
    if (l.empty()) continue;
    const BElement r = reduce(ab.second);
    for (const auto& [lw, lc] : l)
      for (const auto& [rw, rc] : r) add_to(out, std::make_pair(lw, rw), c * lc * rc);
  }
  return out;
}

BTensor BraidedAlgebra::comultiply(const BElement& x) const {
  BTensor out;
  for (const auto& [w, c] : x) add_all(out, comultiply(w), c);
  return out;
}

BElement BraidedAlgebra::antipode(const BWord& w) const {
  Scalar c = w.size() % 2 ? Scalar(-1) : Scalar(1);
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) c *= braid(w[a], w[b]);
  BWord rev(w.rbegin(), w.rend());
  BElement out;
  add_all(out, reduce(rev), c);
  return out;
}

std::vector<BWord> BraidedAlgebra::basis(std::size_t degree) const {
  std::vector<BWord> cur{{}};
  const int n = static_cast<int>(size());
  for (std::size_t k = 0; k < degree; ++k) {
    std::vector<BWord> next;
    for (const auto& w : cur)
      for (int i = flavor_ == Flavor::tensor || w.empty() ? 0 : w.back(); i < n; ++i) {
        BWord x = w;
        x.push_back(i);
        if (flavor_ == Flavor::linear) {
          const long run = std::count(x.begin(), x.end(), i);
          if (nilpotency(i) > 0 && run >= nilpotency(i)) continue;
        }
        next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  return cur;
}

std::string BraidedAlgebra::render(const BWord& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t e = k;
    while (e < w.size() && w[e] == w[k]) ++e;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(w[k] + 1);
    if (e - k > 1) s += "^" + std::to_string(e - k);
    k = e;
  }
  return s;
}

std::string BraidedAlgebra::render(const BElement& x) const {
  return render_lin<BWord>(x, [this](const BWord& w) { return render(w); });
}

std::string BraidedAlgebra::render(const BTensor& t) const {
  return render_lin<std::pair<BWord, BWord>>(
      t, [this](const std::pair<BWord, BWord>& p) { return "(" + render(p.first) + " (x) " + render(p.second) + ")"; });
}

CheckResult check_braid_relation(const BraidedAlgebra& alg) {
  CheckResult r{"braid relation", true, 0, ""};
  const int n = static_cast<int>(alg.size());
  // c acting on positions (p, p+1) of a basis tensor
  auto c_at = [&](std::pair<Scalar, BWord> t, std::size_t p) {
    t.first *= alg.braid(t.second[p], t.second[p + 1]);
    std::swap(t.second[p], t.second[p + 1]);
    return t;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ++r.checked;
        const std::pair<Scalar, BWord> t{Scalar(1), BWord{i, j, k}};
        const auto lhs = c_at(c_at(c_at(t, 0), 1), 0);
        const auto rhs = c_at(c_at(c_at(t, 1), 0), 1);
        if (!(lhs.first == rhs.first) || lhs.second != rhs.second)
          r.fail("x" + std::to_string(i + 1) + " (x) x" + std::to_string(j + 1) + " (x) x" + std::to_string(k + 1));
      }
  return r;
}

std::vector<CheckResult> verify_braided(const BraidedAlgebra& alg, int degree) {
  CheckResult coassoc{"braided coassociativity", true, 0, ""};
  CheckResult counit{"braided counit", true, 0, ""};
  CheckResult dmul{"braided Delta multiplicative", true, 0, ""};
  CheckResult anti{"braided antipode", true, 0, ""};
  using Triple = std::pair<BWord, std::pair<BWord, BWord>>;
  std::vector<BWord> all;
  for (int d = 0; d <= degree; ++d)
    for (auto& w : alg.basis(static_cast<std::size_t>(d))) all.push_back(std::move(w));
  for (const auto& w : all) {
    const BTensor d = alg.comultiply(w);
    Lin<Triple> left, right;
    BElement l1, r1, s1, s2;
    for (const auto& [p, c] : d) {
      for (const auto& [q, c2] : alg.comultiply(p.first)) add_to(left, Triple{q.first, {q.second, p.second}}, c * c2);
      for (const auto& [q, c2] : alg.comultiply(p.second)) add_to(right, Triple{p.first, {q.first, q.second}}, c * c2);
      add_to(l1, p.second, c * alg.counit(p.first));
      add_to(r1, p.first, c * alg.counit(p.second));
      add_all(s1, alg.multiply(alg.antipode(p.first), single(p.second)), c);
      add_all(s2, alg.multiply(single(p.first), alg.antipode(p.second)), c);
    }
    const std::string at = alg.render(w);
    ++coassoc.checked;
    if (left != right) coassoc.fail(at);
    ++counit.checked;
    if (l1 != single(w) || r1 != single(w)) counit.fail(at);
    ++anti.checked;
    const BElement expect = single(BWord{}, alg.counit(w));
    if (s1 != expect || s2 != expect) anti.fail(at);
  }
  for (const auto& u : all)
    for (const auto& v : all) {
      if (static_cast<int>(u.size() + v.size()) > degree) continue;
      ++dmul.checked;
      if (alg.comultiply(alg.multiply(u, v)) != alg.tensor_multiply(alg.comultiply(u), alg.comultiply(v)))
        dmul.fail(alg.render(u) + " * " + alg.render(v));
    }
  return {coassoc, counit, dmul, anti};
}

CheckResult check_relations_descend(const BraidedAlgebra& alg, int degree) {
  CheckResult r{"relations generate a braided Hopf ideal", true, 0, ""};
  if (alg.flavor() == Flavor::tensor) return r;
  BraidedAlgebra T(alg.data(), Flavor::tensor, alg.cutoff());
  std::vector<BElement> relators;
  const int n = static_cast<int>(alg.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || degree < 2) continue;
      BElement rel = single(BWord{i, j});
      add_to(rel, BWord{j, i}, -alg.braid(i, j));
      relators.push_back(std::move(rel));
    }
  if (alg.flavor() == Flavor::linear)
    for (int l = 0; l < n; ++l)
      if (alg.nilpotency(l) > 0 && alg.nilpotency(l) <= degree)
        relators.push_back(single(BWord(static_cast<std::size_t>(alg.nilpotency(l)), l)));
  for (const auto& rel : relators) {
    ++r.checked;
    BTensor reduced;
    for (const auto& [ab, c] : T.comultiply(rel)) {
      const BElement x = alg.reduce(ab.first);
      const BElement y = alg.reduce(ab.second);
      for (const auto& [xw, xc] : x)
        for (const auto& [yw, yc] : y) add_to(reduced, std::make_pair(xw, yw), c * xc * yc);
    }
    if (!reduced.empty()) r.fail("Delta(" + T.render(rel) + ") = " + alg.render(reduced) + " modulo relations");
  }
  return r;
}

namespace {

BTensor primitive_defect(const BraidedAlgebra& alg, const BElement& x) {
  BTensor t = alg.comultiply(x);
  for (const auto& [w, c] : x) {
    add_to(t, std::make_pair(w, BWord{}), -c);
    add_to(t, std::make_pair(BWord{}, w), -c);
  }
  return t;
}

}  // namespace

bool is_primitive(const BraidedAlgebra& alg, const BElement& x) { return primitive_defect(alg, x).empty(); }

std::vector<BElement> primitives(const BraidedAlgebra& alg, std::size_t degree) {
  const auto basis = alg.basis(degree);
  std::vector<BTensor> images;
  for (const auto& w : basis) images.push_back(primitive_defect(alg, single(w)));
  std::vector<BElement> out;
  for (const auto& k : kernel_of(images)) {
    BElement x;
    for (std::size_t i = 0; i < basis.size(); ++i) add_to(x, basis[i], k[i]);
    out.push_back(std::move(x));
  }
  return out;
}

Lin<BiWord> Biproduct::multiply(const BiWord& a, const BiWord& b) const {
  // (r # g)(r' # h) = r (g . r') # gh
  const Scalar c = r_.act(a.second, b.first);
  const Element gh = group().mul(a.second, b.second);
  Lin<BiWord> out;
  for (const auto& [w, s] : r_.multiply(a.first, b.first)) add_to(out, BiWord{w, gh}, c * s);
  return out;
}

Tensor<BiWord> Biproduct::comultiply(const BiWord& a) const {
  // r^(1) # (r^(2))_(-1) g (x) r^(2) # g
  Tensor<BiWord> out;
  const Group& G = group();
  for (const auto& [p, c] : r_.comultiply(a.first))
    add_to(out, std::make_pair(BiWord{p.first, G.mul(r_.degree_element(p.second), a.second)}, BiWord{p.second, a.second}), c);
  return out;
}

Lin<BiWord> Biproduct::antipode(const BiWord& a) const {
  // (1 # (r_(-1) g)^{-1}) (S_R(r) # 1)
  const Group& G = group();
  const Element h = G.inv(G.mul(r_.degree_element(a.first), a.second));
  Lin<BiWord> out;
  for (const auto& [w, c] : r_.antipode(a.first)) add_all(out, multiply(BiWord{{}, h}, BiWord{w, G.identity()}), c);
  return out;
}

HopfOps<BiWord> Biproduct::ops() const {
  HopfOps<BiWord> o;
  o.mul = [this](const BiWord& a, const BiWord& b) { return multiply(a, b); };
  o.delta = [this](const BiWord& a) { return comultiply(a); };
  o.eps = [this](const BiWord& a) { return counit(a); };
  o.antipode = [this](const BiWord& a) { return antipode(a); };
  o.degree = [](const BiWord& a) { return static_cast<int>(a.first.size()); };
  o.render = [this](const BiWord& a) { return render(a); };
  o.unit = BiWord{{}, group().identity()};
  return o;
}

std::string Biproduct::render(const BiWord& a) const { return r_.render(a.first) + "#" + group().render(a.second); }

std::vector<CheckResult> verify_biproduct(const Biproduct& b, const std::vector<Element>& window, int degree) {
  std::vector<BiWord> basis;
  for (int d = 0; d <= degree; ++d)
    for (const auto& w : b.braided().basis(static_cast<std::size_t>(d)))
      for (const auto& g : window) basis.push_back(BiWord{w, g});
  return verify_hopf(b.ops(), basis, degree);
}

YDModule adjoint_arrow_module(const ESC& e) {
  const SemipathAlgebra alg = SemipathAlgebra::from_esc(e, 1);
  const Group& G = e.group;
  YDModule m{e};
  for (std::size_t j = 0; j < e.size(); ++j) {
    const TensorWord E = alg.generator(static_cast<int>(j + 1));
    std::map<Element, Scalar> table;
    for (const auto& h : probe_elements(G)) {
      // h |> E = h E h^{-1}
      const SemipathElement x = alg.multiply(alg.multiply(single(alg.vertex(h)), single(E)), single(alg.vertex(G.inv(h))));
      if (x.size() != 1 || x.begin()->first != E) throw std::logic_error("adjoint action does not preserve the arrow line");
      table.emplace(h, x.begin()->second);
    }
    m.data.chi[j] = recover_character(G, table);
    // delta^-(E) = pi(E_(1)) (x) E_(2)
    for (const auto& [ab, c] : alg.comultiply(E))
      if (ab.first.degree() == 0 && ab.second == E) m.data.g[j] = ab.first.g;
  }
  return m;
}

CheckResult check_adjoint_is_dual(const ESC& e) {
  CheckResult r{"adjoint arrow module is V(G, g_i, chi_i^-1)", true, 0, ""};
  const YDModule m = adjoint_arrow_module(e);
  for (std::size_t j = 0; j < e.size(); ++j) {
    ++r.checked;
    if (!(m.data.chi[j] == e.chi[j].inverse()) || m.data.g[j] != e.g[j])
      r.fail("index " + std::to_string(j + 1) + ": recovered " + m.data.chi[j].str() + " expected " + e.chi[j].inverse().str());
  }
  return r;
}

YDTables yd_tables(const YDModule& m) {
  const Group& G = m.data.group;
  if (!G.finite()) throw std::invalid_argument("tables need a finite group");
  YDTables t{G, m.data.size(), {}, {}};
  for (const auto& h : G.elements()) {
    std::vector<std::vector<Scalar>> a(t.dim, std::vector<Scalar>(t.dim, Scalar(0)));
    for (std::size_t i = 0; i < t.dim; ++i) a[i][i] = m.action(h, i);
    t.action.emplace(h, std::move(a));
  }
  for (std::size_t i = 0; i < t.dim; ++i) {
    std::vector<Scalar> w(t.dim, Scalar(0));
    w[i] = Scalar(1);
    t.coaction.push_back({{m.coaction(i), w}});
  }
  return t;
}

ESC pointed_yd_decompose(const YDTables& t) {
  const Group& G = t.group;
  if (!G.finite()) throw std::invalid_argument("decomposition needs a finite group");
  if (t.coaction.size() != t.dim) throw std::invalid_argument("one coaction entry per basis vector required");
  ESC e;
  e.group = G;
  for (std::size_t k = 0; k < t.dim; ++k) {
    std::map<Element, Scalar> table;
    for (const auto& h : G.elements()) {
      auto it = t.action.find(h);
      if (it == t.action.end()) throw std::invalid_argument("action table misses " + G.render(h));
      const auto& a = it->second;
      for (std::size_t i = 0; i < t.dim; ++i)
        if (i != k && !a[i][k].is_zero()) throw std::invalid_argument("action is not diagonal: module is not pointed");
      table.emplace(h, a[k][k]);
    }
    const auto& co = t.coaction[k];
    if (co.size() != 1) throw std::invalid_argument("coaction of basis vector " + std::to_string(k + 1) + " is not a single line");
    const auto& [h, w] = co[0];
    for (std::size_t i = 0; i < t.dim; ++i)
      if (!(w[i] == Scalar(i == k ? 1 : 0))) throw std::invalid_argument("coaction does not preserve the basis line");
    if (!G.is_central(h)) throw std::invalid_argument("coaction hits the non-central element " + G.render(h));
    e.g.push_back(h);
    e.chi.push_back(Character::from_table(G, table));
  }
  e.validate();
  return e;
}

std::vector<CheckResult> check_diagram_tensor(const ESC& e, int degree) {
  CheckResult prod{"diagram product is concatenation", true, 0, ""};
  CheckResult delta{"diagram Delta matches T(G, g_i, chi_i^-1)", true, 0, ""};
  CheckResult action{"diagram action is chi^-1", true, 0, ""};
  CheckResult coaction{"diagram coaction is g_word", true, 0, ""};
  const SemipathAlgebra alg = SemipathAlgebra::from_esc(e, static_cast<std::size_t>(degree));
  const BraidedAlgebra T(inverted(e), Flavor::tensor, static_cast<std::size_t>(degree));
  const Group& G = e.group;
  auto to_b = [](const TensorWord& w) {
    BWord b;
    for (const auto& l : w.letters) b.push_back(l.label - 1);
    return b;
  };
  const auto basis = coinvariants_basis(alg, static_cast<std::size_t>(degree));
  for (const auto& r : basis) {
    const std::string at = alg.render(r);
    ++delta.checked;
    BTensor mapped;
    bool coinvariant = true;
    for (const auto& [ab, c] : diagram_comultiply(alg, r)) {
      if (ab.first.g != G.identity() || ab.second.g != G.identity()) coinvariant = false;
      add_to(mapped, std::make_pair(to_b(ab.first), to_b(ab.second)), c);
    }
    if (!coinvariant || mapped != T.comultiply(to_b(r))) delta.fail(at);
    for (const auto& h : probe_elements(G)) {
      ++action.checked;
      const SemipathElement x = alg.multiply(alg.multiply(single(alg.vertex(h)), single(r)), single(alg.vertex(G.inv(h))));
      if (x != single(r, T.act(h, to_b(r)))) action.fail(at + " at " + G.render(h));
    }
    ++coaction.checked;
    SemipathTensor co;
    for (const auto& [ab, c] : alg.comultiply(r))
      if (ab.first.degree() == 0) add_to(co, ab, c);
    if (co != single(std::make_pair(alg.vertex(T.degree_element(to_b(r))), r))) coaction.fail(at);
    for (const auto& s : basis) {
      if (static_cast<int>(r.degree() + s.degree()) > degree) continue;
      ++prod.checked;
      auto [c, w] = alg.multiply_words(r, s);
      BWord cat = to_b(r);
      const BWord bs = to_b(s);
      cat.insert(cat.end(), bs.begin(), bs.end());
      if (!(c == Scalar(1)) || w.g != G.identity() || to_b(w) != cat) prod.fail(at + " * " + alg.render(s));
    }
  }
  return {prod, delta, action, coaction};
}

}  // namespace qha
