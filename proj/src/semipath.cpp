#include "qha/semipath.hpp"

#include <cctype>
#include <stdexcept>

namespace qha {

SemipathAlgebra::SemipathAlgebra(ArrowBimodule b, std::size_t cutoff)
    : bim_(std::move(b)), cutoff_(cutoff), central_(bim_.rsc().is_central()) {}

SemipathAlgebra SemipathAlgebra::from_esc(const ESC& e, std::size_t cutoff) {
  return SemipathAlgebra(ArrowBimodule(HopfQuiver(esc_to_crsc(e))), cutoff);
}

TensorWord SemipathAlgebra::generator(int label) const {
  return TensorWord{group().identity(), {Letter{label, bim_.rsc().class_of_label(label).cls.rep}}};
}

std::pair<Scalar, Letter> SemipathAlgebra::push(const Letter& l, const Element& h) const {
  const Group& G = group();
  auto [c, moved] = bim_.right_action(quiver().arrow(l.y, G.identity(), l.label), h);
  // a_{yh,h} = h . a_{h^{-1} y h, 1}
  return {c, Letter{l.label, G.mul(G.inv(h), moved.target)}};
}

std::pair<Scalar, TensorWord> SemipathAlgebra::multiply_words(const TensorWord& u, const TensorWord& v) const {
  if (u.degree() + v.degree() > cutoff_)
    throw std::out_of_range("product degree " + std::to_string(u.degree() + v.degree()) + " exceeds cutoff");
  Scalar c(1);
  TensorWord w{u.g, u.letters};
  for (std::size_t k = w.letters.size(); k-- > 0;) {
    auto [s, l] = push(w.letters[k], v.g);
    c *= s;
    w.letters[k] = std::move(l);
  }
  w.g = group().mul(u.g, v.g);
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return {c, std::move(w)};
}

SemipathElement SemipathAlgebra::multiply(const TensorWord& u, const TensorWord& v) const {
  auto [c, w] = multiply_words(u, v);
  return single(w, c);
}

SemipathElement SemipathAlgebra::multiply(const SemipathElement& a, const SemipathElement& b) const {
  return bilinear(a, b, [this](const TensorWord& x, const TensorWord& y) { return multiply(x, y); });
}

SemipathTensor SemipathAlgebra::comultiply(const TensorWord& w) const {
  if (w.degree() > cutoff_) throw std::out_of_range("comultiplication degree exceeds cutoff");
  SemipathTensor acc = single(std::make_pair(vertex(w.g), vertex(w.g)));
  const Element e = group().identity();
  for (const auto& l : w.letters) {
    const TensorWord lw{e, {l}};
    SemipathTensor next;
    for (const auto& [ab, c] : acc) {
      // (a (x) b)(L (x) 1 + y (x) L)
      auto [s1, a1] = multiply_words(ab.first, lw);
      auto [s2, b1] = multiply_words(ab.second, vertex(e));
      add_to(next, std::make_pair(a1, b1), c * s1 * s2);
      auto [s3, a2] = multiply_words(ab.first, vertex(l.y));
      auto [s4, b2] = multiply_words(ab.second, lw);
      add_to(next, std::make_pair(a2, b2), c * s3 * s4);
    }
    acc = std::move(next);
  }
  return acc;
}

SemipathElement SemipathAlgebra::antipode(const TensorWord& w) const {
  const Group& G = group();
  // S(g L_1 ... L_t) = S(L_t) ... S(L_1) g^{-1}, S(L) = -y^{-1} L
  SemipathElement out = single(vertex(G.identity()));
  for (std::size_t k = w.letters.size(); k-- > 0;) {
    const Letter& l = w.letters[k];
    out = multiply(out, single(TensorWord{G.inv(l.y), {l}}, Scalar(-1)));
  }
  return multiply(out, single(vertex(G.inv(w.g))));
}

HopfOps<TensorWord> SemipathAlgebra::ops() const {
  HopfOps<TensorWord> o;
  o.mul = [this](const TensorWord& a, const TensorWord& b) { return multiply(a, b); };
  o.delta = [this](const TensorWord& w) { return comultiply(w); };
  o.eps = [this](const TensorWord& w) { return counit(w); };
  o.antipode = [this](const TensorWord& w) { return antipode(w); };
  o.degree = [](const TensorWord& w) { return static_cast<int>(w.degree()); };
  o.render = [this](const TensorWord& w) { return render(w); };
  o.unit = vertex(group().identity());
  return o;
}

std::vector<TensorWord> SemipathAlgebra::words(const std::vector<Element>& gs, std::size_t degree) const {
  std::vector<Letter> alphabet;
  for (const auto& rc : bim_.rsc().classes)
    for (int label : rc.labels)
      for (const auto& y : rc.cls.members) alphabet.push_back(Letter{label, y});
  std::vector<std::vector<Letter>> cur{{}};
  for (std::size_t k = 0; k < degree; ++k) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : cur)
      for (const auto& l : alphabet) {
        next.push_back(w);
        next.back().push_back(l);
      }
    cur = std::move(next);
  }
  std::vector<TensorWord> out;
  for (const auto& g : gs)
    for (const auto& w : cur) out.push_back(TensorWord{g, w});
  return out;
}

std::string SemipathAlgebra::render(const TensorWord& w) const {
  const Group& G = group();
  std::string s;
  if (w.letters.empty() || w.g != G.identity()) s = G.render(w.g);
  for (const auto& l : w.letters) {
    if (!s.empty()) s += " * ";
    s += central_ ? "E" + std::to_string(l.label) : "a" + std::to_string(l.label) + "[" + G.render(l.y) + "]";
  }
  return s;
}

std::string SemipathAlgebra::render(const SemipathElement& x) const {
  return render_lin<TensorWord>(x, [this](const TensorWord& w) { return render(w); });
}

TensorWord SemipathAlgebra::parse(std::string_view text) const {
  std::vector<std::string> parts{""};
  for (char c : text) {
    if (c == '*')
      parts.emplace_back();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      parts.back() += c;
  }
  TensorWord w = vertex(group().identity());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::string& p = parts[k];
    if (p.size() > 1 && p[0] == 'E' && std::isdigit(static_cast<unsigned char>(p[1]))) {
      w.letters.push_back(generator(std::stoi(p.substr(1))).letters[0]);
    } else if (p.size() > 1 && p[0] == 'a' && std::isdigit(static_cast<unsigned char>(p[1]))) {
      auto lb = p.find('[');
      if (lb == std::string::npos || p.back() != ']') throw std::invalid_argument("cannot parse letter '" + p + "'");
      Letter l{std::stoi(p.substr(1, lb - 1)), group().parse(p.substr(lb + 1, p.size() - lb - 2))};
      quiver().arrow(l.y, group().identity(), l.label);
      w.letters.push_back(std::move(l));
    } else if (k == 0) {
      w.g = group().parse(p);
    } else {
      throw std::invalid_argument("group elements may only lead a word: '" + p + "'");
    }
  }
  return w;
}

std::vector<TensorWord> coinvariants_basis(const SemipathAlgebra& alg, std::size_t cutoff) {
  std::vector<TensorWord> out;
  for (std::size_t t = 0; t <= cutoff; ++t)
    for (auto& w : alg.words({alg.group().identity()}, t)) out.push_back(std::move(w));
  return out;
}

SemipathTensor diagram_comultiply(const SemipathAlgebra& alg, const TensorWord& r) {
  SemipathTensor out;
  for (const auto& [ab, c] : alg.comultiply(r)) {
    for (const auto& [bc, c2] : alg.comultiply(ab.second)) {
      if (bc.first.degree() != 0) continue;
      // r_(1) S(pi(r_(2))) with pi(r_(2)) = h a group element
      for (const auto& [left, c3] : alg.multiply(single(ab.first), alg.antipode(bc.first)))
        add_to(out, std::make_pair(left, bc.second), c * c2 * c3);
    }
  }
  return out;
}

std::vector<CheckResult> verify_semipath(const SemipathAlgebra& alg, const std::vector<Element>& window, int degree) {
  std::vector<TensorWord> basis;
  for (int t = 0; t <= degree; ++t)
    for (auto& w : alg.words(window, static_cast<std::size_t>(t))) basis.push_back(std::move(w));
  return verify_hopf(alg.ops(), basis, degree);
}

}  // namespace qha
