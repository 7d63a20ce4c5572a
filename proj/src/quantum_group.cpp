#include "qha/quantum_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "qha/qcomb.hpp"

namespace qha {

namespace {

Scalar denominator_of(const FLData& fl, std::size_t i) {
  const Scalar c = fl.esc.chi[i](fl.xi[i]);
  const Scalar den = c - c.inverse();
  if (den.is_zero()) throw std::domain_error("chi_i(xi_i) - chi_i(xi_i)^-1 vanishes at index " + std::to_string(i + 1));
  return den;
}

bool in_same_half(const FLData& fl, std::size_t i, std::size_t j) {
  return fl.in_j1(i) == fl.in_j1(j) && fl.block_of(i) == fl.block_of(j);
}

// Serre relations apply when r_ij - 1 < ord(chi_i(g_i))
bool serre_applies(const FLData& fl, std::size_t i, std::size_t j) {
  const auto ord = fl.esc.q(i, i).root_of_unity_order();
  return !ord || fl.r[i][j] - 1 < *ord;
}

// coefficients (-1)^m [r m]_{chi_i(xi_i^{-1})}, m = 0..r
std::vector<Scalar> serre_coefficients(const FLData& fl, std::size_t i, long r) {
  const Scalar base = fl.esc.chi[i](fl.xi[i]).inverse();
  std::vector<Scalar> out;
  for (long m = 0; m <= r; ++m) out.push_back(q_binomial(r, m, base, QConvention::symmetric) * Scalar(m % 2 ? -1 : 1));
  return out;
}

std::vector<int> serre_word(std::size_t i, std::size_t j, long r, long m) {
  std::vector<int> w(static_cast<std::size_t>(r - m), static_cast<int>(i));
  w.push_back(static_cast<int>(j));
  w.insert(w.end(), static_cast<std::size_t>(m), static_cast<int>(i));
  return w;
}

}  // namespace

std::vector<Relator> build_ideal(const FLData& fl, const SemipathAlgebra& alg) {
  const ESC& e = fl.esc;
  const Group& G = e.group;
  std::vector<Relator> out;
  auto E = [&](std::size_t j) { return single(alg.generator(static_cast<int>(j + 1))); };
  for (std::size_t i = 0; i < fl.n; ++i)
    for (std::size_t j = fl.n; j < 2 * fl.n; ++j) {
      if (fl.block_of(i) != fl.block_of(j)) continue;
      Relator rel{"commutator", i, j, {}};
      add_all(rel.element, alg.multiply(E(i), E(j)), e.chi[j](fl.xi[i]));
      add_all(rel.element, alg.multiply(E(j), E(i)), -e.chi[i](fl.xi[j]).inverse());
      if (fl.sigma(i) == j) {
        const Scalar f = denominator_of(fl, i).inverse();
        add_to(rel.element, alg.vertex(G.pow(e.g[i], 2)), -f);
        add_to(rel.element, alg.vertex(G.identity()), f);
      }
      out.push_back(std::move(rel));
    }
  for (std::size_t i = 0; i < 2 * fl.n; ++i)
    for (std::size_t j = 0; j < 2 * fl.n; ++j) {
      if (i == j || !in_same_half(fl, i, j) || !serre_applies(fl, i, j)) continue;
      const long r = fl.r[i][j];
      const auto coeff = serre_coefficients(fl, i, r);
      Relator rel{"q-Serre", i, j, {}};
      for (long m = 0; m <= r; ++m) {
        SemipathElement w = single(alg.vertex(G.identity()));
        for (int k : serre_word(i, j, r, m)) w = alg.multiply(w, E(static_cast<std::size_t>(k)));
        add_all(rel.element, w, coeff[static_cast<std::size_t>(m)]);
      }
      out.push_back(std::move(rel));
    }
  return out;
}

QuantumGroup::QuantumGroup(FLData fl) : fl_(std::move(fl)) {
  const ESC& e = fl_.esc;
  const Group& G = e.group;
  if (e.size() != 2 * fl_.n || fl_.xi.size() != 2 * fl_.n) throw std::invalid_argument("malformed FL data");
  const Element one = G.identity();
  for (std::size_t i = 0; i < fl_.n; ++i) {
    // K_i K_sigma(i) = 1
    UElement inv = single(UWord{G.mul(fl_.xi[i], fl_.xi[fl_.sigma(i)]), {}});
    add_to(inv, UWord{one, {}}, Scalar(-1));
    if (!inv.empty()) throw std::invalid_argument("xi_sigma(i) is not xi_i^-1");
    const std::string ks = "K" + std::to_string(i + 1) + "*K" + std::to_string(fl_.sigma(i) + 1);
    relations_.push_back({"K-inverse(" + std::to_string(i + 1) + ")", inv, ks + " = 1"});
  }
  for (std::size_t i = 0; i < fl_.n; ++i)
    for (std::size_t j = 0; j < 2 * fl_.n; ++j) {
      // chi_j(xi_i) K_i X_j = X_j K_i holds by construction of the product
      UElement rel = multiply(single(UWord{fl_.xi[i], {}}), X(j));
      for (auto& [w, c] : rel) c *= e.chi[j](fl_.xi[i]);
      add_all(rel, multiply(X(j), single(UWord{fl_.xi[i], {}})), Scalar(-1));
      const std::string ki = "K" + std::to_string(i + 1), xj = "X" + std::to_string(j + 1);
      relations_.push_back({"K-conjugation(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", rel,
                            ki + "*" + xj + "*" + ki + "^-1 = (" + e.chi[j](fl_.xi[i]).inverse().str() + ")*" + xj});
    }
  for (std::size_t i = 0; i < fl_.n; ++i)
    for (std::size_t j = fl_.n; j < 2 * fl_.n; ++j) {
      if (fl_.block_of(i) != fl_.block_of(j)) continue;
      // X_i X_j - X_j X_i - delta (K_i^2 - K_i^-2)/(c - c^-1)
      UElement rel;
      add_to(rel, UWord{one, {static_cast<int>(i), static_cast<int>(j)}}, Scalar(1));
      add_to(rel, UWord{one, {static_cast<int>(j), static_cast<int>(i)}}, Scalar(-1));
      if (fl_.sigma(i) == j) {
        const Scalar f = denominator_of(fl_, i).inverse();
        add_to(rel, UWord{G.pow(fl_.xi[i], 2), {}}, -f);
        add_to(rel, UWord{G.pow(fl_.xi[i], -2), {}}, f);
      }
      add_relation("[X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) + "]", rel,
                   {static_cast<int>(j), static_cast<int>(i)}, Scalar(-1));
    }
  for (std::size_t i = 0; i < 2 * fl_.n; ++i)
    for (std::size_t j = 0; j < 2 * fl_.n; ++j) {
      if (i == j || !in_same_half(fl_, i, j) || !serre_applies(fl_, i, j)) continue;
      const long r = fl_.r[i][j];
      const auto coeff = serre_coefficients(fl_, i, r);
      UElement rel;
      for (long m = 0; m <= r; ++m) add_to(rel, UWord{one, serre_word(i, j, r, m)}, coeff[static_cast<std::size_t>(m)]);
      // the deglex-leading word has X_j as early as possible when j > i
      const long lead_m = j > i ? r : 0;
      add_relation("Serre(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", rel, serre_word(i, j, r, lead_m),
                   coeff[static_cast<std::size_t>(lead_m)]);
      ++serre_count_;
    }
}

void QuantumGroup::add_relation(std::string name, UElement rel, std::vector<int> lead, Scalar lead_coeff) {
  Rule rule{lead, {}};
  for (const auto& [w, c] : rel)
    if (!(w.x == lead && w.k == group().identity())) add_to(rule.replacement, w, -c / lead_coeff);
  rules_.push_back(std::move(rule));
  std::string text = render(rel) + " = 0";
  relations_.push_back({std::move(name), std::move(rel), std::move(text)});
}

std::vector<std::string> QuantumGroup::generators() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < 2 * fl_.n; ++i) out.push_back("K" + std::to_string(i + 1));
  for (std::size_t i = 0; i < 2 * fl_.n; ++i) out.push_back("X" + std::to_string(i + 1));
  return out;
}

UElement QuantumGroup::multiply(const UWord& a, const UWord& b) const {
  Scalar c(1);
  for (int j : a.x) c *= fl_.esc.chi[static_cast<std::size_t>(j)](b.k);
  UWord w{group().mul(a.k, b.k), a.x};
  w.x.insert(w.x.end(), b.x.begin(), b.x.end());
  return reduce(single(w, c));
}

UElement QuantumGroup::multiply(const UElement& a, const UElement& b) const {
  return bilinear(a, b, [this](const UWord& x, const UWord& y) { return multiply(x, y); });
}

UElement QuantumGroup::reduce(const UElement& input) const {
  UElement done;
  UElement todo = input;
  while (!todo.empty()) {
    auto it = todo.begin();
    const UWord w = it->first;
    const Scalar c = it->second;
    todo.erase(it);
    bool rewritten = false;
    for (const auto& rule : rules_) {
      auto pos = std::search(w.x.begin(), w.x.end(), rule.lead.begin(), rule.lead.end());
      if (pos == w.x.end()) continue;
      const std::vector<int> A(w.x.begin(), pos), B(pos + static_cast<long>(rule.lead.size()), w.x.end());
      for (const auto& [rw, rc] : rule.replacement) {
        // K^k A (K^{k'} y) B = chi_A(k') K^{k k'} A y B
        Scalar s = c * rc;
        for (int j : A) s *= fl_.esc.chi[static_cast<std::size_t>(j)](rw.k);
        UWord nw{group().mul(w.k, rw.k), A};
        nw.x.insert(nw.x.end(), rw.x.begin(), rw.x.end());
        nw.x.insert(nw.x.end(), B.begin(), B.end());
        add_to(todo, nw, s);
      }
      rewritten = true;
      break;
    }
    if (!rewritten) add_to(done, w, c);
  }
  return done;
}

Tensor<UWord> QuantumGroup::comultiply(const UWord& w) const {
  const Group& G = group();
  Tensor<UWord> acc = single(std::make_pair(UWord{w.k, {}}, UWord{w.k, {}}));
  for (int j : w.x) {
    // Delta(X_j) = X_j (x) K_sigma(b) + K_b (x) X_j, b = base(j)
    const Element kb = fl_.xi[fl_.base(static_cast<std::size_t>(j))];
    Tensor<UWord> d;
    add_to(d, std::make_pair(UWord{G.identity(), {j}}, UWord{G.inv(kb), {}}), Scalar(1));
    add_to(d, std::make_pair(UWord{kb, {}}, UWord{G.identity(), {j}}), Scalar(1));
    Tensor<UWord> next;
    for (const auto& [ab, c1] : acc)
      for (const auto& [cd, c2] : d) {
        const UElement l = multiply(ab.first, cd.first);
        const UElement r = multiply(ab.second, cd.second);
        for (const auto& [lw, lc] : l)
          for (const auto& [rw, rc] : r) add_to(next, std::make_pair(lw, rw), c1 * c2 * lc * rc);
      }
    acc = std::move(next);
  }
  return acc;
}

UElement QuantumGroup::antipode_generator(std::size_t j) const {
  return single(UWord{group().identity(), {static_cast<int>(j)}}, -fl_.esc.chi[j](fl_.xi[fl_.base(j)]));
}

std::vector<long> QuantumGroup::xi_coordinates(const Element& h) const {
  // solve sum_i c_i xi_i = h over Q; FL7 makes the solution integral
  const std::size_t n = fl_.n;
  const std::size_t rank = h.v.size();
  std::vector<std::vector<mpq_class>> m(rank, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t i = 0; i < n; ++i) m[r][i] = fl_.xi[i].v.at(r);
    m[r][n] = h.v[r];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rank; ++col) {
    std::size_t p = row;
    while (p < rank && m[p][col] == 0) ++p;
    if (p == rank) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < rank; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[row][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<long> out(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpq_class x = m[r][n] / m[r][pivots[r]];
    if (x.get_den() != 1) throw std::invalid_argument("element is not in the xi lattice");
    out[pivots[r]] = x.get_num().get_si();
  }
  return out;
}

std::string QuantumGroup::render(const UWord& w) const {
  std::string s;
  const auto k = xi_coordinates(w.k);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k[i]) continue;
    if (!s.empty()) s += "*";
    s += "K" + std::to_string(i + 1);
    if (k[i] != 1) s += "^" + std::to_string(k[i]);
  }
  for (std::size_t a = 0; a < w.x.size();) {
    std::size_t b = a;
    while (b < w.x.size() && w.x[b] == w.x[a]) ++b;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(w.x[a] + 1);
    if (b - a > 1) s += "^" + std::to_string(b - a);
    a = b;
  }
  return s.empty() ? "1" : s;
}

std::string QuantumGroup::render(const UElement& x) const {
  return render_lin<UWord>(x, [this](const UWord& w) { return render(w); });
}

UElement phi_map(const QuantumGroup& u, const TensorWord& w) {
  const FLData& fl = u.fl();
  UElement acc = u.K(w.g);
  for (const auto& l : w.letters) {
    const std::size_t j = static_cast<std::size_t>(l.label - 1);
    acc = u.multiply(acc, u.multiply(u.K(fl.xi[fl.base(j)]), u.X(j)));
  }
  return acc;
}

UElement phi_map(const QuantumGroup& u, const SemipathElement& x) {
  UElement out;
  for (const auto& [w, c] : x) add_all(out, phi_map(u, w), c);
  return u.reduce(out);
}

SemipathElement psi_map(const QuantumGroup& u, const SemipathAlgebra& alg, const UWord& w) {
  const FLData& fl = u.fl();
  const Group& G = alg.group();
  SemipathElement acc = single(alg.vertex(w.k));
  for (int j : w.x) {
    const auto jj = static_cast<std::size_t>(j);
    acc = alg.multiply(acc, alg.multiply(single(alg.vertex(G.inv(fl.xi[fl.base(jj)]))), single(alg.generator(j + 1))));
  }
  return acc;
}

SemipathElement psi_map(const QuantumGroup& u, const SemipathAlgebra& alg, const UElement& x) {
  SemipathElement out;
  for (const auto& [w, c] : x) add_all(out, psi_map(u, alg, w), c);
  return out;
}

namespace {

long max_r(const FLData& fl) {
  long r = 1;
  for (std::size_t i = 0; i < fl.r.size(); ++i)
    for (std::size_t j = 0; j < fl.r[i].size(); ++j)
      if (i != j) r = std::max(r, fl.r[i][j]);
  return r;
}

// x = c h R for a relator R, a scalar c and a group element h
bool multiple_of_relator(const SemipathAlgebra& alg, const SemipathElement& x, const std::vector<Relator>& rels) {
  if (x.empty()) return true;
  for (const auto& rel : rels) {
    if (rel.element.empty()) continue;
    const auto& [w0, c0] = *rel.element.begin();
    for (const auto& [w, c] : x) {
      if (w.letters != w0.letters) continue;
      const Element h = alg.group().mul(w.g, alg.group().inv(w0.g));
      SemipathElement y = alg.multiply(single(alg.vertex(h)), rel.element);
      // the letters and scalars of h R are compared after rescaling
      const auto it = y.find(w);
      if (it == y.end()) continue;
      const Scalar f = c / it->second;
      for (auto& [yw, yc] : y) yc *= f;
      if (y == x) return true;
    }
  }
  return false;
}

}  // namespace

CheckResult verify_phi_kills_I(const QuantumGroup& u, const FLData& ideal_fl) {
  CheckResult r{"Phi(I) = 0", true, 0, ""};
  const SemipathAlgebra alg = SemipathAlgebra::from_esc(ideal_fl.esc, static_cast<std::size_t>(max_r(ideal_fl) + 1));
  for (const auto& rel : build_ideal(ideal_fl, alg)) {
    ++r.checked;
    const UElement img = phi_map(u, rel.element);
    if (!img.empty())
      r.fail(rel.name + "(" + std::to_string(rel.i + 1) + "," + std::to_string(rel.j + 1) + ") -> " + u.render(img));
  }
  return r;
}

std::vector<CheckResult> psi_phi_roundtrip(const QuantumGroup& u) {
  const FLData& fl = u.fl();
  const Group& G = u.group();
  const SemipathAlgebra alg = SemipathAlgebra::from_esc(fl.esc, static_cast<std::size_t>(max_r(fl) + 1));
  const auto rels = build_ideal(fl, alg);
  CheckResult psiphi{"Psi o Phi = id on generators", true, 0, ""};
  CheckResult phipsi{"Phi o Psi = id on generators", true, 0, ""};
  CheckResult wd{"Psi maps U relations into I", true, 0, ""};
  CheckResult co{"Psi preserves Delta, epsilon and S on generators", true, 0, ""};
  for (std::size_t i = 0; i < 2 * fl.n; ++i) {
    for (const Element& h : {fl.xi[i], G.inv(fl.xi[i])}) {
      ++psiphi.checked;
      if (psi_map(u, alg, phi_map(u, alg.vertex(h))) != single(alg.vertex(h))) psiphi.fail("xi" + std::to_string(i + 1));
      ++phipsi.checked;
      if (phi_map(u, psi_map(u, alg, UWord{h, {}})) != u.K(h)) phipsi.fail("K" + std::to_string(i + 1));
    }
    const TensorWord E = alg.generator(static_cast<int>(i + 1));
    ++psiphi.checked;
    if (psi_map(u, alg, phi_map(u, E)) != single(E)) psiphi.fail("E" + std::to_string(i + 1));
    ++phipsi.checked;
    if (phi_map(u, psi_map(u, alg, UWord{G.identity(), {static_cast<int>(i)}})) != u.X(i)) phipsi.fail("X" + std::to_string(i + 1));

    const UWord Xw{G.identity(), {static_cast<int>(i)}};
    const SemipathElement px = psi_map(u, alg, Xw);
    SemipathTensor lhs, rhs;
    for (const auto& [w, c] : px) add_all(lhs, alg.comultiply(w), c);
    for (const auto& [ab, c] : u.comultiply(Xw))
      for (const auto& [l, lc] : psi_map(u, alg, ab.first))
        for (const auto& [r, rc] : psi_map(u, alg, ab.second)) add_to(rhs, std::make_pair(l, r), c * lc * rc);
    ++co.checked;
    if (lhs != rhs) co.fail("Delta at X" + std::to_string(i + 1));
    SemipathElement s;
    for (const auto& [w, c] : px) add_all(s, alg.antipode(w), c);
    ++co.checked;
    if (s != psi_map(u, alg, u.antipode_generator(i))) co.fail("S at X" + std::to_string(i + 1));
    ++co.checked;
    if (!u.counit(Xw).is_zero()) co.fail("epsilon at X" + std::to_string(i + 1));
  }
  for (const auto& rel : u.relations()) {
    ++wd.checked;
    if (!multiple_of_relator(alg, psi_map(u, alg, rel.lhs_minus_rhs), rels)) wd.fail(rel.name);
  }
  return {psiphi, phipsi, wd, co};
}

CheckResult check_xi_symmetry(const FLData& fl) {
  CheckResult r{"chi_i(xi_j) = chi_j(xi_i) within blocks", true, 0, ""};
  for (std::size_t i = 0; i < 2 * fl.n; ++i)
    for (std::size_t j = 0; j < 2 * fl.n; ++j) {
      if (fl.block_of(i) != fl.block_of(j)) continue;
      ++r.checked;
      if (!(fl.esc.chi[i](fl.xi[j]) == fl.esc.chi[j](fl.xi[i]))) r.fail("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return r;
}

CheckResult sl2_textbook_match(const QuantumGroup& u) {
  CheckResult r{"U matches the textbook U_Q(sl2)", true, 0, ""};
  const FLData& fl = u.fl();
  if (fl.n != 1) {
    r.fail("not rank one");
    return r;
  }
  const Group& G = u.group();
  const Scalar Q = fl.esc.chi[0](fl.xi[0]).inverse();
  const UElement E = u.X(0);
  UElement F = u.X(1);
  for (auto& [w, c] : F) c = -c;
  const UElement K = u.K(G.pow(fl.xi[0], 2)), Kinv = u.K(G.pow(fl.xi[0], -2));
  auto scaled = [](UElement x, const Scalar& s) {
    for (auto& [w, c] : x) c *= s;
    return x;
  };
  auto minus = [](UElement a, const UElement& b) {
    add_all(a, b, Scalar(-1));
    return a;
  };
  std::vector<std::pair<std::string, UElement>> textbook = {
      {"K K^-1 = 1", minus(u.multiply(K, Kinv), u.K(G.identity()))},
      {"K E K^-1 = Q^2 E", minus(u.multiply(u.multiply(K, E), Kinv), scaled(E, Q.pow(2)))},
      {"K F K^-1 = Q^-2 F", minus(u.multiply(u.multiply(K, F), Kinv), scaled(F, Q.pow(-2)))},
      {"EF - FE = (K - K^-1)/(Q - Q^-1)",
       minus(minus(u.multiply(E, F), u.multiply(F, E)), scaled(minus(K, Kinv), (Q - Q.inverse()).inverse()))},
  };
  for (const auto& [name, x] : textbook) {
    ++r.checked;
    if (!u.reduce(x).empty()) r.fail(name + " leaves " + u.render(u.reduce(x)));
  }
  ++r.checked;
  // relation sets: K-inverse, K-commutation with both X, one commutator, no Serre
  if (u.generators().size() != 4 || u.serre_count() != 0 || u.relations().size() != 4)
    r.fail("presentation has " + std::to_string(u.generators().size()) + " generators and " + std::to_string(u.relations().size()) +
           " relations");
  return r;
}

std::vector<CheckResult> serre_primitive_check(const SerreData& s) {
  const ESC& e = s.esc;
  if (e.size() != 2) throw std::invalid_argument("Serre data needs two indices");
  const long r = s.r;
  if (r < 1) throw std::invalid_argument("r must be positive");
  CheckResult cond{"chi_2(g_1) chi_1(g_2) chi_1(g_1)^(r-1) = 1", true, 1, ""};
  CheckResult ord{"r - 1 below ord chi_1(g_1)", true, 1, ""};
  CheckResult prim{"(ad_c x1)^r x2 is primitive", true, 1, ""};
  const Scalar q11 = e.q(0, 0), q12 = e.q(0, 1), q21 = e.q(1, 0);
  if (!(q21 * q12 * q11.pow(r - 1) == Scalar(1))) cond.fail("product is " + (q21 * q12 * q11.pow(r - 1)).str());
  const auto o = q11.root_of_unity_order();
  if (o && r - 1 >= *o) ord.fail("ord = " + std::to_string(*o));

  ESC dual = e;
  for (auto& c : dual.chi) c = c.inverse();
  const BraidedAlgebra T(dual, Flavor::tensor, static_cast<std::size_t>(r + 1));
  BElement ad = single(BWord{1});
  const Element g1 = e.g[0];
  for (long k = 0; k < r; ++k) {
    // (ad_c x1) y = x1 y - (g1 . y) x1
    BElement next;
    for (const auto& [w, c] : ad) {
      BWord left{0};
      left.insert(left.end(), w.begin(), w.end());
      add_to(next, left, c);
      BWord right = w;
      right.push_back(0);
      add_to(next, right, -c * T.act(g1, w));
    }
    ad = std::move(next);
  }
  if (!is_primitive(T, ad)) prim.fail(T.render(ad));
  std::vector<CheckResult> out{cond, ord, prim};

  // s^2 = chi_1(g_1)^-1; the symmetric Serre sum needs s^-(r-1) chi_2(g_1) = 1 for one of the two roots
  const auto root = q11.inverse().sqrt();
  if (!root) return out;
  Scalar sq = *root;
  if (!(sq.pow(-(r - 1)) * q21 == Scalar(1))) sq = -sq;
  if (!(sq.pow(-(r - 1)) * q21 == Scalar(1))) return out;
  CheckResult eq{"Serre sum equals (ad_c x1)^r x2", true, 1, ""};
  CheckResult sprim{"Serre sum is primitive", true, 1, ""};
  BElement serre;
  for (long m = 0; m <= r; ++m) {
    BWord w(static_cast<std::size_t>(r - m), 0);
    w.push_back(1);
    w.insert(w.end(), static_cast<std::size_t>(m), 0);
    add_to(serre, w, q_binomial(r, m, sq, QConvention::symmetric) * Scalar(m % 2 ? -1 : 1));
  }
  if (ad != serre) eq.fail("(ad_c x1)^r x2 = " + T.render(ad) + ", Serre sum = " + T.render(serre));
  if (!is_primitive(T, serre)) sprim.fail(T.render(serre));
  out.push_back(eq);
  out.push_back(sprim);
  return out;
}

std::vector<CheckResult> serre_pair_check(const SerreData& s) {
  const ESC& e = s.esc;
  CheckResult cond{"sqrt(chi_1(g_2)) sqrt(chi_2(g_1)) = 1", true, 1, ""};
  CheckResult prim{"sqrt(chi_2(g_1)) x1 x2 - sqrt(chi_1(g_2)) x2 x1 is primitive", true, 1, ""};
  const auto a = e.q(1, 0).sqrt();
  const auto b = e.q(0, 1).sqrt();
  if (!a || !b) throw std::invalid_argument("square roots unavailable");
  Scalar sa = *a, sb = *b;
  if (!(sa * sb == Scalar(1))) sb = -sb;
  if (!(sa * sb == Scalar(1))) cond.fail("product of roots is " + (sa * sb).str());
  ESC dual = e;
  for (auto& c : dual.chi) c = c.inverse();
  const BraidedAlgebra T(dual, Flavor::tensor, 2);
  BElement x;
  add_to(x, BWord{0, 1}, sa);
  add_to(x, BWord{1, 0}, -sb);
  if (!is_primitive(T, x)) prim.fail(T.render(x));
  return {cond, prim};
}

FLData cartan_to_esc(const std::vector<std::vector<long>>& A, const std::vector<long>& d, const Scalar& q) {
  const std::size_t n = A.size();
  if (n == 0 || d.size() != n) throw std::invalid_argument("Cartan matrix and symmetrizer sizes differ");
  for (std::size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
    if (A[i][i] != 2) throw std::invalid_argument("diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && A[i][j] > 0) throw std::invalid_argument("off-diagonal entries must be non-positive");
      if (d[i] * A[i][j] != d[j] * A[j][i]) throw std::invalid_argument("d_i a_ij != d_j a_ji: matrix is not symmetrized by d");
    }
  }
  FLData fl;
  fl.n = n;
  const Group G = Group::free_abelian(static_cast<int>(n));
  fl.esc.group = G;
  fl.blocks = {{}};
  for (std::size_t i = 0; i < n; ++i) fl.blocks[0].push_back(i);
  fl.q = {q};
  fl.d = d;
  fl.A = A;
  fl.xi.resize(2 * n);
  fl.esc.g.resize(2 * n);
  fl.esc.chi.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    fl.xi[i] = G.generator(static_cast<int>(i));
    fl.xi[i + n] = G.inv(fl.xi[i]);
    fl.esc.g[i] = fl.esc.g[i + n] = G.pow(fl.xi[i], 2);
    std::vector<Scalar> values;
    for (std::size_t j = 0; j < n; ++j) values.push_back(q.pow(-d[i] * A[i][j]));
    fl.esc.chi[i] = Character::from_generator_values(G, values);
    fl.esc.chi[i + n] = fl.esc.chi[i].inverse();
  }
  fl.r.assign(2 * n, std::vector<long>(2 * n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) fl.r[i][j] = fl.r[i + n][j + n] = 1 - A[i][j];
  return fl;
}

}  // namespace qha
