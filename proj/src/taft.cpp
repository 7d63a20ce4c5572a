#include "qha/taft.hpp"

#include <cctype>
#include <stdexcept>

#include "qha/linalg.hpp"

namespace qha {

namespace {

ESC inverted(const ESC& e) {
  ESC out = e;
  for (auto& c : out.chi) c = c.inverse();
  return out;
}

BWord to_word(const PBWMonomial& a) {
  BWord w;
  for (std::size_t j = 0; j < a.m.size(); ++j) w.insert(w.end(), static_cast<std::size_t>(a.m[j]), static_cast<int>(j));
  return w;
}

CopathAlgebra copath_of(const ESC& e, std::size_t cutoff) {
  return CopathAlgebra(ArrowBimodule(HopfQuiver(esc_to_crsc(e))), cutoff);
}

Path arrow_path(const CopathAlgebra& c, const ESC& e, std::size_t j) {
  return Path::of(c.quiver().arrow(e.g[j], e.group.identity(), static_cast<int>(j + 1)));
}

}  // namespace

long PBWMonomial::degree() const {
  long d = 0;
  for (long x : m) d += x;
  return d;
}

TaftAlgebra::TaftAlgebra(ESC e) : e_(std::move(e)) {
  e_.validate();
  if (quantum_commutativity(e_) == Commutativity::neither)
    throw std::invalid_argument("multiple Taft algebras need a quantum weakly commutative system");
  for (std::size_t j = 0; j < e_.size(); ++j) {
    const auto ord = e_.q(j, j).root_of_unity_order();
    n_.push_back(ord && *ord > 1 ? *ord : 0);
  }
}

PBWMonomial TaftAlgebra::vertex(const Element& g) const { return PBWMonomial{g, std::vector<long>(size(), 0)}; }

PBWMonomial TaftAlgebra::generator(std::size_t j) const {
  PBWMonomial a = vertex(group().identity());
  a.m.at(j) = 1;
  return a;
}

TaftElement TaftAlgebra::multiply(const PBWMonomial& a, const PBWMonomial& b) const {
  const Group& G = group();
  const std::size_t t = size();
  Scalar c(1);
  PBWMonomial out{G.mul(a.g, b.g), std::vector<long>(t, 0)};
  for (std::size_t j = 0; j < t; ++j) {
    // E_j^{m_j} h = chi_j(h)^{m_j} h E_j^{m_j}
    if (a.m[j]) c *= e_.chi[j](b.g).pow(a.m[j]);
    out.m[j] = a.m[j] + b.m[j];
    if (n_[j] > 0 && out.m[j] >= n_[j]) return {};
  }
  // E_i^{m_i} E_j^{n_j} = chi_j(g_i^{-1})^{m_i n_j} E_j^{n_j} E_i^{m_i} for i > j
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a.m[i] && b.m[j]) c *= e_.q(j, i).inverse().pow(a.m[i] * b.m[j]);
  return single(out, c);
}

TaftElement TaftAlgebra::multiply(const TaftElement& a, const TaftElement& b) const {
  return bilinear(a, b, [this](const PBWMonomial& x, const PBWMonomial& y) { return multiply(x, y); });
}

TaftElement TaftAlgebra::normal_form(const TaftWord& w) const {
  TaftElement acc = single(vertex(group().identity()));
  for (const auto& tok : w) {
    const PBWMonomial f = std::holds_alternative<Element>(tok) ? vertex(std::get<Element>(tok))
                                                                : generator(static_cast<std::size_t>(std::get<int>(tok)));
    acc = multiply(acc, single(f));
  }
  return acc;
}

TaftElement TaftAlgebra::normal_form_random(const TaftWord& input, std::mt19937_64& rng) const {
  const Group& G = group();
  TaftWord w = input;
  Scalar c(1);
  auto is_e = [](const TaftToken& t) { return std::holds_alternative<int>(t); };
  while (true) {
    // (position, kind): 0 merge group elements, 1 push E past h, 2 swap E_i E_j, 3 drop identity, 4 nilpotent run
    std::vector<std::pair<std::size_t, int>> redexes;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!is_e(w[k]) && std::get<Element>(w[k]) == G.identity() && w.size() > 1) redexes.push_back({k, 3});
      if (k + 1 < w.size()) {
        if (!is_e(w[k]) && !is_e(w[k + 1])) redexes.push_back({k, 0});
        if (is_e(w[k]) && !is_e(w[k + 1])) redexes.push_back({k, 1});
        if (is_e(w[k]) && is_e(w[k + 1]) && std::get<int>(w[k]) > std::get<int>(w[k + 1])) redexes.push_back({k, 2});
      }
      if (is_e(w[k])) {
        const int j = std::get<int>(w[k]);
        const long n = n_[static_cast<std::size_t>(j)];
        std::size_t e = k;
        while (e < w.size() && is_e(w[e]) && std::get<int>(w[e]) == j) ++e;
        if (n > 0 && static_cast<long>(e - k) >= n) redexes.push_back({k, 4});
      }
    }
    if (redexes.empty()) break;
    const auto [k, kind] = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    switch (kind) {
      case 0:
        w[k] = G.mul(std::get<Element>(w[k]), std::get<Element>(w[k + 1]));
        w.erase(w.begin() + static_cast<long>(k) + 1);
        break;
      case 1: {
        const int j = std::get<int>(w[k]);
        c *= e_.chi[static_cast<std::size_t>(j)](std::get<Element>(w[k + 1]));
        std::swap(w[k], w[k + 1]);
        break;
      }
      case 2: {
        const auto i = static_cast<std::size_t>(std::get<int>(w[k])), j = static_cast<std::size_t>(std::get<int>(w[k + 1]));
        c *= e_.q(j, i).inverse();
        std::swap(w[k], w[k + 1]);
        break;
      }
      case 3:
        w.erase(w.begin() + static_cast<long>(k));
        break;
      default:
        return {};
    }
  }
  PBWMonomial out = vertex(G.identity());
  for (const auto& tok : w) {
    if (is_e(tok))
      ++out.m[static_cast<std::size_t>(std::get<int>(tok))];
    else
      out.g = std::get<Element>(tok);
  }
  return single(out, c);
}

Tensor<PBWMonomial> TaftAlgebra::comultiply(const PBWMonomial& a) const {
  Tensor<PBWMonomial> acc = single(std::make_pair(vertex(a.g), vertex(a.g)));
  const PBWMonomial one = vertex(group().identity());
  for (std::size_t j = 0; j < size(); ++j)
    for (long k = 0; k < a.m[j]; ++k) {
      // Delta(E_j) = E_j (x) 1 + g_j (x) E_j
      Tensor<PBWMonomial> d;
      add_to(d, std::make_pair(generator(j), one), Scalar(1));
      add_to(d, std::make_pair(vertex(e_.g[j]), generator(j)), Scalar(1));
      Tensor<PBWMonomial> next;
      for (const auto& [ab, c1] : acc)
        for (const auto& [cd, c2] : d) {
          const TaftElement l = multiply(ab.first, cd.first);
          if (l.empty()) continue;
          const TaftElement r = multiply(ab.second, cd.second);
          for (const auto& [lw, lc] : l)
            for (const auto& [rw, rc] : r) add_to(next, std::make_pair(lw, rw), c1 * c2 * lc * rc);
        }
      acc = std::move(next);
    }
  return acc;
}

TaftElement TaftAlgebra::antipode(const PBWMonomial& a) const {
  const Group& G = group();
  // S(g E^m) = S(E_t)^{m_t} ... S(E_1)^{m_1} g^{-1}, S(E_j) = -g_j^{-1} E_j
  TaftElement out = single(vertex(G.identity()));
  for (std::size_t j = size(); j-- > 0;) {
    PBWMonomial s = generator(j);
    s.g = G.inv(e_.g[j]);
    for (long k = 0; k < a.m[j]; ++k) out = multiply(out, single(s, Scalar(-1)));
  }
  return multiply(out, single(vertex(G.inv(a.g))));
}

HopfOps<PBWMonomial> TaftAlgebra::ops() const {
  HopfOps<PBWMonomial> o;
  o.mul = [this](const PBWMonomial& a, const PBWMonomial& b) { return multiply(a, b); };
  o.delta = [this](const PBWMonomial& a) { return comultiply(a); };
  o.eps = [this](const PBWMonomial& a) { return counit(a); };
  o.antipode = [this](const PBWMonomial& a) { return antipode(a); };
  o.degree = [](const PBWMonomial& a) { return static_cast<int>(a.degree()); };
  o.render = [this](const PBWMonomial& a) { return render(a); };
  o.unit = vertex(group().identity());
  return o;
}

std::vector<PBWMonomial> TaftAlgebra::diagram_basis(long cutoff) const {
  std::vector<std::vector<long>> cur{{}};
  for (std::size_t j = 0; j < size(); ++j) {
    std::vector<std::vector<long>> next;
    for (const auto& m : cur) {
      long used = 0;
      for (long x : m) used += x;
      for (long k = 0; used + k <= cutoff && (n_[j] == 0 || k < n_[j]); ++k) {
        next.push_back(m);
        next.back().push_back(k);
      }
    }
    cur = std::move(next);
  }
  std::vector<PBWMonomial> out;
  for (auto& m : cur) out.push_back(PBWMonomial{group().identity(), std::move(m)});
  std::stable_sort(out.begin(), out.end(), [](const PBWMonomial& a, const PBWMonomial& b) { return a.degree() < b.degree(); });
  return out;
}

std::vector<PBWMonomial> TaftAlgebra::basis(long max_degree) const {
  std::vector<PBWMonomial> out;
  const auto diag = diagram_basis(max_degree);
  for (const auto& g : group().elements())
    for (const auto& d : diag) out.push_back(PBWMonomial{g, d.m});
  return out;
}

std::optional<long> TaftAlgebra::dimension() const {
  if (!group().finite()) return std::nullopt;
  long d = group().order();
  for (long n : n_) {
    if (n == 0) return std::nullopt;
    d *= n;
  }
  return d;
}

std::string TaftAlgebra::render(const PBWMonomial& a) const {
  std::string s;
  if (a.degree() == 0 || a.g != group().identity()) s = group().render(a.g);
  for (std::size_t j = 0; j < a.m.size(); ++j) {
    if (!a.m[j]) continue;
    if (!s.empty()) s += " * ";
    s += "E" + std::to_string(j + 1);
    if (a.m[j] > 1) s += "^" + std::to_string(a.m[j]);
  }
  return s;
}

std::string TaftAlgebra::render(const TaftElement& x) const {
  return render_lin<PBWMonomial>(x, [this](const PBWMonomial& a) { return render(a); });
}

std::string TaftAlgebra::render(const TaftWord& w) const {
  std::string s;
  for (const auto& tok : w) {
    if (!s.empty()) s += " * ";
    s += std::holds_alternative<int>(tok) ? "E" + std::to_string(std::get<int>(tok) + 1) : group().render(std::get<Element>(tok));
  }
  return s.empty() ? group().render(group().identity()) : s;
}

TaftWord TaftAlgebra::parse(std::string_view text) const {
  std::vector<std::string> parts{""};
  for (char c : text) {
    if (c == '*')
      parts.emplace_back();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      parts.back() += c;
  }
  TaftWord w;
  for (const auto& p : parts) {
    if (p.size() > 1 && p[0] == 'E' && std::isdigit(static_cast<unsigned char>(p[1]))) {
      const int j = std::stoi(p.substr(1));
      if (j < 1 || static_cast<std::size_t>(j) > size()) throw std::invalid_argument("no generator " + p);
      w.push_back(j - 1);
    } else {
      w.push_back(group().parse(p));
    }
  }
  return w;
}

PathElement to_copath(const CopathAlgebra& c, const TaftAlgebra& t, const PBWMonomial& a) {
  PathElement acc = single(Path::vertex(a.g));
  for (std::size_t j = 0; j < a.m.size(); ++j)
    for (long k = 0; k < a.m[j]; ++k) acc = c.multiply(acc, single(arrow_path(c, t.esc(), j)));
  return acc;
}

std::vector<CheckResult> check_embedding(const TaftAlgebra& t, int degree) {
  CheckResult prod{"Taft product agrees with co-path product", true, 0, ""};
  CheckResult inj{"PBW basis is independent in kQ^c", true, 0, ""};
  const CopathAlgebra c = copath_of(t.esc(), static_cast<std::size_t>(degree));
  const auto basis = t.basis(degree);
  std::map<PBWMonomial, PathElement> image;
  for (const auto& a : basis) image.emplace(a, to_copath(c, t, a));
  auto embed = [&](const TaftElement& x) {
    PathElement out;
    for (const auto& [a, s] : x) add_all(out, image.at(a), s);
    return out;
  };
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.degree() + b.degree() > degree) continue;
      ++prod.checked;
      if (embed(t.multiply(a, b)) != c.multiply(image.at(a), image.at(b))) prod.fail(t.render(a) + " * " + t.render(b));
    }
  std::vector<PathElement> imgs;
  for (const auto& a : basis) imgs.push_back(image.at(a));
  inj.checked = static_cast<long>(imgs.size());
  const std::size_t rank = rank_of(imgs);
  if (rank != imgs.size()) inj.fail("rank " + std::to_string(rank) + " of " + std::to_string(imgs.size()));
  return {prod, inj};
}

CheckResult check_confluence(const TaftAlgebra& t, int words, std::uint64_t seed, int max_length) {
  CheckResult r{"normal forms independent of rewriting order", true, 0, ""};
  std::mt19937_64 rng(seed);
  const auto& elems = t.group().elements();
  const int gens = static_cast<int>(t.size());
  for (int k = 0; k < words; ++k) {
    const int len = std::uniform_int_distribution<int>(0, max_length)(rng);
    TaftWord w;
    for (int i = 0; i < len; ++i) {
      if (gens > 0 && std::uniform_int_distribution<int>(0, 2)(rng) > 0)
        w.push_back(std::uniform_int_distribution<int>(0, gens - 1)(rng));
      else
        w.push_back(elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)]);
    }
    const TaftElement ref = t.normal_form(w);
    for (int run = 0; run < 3; ++run) {
      ++r.checked;
      const TaftElement got = t.normal_form_random(w, rng);
      if (got != ref) r.fail(t.render(w) + ": " + t.render(got) + " vs " + t.render(ref));
    }
  }
  return r;
}

std::vector<CheckResult> verify_taft(const TaftAlgebra& t, int degree) { return verify_hopf(t.ops(), t.basis(degree), degree); }

Tensor<PBWMonomial> taft_diagram_comultiply(const TaftAlgebra& t, const PBWMonomial& r) {
  Tensor<PBWMonomial> out;
  for (const auto& [ab, c] : t.comultiply(r))
    for (const auto& [cd, c2] : t.comultiply(ab.second)) {
      if (cd.first.degree() != 0) continue;
      for (const auto& [left, c3] : t.multiply(single(ab.first), t.antipode(cd.first)))
        add_to(out, std::make_pair(left, cd.second), c * c2 * c3);
    }
  return out;
}

std::vector<CheckResult> nichols_check(const ESC& e, int cutoff) {
  const TaftAlgebra t(e);
  long top = 0;
  bool finite = true;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t.nilpotency(j) == 0) finite = false;
    top += t.nilpotency(j) - 1;
  }
  if (!finite || top > cutoff) top = cutoff;
  const BraidedAlgebra R(inverted(e), Flavor::linear, static_cast<std::size_t>(std::max<long>(top, 1)));
  CheckResult prim{"primitives exactly in degree 1 (through degree " + std::to_string(top) + ")", true, 0, ""};
  for (long d = 0; d <= top; ++d) {
    ++prim.checked;
    const auto p = primitives(R, static_cast<std::size_t>(d));
    const std::size_t expect = d == 1 ? t.size() : 0;
    if (p.size() != expect)
      prim.fail("degree " + std::to_string(d) + ": " + std::to_string(p.size()) + " primitives" +
                (p.empty() ? "" : ", e.g. " + R.render(p.front())));
  }
  CheckResult diag{"diagram Delta equals R(G, g_i, chi_i^-1)", true, 0, ""};
  for (const auto& r : t.diagram_basis(top)) {
    ++diag.checked;
    BTensor mapped;
    bool coinvariant = true;
    for (const auto& [ab, c] : taft_diagram_comultiply(t, r)) {
      if (ab.first.g != e.group.identity() || ab.second.g != e.group.identity()) coinvariant = false;
      add_to(mapped, std::make_pair(to_word(ab.first), to_word(ab.second)), c);
    }
    if (!coinvariant || mapped != R.comultiply(to_word(r))) diag.fail(t.render(r));
  }
  return {prim, diag, check_relations_descend(R, static_cast<int>(top))};
}

std::vector<CheckResult> presentation_check(const ESC& e) {
  const TaftAlgebra t(e);
  const Group& G = e.group;
  if (!G.finite()) throw std::invalid_argument("presentation check needs a finite group");
  const CopathAlgebra c = copath_of(e, 2);
  CheckResult c1{"(i) G consists of group-likes", true, 0, ""};
  CheckResult c2{"(ii) generated by G and independent X_j", true, 0, ""};
  CheckResult c3{"(iii) X_j is (1, g_j)-primitive", true, 0, ""};
  CheckResult c4{"(iv) X_j g = chi_j(g) g X_j", true, 0, ""};
  CheckResult c5{"(v) X_j X_i = chi_j(g_i) X_i X_j", true, 0, ""};
  CheckResult c6{"(vi) A_(0) and A_(1) meet in 0", true, 0, ""};
  for (const auto& g : G.elements()) {
    ++c1.checked;
    const Path v = Path::vertex(g);
    if (c.comultiply(v) != single(std::make_pair(v, v)) || !(c.counit(v) == Scalar(1))) c1.fail(G.render(g));
  }
  std::vector<PathElement> gens;
  for (std::size_t j = 0; j < e.size(); ++j) gens.push_back(single(arrow_path(c, e, j)));
  c2.checked = static_cast<long>(gens.size());
  if (rank_of(gens) != gens.size()) c2.fail("X_j are dependent");
  for (const auto& a : t.basis(6)) {
    ++c2.checked;
    TaftWord w{a.g};
    for (std::size_t j = 0; j < a.m.size(); ++j) w.insert(w.end(), static_cast<std::size_t>(a.m[j]), static_cast<int>(j));
    if (t.normal_form(w) != single(a)) c2.fail(t.render(a));
  }
  for (std::size_t j = 0; j < e.size(); ++j) {
    const Path x = arrow_path(c, e, j);
    ++c3.checked;
    PathTensor expect;
    add_to(expect, std::make_pair(x, Path::vertex(G.identity())), Scalar(1));
    add_to(expect, std::make_pair(Path::vertex(e.g[j]), x), Scalar(1));
    if (c.comultiply(x) != expect) c3.fail("X" + std::to_string(j + 1));
    for (const auto& g : G.elements()) {
      ++c4.checked;
      PathElement rhs = c.multiply(Path::vertex(g), x);
      for (auto& [p, s] : rhs) s *= e.chi[j](g);
      if (c.multiply(x, Path::vertex(g)) != rhs) c4.fail("X" + std::to_string(j + 1) + " at " + G.render(g));
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == j) continue;
      ++c5.checked;
      PathElement rhs = c.multiply(arrow_path(c, e, i), x);
      for (auto& [p, s] : rhs) s *= e.q(j, i);
      if (c.multiply(x, arrow_path(c, e, i)) != rhs) c5.fail("X" + std::to_string(j + 1) + " X" + std::to_string(i + 1));
    }
  }
  std::vector<PathElement> low;
  for (const auto& g : G.elements()) low.push_back(single(Path::vertex(g)));
  for (const auto& g : G.elements())
    for (const auto& x : gens) low.push_back(c.multiply(single(Path::vertex(g)), x));
  c6.checked = static_cast<long>(low.size());
  if (rank_of(low) != low.size()) c6.fail("kG + span{h X_i} is not direct");
  return {c1, c2, c3, c4, c5, c6};
}

std::vector<CommutationEntry> commutation_table(const ESC& e) {
  const CopathAlgebra c = copath_of(e, 2);
  std::vector<CommutationEntry> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      PathElement rhs = c.multiply(arrow_path(c, e, j), arrow_path(c, e, i));
      for (auto& [p, s] : rhs) s *= e.q(j, i).inverse();
      out.push_back({i, j, c.multiply(arrow_path(c, e, i), arrow_path(c, e, j)) == rhs});
    }
  return out;
}

std::vector<CheckResult> check_biproduct_iso(const TaftAlgebra& t, int pairs, std::uint64_t seed, int degree) {
  CheckResult prod{"biproduct product matches Taft product", true, 0, ""};
  CheckResult co{"biproduct Delta matches Taft Delta", true, 0, ""};
  const Biproduct B(BraidedAlgebra(inverted(t.esc()), Flavor::linear, static_cast<std::size_t>(degree)));
  const Group& G = t.group();
  auto map = [&](const BiWord& a) {
    PBWMonomial r = t.vertex(G.identity());
    for (int i : a.first) ++r.m[static_cast<std::size_t>(i)];
    return t.multiply(r, t.vertex(a.second));
  };
  auto map_lin = [&](const Lin<BiWord>& x) {
    TaftElement out;
    for (const auto& [a, c] : x) add_all(out, map(a), c);
    return out;
  };
  std::vector<std::vector<BWord>> by_degree;
  for (int d = 0; d <= degree; ++d) by_degree.push_back(B.braided().basis(static_cast<std::size_t>(d)));
  const auto& elems = G.elements();
  std::mt19937_64 rng(seed);
  auto pick = [&](int max_d) {
    const int d = std::uniform_int_distribution<int>(0, max_d)(rng);
    const auto& ws = by_degree[static_cast<std::size_t>(d)];
    BWord w = ws.empty() ? BWord{} : ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)];
    return BiWord{w, elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)]};
  };
  for (int k = 0; k < pairs; ++k) {
    const BiWord a = pick(degree);
    const BiWord b = pick(degree - static_cast<int>(a.first.size()));
    ++prod.checked;
    if (map_lin(B.multiply(a, b)) != t.multiply(map(a), map(b))) prod.fail(B.render(a) + " * " + B.render(b));
    ++co.checked;
    Tensor<PBWMonomial> lhs, rhs;
    for (const auto& [p, c] : B.comultiply(a))
      for (const auto& [l, lc] : map(p.first))
        for (const auto& [r, rc] : map(p.second)) add_to(lhs, std::make_pair(l, r), c * lc * rc);
    for (const auto& [m, c] : map(a)) add_all(rhs, t.comultiply(m), c);
    if (lhs != rhs) co.fail(B.render(a));
  }
  return {prod, co};
}

}  // namespace qha
