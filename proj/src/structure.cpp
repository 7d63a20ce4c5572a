#include "qha/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qha {

std::size_t RSC::total_r() const {
  std::size_t t = 0;
  for (const auto& c : classes) t += c.r();
  return t;
}

const RSCClass* RSC::find_class(const Element& member) const {
  for (const auto& c : classes)
    if (c.cls.contains(member)) return &c;
  return nullptr;
}

const RSCClass& RSC::class_of_label(int label) const {
  for (const auto& c : classes)
    for (int l : c.labels)
      if (l == label) return c;
  throw std::out_of_range("unknown arrow label " + std::to_string(label));
}

std::size_t RSC::position_of_label(int label) const {
  const auto& c = class_of_label(label);
  return static_cast<std::size_t>(std::find(c.labels.begin(), c.labels.end(), label) - c.labels.begin());
}

bool RSC::is_central() const {
  for (const auto& c : classes)
    if (c.cls.members.size() != 1) return false;
  return true;
}

void RSC::validate() const {
  std::set<int> seen;
  for (const auto& c : classes) {
    if (c.labels.size() != c.chars.size()) throw std::invalid_argument("class labels and characters differ in count");
    for (int l : c.labels)
      if (!seen.insert(l).second) throw std::invalid_argument("arrow label used twice");
    for (const auto& ch : c.chars) {
      if (!group.finite()) continue;
      std::set<Element> dom(ch.domain().begin(), ch.domain().end());
      std::set<Element> z(c.cls.centralizer.begin(), c.cls.centralizer.end());
      if (dom != z) throw std::invalid_argument("character is not defined on the centralizer of " + group.render(c.cls.rep));
      if (!ch.verify_multiplicative()) throw std::invalid_argument("centralizer character is not multiplicative");
    }
  }
}

std::string RSC::str() const {
  std::string s;
  for (const auto& c : classes) {
    if (!s.empty()) s += "; ";
    s += "C(" + group.render(c.cls.rep) + ") r=" + std::to_string(c.r()) + " [";
    for (std::size_t i = 0; i < c.chars.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(c.labels[i]) + ":" + c.chars[i].str();
    }
    s += "]";
  }
  return s.empty() ? "r=0" : s;
}

void ESC::validate() const {
  if (g.size() != chi.size()) throw std::invalid_argument("ESC needs one character per element");
  for (const auto& x : g) {
    if (!group.contains(x)) throw std::invalid_argument("ESC element outside the group");
    if (!group.is_central(x)) throw std::invalid_argument("ESC element " + group.render(x) + " is not central");
  }
  for (const auto& c : chi)
    if (group.finite() && c.domain().size() != group.elements().size())
      throw std::invalid_argument("ESC character must be defined on the whole group");
}

std::string ESC::str() const {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += "; ";
    s += std::to_string(i + 1) + ":(" + group.render(g[i]) + ", " + chi[i].str() + ")";
  }
  return s.empty() ? "J=0" : s;
}

RSC make_rsc(const Group& g, const std::vector<std::pair<Element, std::vector<Character>>>& data) {
  RSC r;
  r.group = g;
  for (const auto& [x, chars] : data) {
    if (chars.empty()) continue;
    RSCClass c;
    c.cls = g.class_of(x);
    for (const auto& existing : r.classes)
      if (existing.cls.rep == c.cls.rep) throw std::invalid_argument("class listed twice in RSC");
    c.chars = chars;
    r.classes.push_back(std::move(c));
  }
  std::sort(r.classes.begin(), r.classes.end(), [](const RSCClass& a, const RSCClass& b) { return a.cls.rep < b.cls.rep; });
  int label = 1;
  for (auto& c : r.classes)
    for (std::size_t i = 0; i < c.chars.size(); ++i) c.labels.push_back(label++);
  r.validate();
  return r;
}

RSC esc_to_crsc(const ESC& e) {
  e.validate();
  RSC r;
  r.group = e.group;
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto it = pos.find(e.g[i]);
    if (it == pos.end()) {
      RSCClass c;
      c.cls = e.group.class_of(e.g[i]);
      it = pos.emplace(e.g[i], r.classes.size()).first;
      r.classes.push_back(std::move(c));
    }
    r.classes[it->second].labels.push_back(static_cast<int>(i + 1));
    r.classes[it->second].chars.push_back(e.chi[i]);
  }
  std::sort(r.classes.begin(), r.classes.end(), [](const RSCClass& a, const RSCClass& b) { return a.cls.rep < b.cls.rep; });
  return r;
}

ESC crsc_to_esc(const RSC& r) {
  if (!r.is_central()) throw std::invalid_argument("ramification is not central");
  ESC e;
  e.group = r.group;
  std::vector<std::pair<int, std::pair<Element, Character>>> items;
  for (const auto& c : r.classes) {
    if (!r.group.is_central(c.cls.rep)) throw std::invalid_argument("ramification is not central");
    for (std::size_t i = 0; i < c.r(); ++i) items.push_back({c.labels[i], {c.cls.rep, c.chars[i]}});
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [l, p] : items) {
    e.g.push_back(p.first);
    e.chi.push_back(p.second);
  }
  return e;
}

namespace {

// greedy matching of equivalent items; equivalence makes greedy complete
template <class Eq>
std::optional<std::vector<std::size_t>> match_all(std::size_t n, std::size_t m, Eq eq) {
  if (n != m) return std::nullopt;
  std::vector<bool> used(m, false);
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t k = 0; k < m && !found; ++k)
      if (!used[k] && eq(i, k)) {
        used[k] = true;
        out[i] = k;
        found = true;
      }
    if (!found) return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<RSCWitness> rsc_isomorphic(const RSC& a, const RSC& b, long bound) {
  if (a.classes.size() != b.classes.size()) return std::nullopt;
  const Group& G = a.group;
  const Group& H = b.group;
  for (const auto& phi : isomorphisms(G, H, bound)) {
    GroupMap phi_inv;
    for (const auto& [x, y] : phi) phi_inv.emplace(y, x);
    RSCWitness w;
    w.phi = phi;
    bool ok = true;
    std::vector<bool> used(b.classes.size(), false);
    for (const auto& ca : a.classes) {
      const Element img = phi.at(ca.cls.rep);
      std::size_t kb = b.classes.size();
      for (std::size_t k = 0; k < b.classes.size(); ++k)
        if (b.classes[k].cls.contains(img)) kb = k;
      if (kb == b.classes.size() || used[kb] || b.classes[kb].r() != ca.r()) {
        ok = false;
        break;
      }
      used[kb] = true;
      const auto& cb = b.classes[kb];
      // h_C with phi(h^{-1} u h) = u'
      const Element target = phi_inv.at(cb.cls.rep);
      std::optional<Element> hc;
      for (const auto& h : G.elements())
        if (G.conj(h, ca.cls.rep) == target) {
          hc = h;
          break;
        }
      if (!hc) {
        ok = false;
        break;
      }
      auto transport = [&](const Element& z) { return phi.at(G.conj(*hc, z)); };
      auto m = match_all(ca.r(), cb.r(), [&](std::size_t i, std::size_t k) {
        for (const auto& z : ca.cls.centralizer)
          if (!(cb.chars[k](transport(z)) == ca.chars[i](z))) return false;
        return true;
      });
      if (!m) {
        ok = false;
        break;
      }
      w.h.push_back(*hc);
      w.match.push_back(*m);
    }
    if (ok) return w;
  }
  return std::nullopt;
}

std::optional<ESCWitness> esc_isomorphic(const ESC& a, const ESC& b, long bound) {
  a.validate();
  b.validate();
  if (a.size() != b.size()) return std::nullopt;
  for (const auto& phi : isomorphisms(a.group, b.group, bound)) {
    auto m = match_all(a.size(), b.size(), [&](std::size_t i, std::size_t k) {
      if (phi.at(a.g[i]) != b.g[k]) return false;
      for (const auto& x : a.group.elements())
        if (!(b.chi[k](phi.at(x)) == a.chi[i](x))) return false;
      return true;
    });
    if (m) return ESCWitness{phi, *m};
  }
  return std::nullopt;
}

namespace {

// every one-dimensional character of a finite subgroup, by exponent rows against its greedy generators
std::vector<Character> subgroup_characters(const Group& g, const std::vector<Element>& sub) {
  const auto gens = greedy_generators(g, sub);
  std::vector<long> ord;
  for (const auto& x : gens) ord.push_back(g.element_order(x));
  std::vector<Character> out;
  std::vector<long> e(gens.size(), 0);
  while (true) {
    try {
      out.push_back(Character::on_subgroup(g, sub, e));
    } catch (const std::invalid_argument&) {
    }
    std::size_t k = 0;
    while (k < e.size() && ++e[k] == ord[k]) e[k++] = 0;
    if (k == e.size()) break;
  }
  return out;
}

std::vector<std::vector<long>> multisets(long n, int r) {
  std::vector<std::vector<long>> out;
  std::vector<long> seq(static_cast<std::size_t>(r), 0);
  while (true) {
    out.push_back(seq);
    int k = r - 1;
    while (k >= 0 && seq[static_cast<std::size_t>(k)] == n - 1) --k;
    if (k < 0) break;
    const long v = seq[static_cast<std::size_t>(k)] + 1;
    for (std::size_t t = static_cast<std::size_t>(k); t < seq.size(); ++t) seq[t] = v;
  }
  return out;
}

// non-abelian finite groups: enumerate all RSCs and keep the first of each isomorphism class
std::vector<RSC> classify_by_search(const Group& g, const Ramification& ram, long bound) {
  std::vector<std::pair<Element, int>> slots;
  for (const auto& [x, r] : ram) {
    if (r < 0) throw std::invalid_argument("negative ramification");
    if (r == 0) continue;
    const Element rep = g.class_of(x).rep;
    for (const auto& s : slots)
      if (s.first == rep) throw std::invalid_argument("class listed twice in ramification");
    slots.push_back({rep, r});
  }
  std::sort(slots.begin(), slots.end());
  std::vector<std::vector<Character>> chars;
  std::vector<std::vector<std::vector<long>>> options;
  double space = 1;
  for (const auto& [x, r] : slots) {
    chars.push_back(subgroup_characters(g, g.centralizer(x)));
    options.push_back(multisets(static_cast<long>(chars.back().size()), r));
    space *= static_cast<double>(options.back().size());
  }
  if (space > static_cast<double>(bound)) throw std::out_of_range("classification bound exceeded");

  std::vector<RSC> out;
  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    std::vector<std::pair<Element, std::vector<Character>>> data;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      std::vector<Character> cs;
      for (long c : options[s][pick[s]]) cs.push_back(chars[s][static_cast<std::size_t>(c)]);
      data.push_back({slots[s].first, std::move(cs)});
    }
    RSC cand = make_rsc(g, data);
    bool fresh = true;
    for (const auto& r : out)
      if (rsc_isomorphic(r, cand, bound)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(std::move(cand));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

}  // namespace

std::vector<RSC> classify_rsc(const Group& g, const Ramification& ram, long bound) {
  if (!g.finite()) throw std::invalid_argument("classification needs a finite group");
  if (g.kind() != Group::Kind::abelian) return classify_by_search(g, ram, bound);
  const auto& f = g.factors();
  const auto dual = g.elements();  // exponent rows of the dual group, same indexing
  const long nd = static_cast<long>(dual.size());
  long N = 1;
  for (long x : f) N = std::lcm(N, x);

  std::vector<std::pair<Element, int>> slots;
  for (const auto& [x, r] : ram) {
    if (r < 0) throw std::invalid_argument("negative ramification");
    if (r == 0) continue;
    for (const auto& s : slots)
      if (s.first == x) throw std::invalid_argument("class listed twice in ramification");
    slots.push_back({x, r});
  }
  std::sort(slots.begin(), slots.end());

  // size of the search space
  double space = 1;
  for (const auto& s : slots) {
    double c = 1;
    for (int i = 1; i <= s.second; ++i) c = c * static_cast<double>(nd + i - 1) / i;
    space *= c;
  }
  if (space > static_cast<double>(bound)) throw std::out_of_range("classification bound exceeded");

  // automorphisms preserving r, acting on elements and on exponent rows by chi -> chi o phi^{-1}
  std::map<Element, int> rmap(slots.begin(), slots.end());
  std::vector<std::pair<GroupMap, std::vector<long>>> acts;
  for (const auto& phi : automorphisms(g)) {
    bool keeps = true;
    for (const auto& [x, r] : slots) {
      auto it = rmap.find(phi.at(x));
      if (it == rmap.end() || it->second != r) keeps = false;
    }
    if (!keeps) continue;
    GroupMap inv;
    for (const auto& [x, y] : phi) inv.emplace(y, x);
    std::vector<long> img(static_cast<std::size_t>(nd));
    for (long c = 0; c < nd; ++c) {
      const auto& e = dual[static_cast<std::size_t>(c)].v;
      Element row;
      for (std::size_t k = 0; k < f.size(); ++k) {
        const Element x = inv.at(g.generator(static_cast<int>(k)));
        long s = 0;
        for (std::size_t l = 0; l < f.size(); ++l) s = (s + e[l] * x.v[l] % f[l] * (N / f[l])) % N;
        row.v.push_back(s / (N / f[k]));
      }
      img[static_cast<std::size_t>(c)] = g.index_of(row);
    }
    acts.push_back({phi, std::move(img)});
  }

  using Encoding = std::vector<std::vector<long>>;  // per slot, sorted dual indices
  auto canonical = [&](const Encoding& enc) {
    Encoding best;
    bool first = true;
    for (const auto& [phi, img] : acts) {
      std::vector<std::pair<Element, std::vector<long>>> moved;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        std::vector<long> cs;
        for (long c : enc[s]) cs.push_back(img[static_cast<std::size_t>(c)]);
        std::sort(cs.begin(), cs.end());
        moved.push_back({phi.at(slots[s].first), std::move(cs)});
      }
      std::sort(moved.begin(), moved.end());
      Encoding e2;
      for (auto& m : moved) e2.push_back(std::move(m.second));
      if (first || e2 < best) best = std::move(e2);
      first = false;
    }
    return best;
  };

  std::set<Encoding> reps;
  Encoding cur(slots.size());
  // nondecreasing index sequences per slot
  std::vector<std::vector<std::vector<long>>> options(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    std::vector<long> seq(static_cast<std::size_t>(slots[s].second), 0);
    while (true) {
      options[s].push_back(seq);
      int k = static_cast<int>(seq.size()) - 1;
      while (k >= 0 && seq[static_cast<std::size_t>(k)] == nd - 1) --k;
      if (k < 0) break;
      long v = seq[static_cast<std::size_t>(k)] + 1;
      for (std::size_t t = static_cast<std::size_t>(k); t < seq.size(); ++t) seq[t] = v;
    }
  }
  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) cur[s] = options[s][pick[s]];
    reps.insert(canonical(cur));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }

  std::vector<RSC> out;
  for (const auto& enc : reps) {
    std::vector<std::pair<Element, std::vector<Character>>> data;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      std::vector<Character> chars;
      for (long c : enc[s]) chars.push_back(Character::from_exponents(g, dual[static_cast<std::size_t>(c)].v));
      data.push_back({slots[s].first, std::move(chars)});
    }
    out.push_back(make_rsc(g, data));
  }
  return out;
}

Commutativity quantum_commutativity(const ESC& e) {
  bool diag = true;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e.q(i, j) * e.q(j, i) == Scalar(1)) continue;
      if (i != j) return Commutativity::neither;
      diag = false;
    }
  return diag ? Commutativity::commutative : Commutativity::weakly_commutative;
}

std::string to_string(Commutativity c) {
  switch (c) {
    case Commutativity::commutative:
      return "commutative";
    case Commutativity::weakly_commutative:
      return "weakly_commutative";
    case Commutativity::neither:
      return "neither";
  }
  return "";
}

}  // namespace qha
