#include "qha/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qha {

bool ConjClass::contains(const Element& x) const {
  return std::find(members.begin(), members.end(), x) != members.end();
}

struct Group::Impl {
  Kind kind;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  int identity = 0;
  std::vector<long> factors;
  int rank = 0;
  std::vector<Element> elements;
};

namespace {

long mod_pos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Group Group::cayley(std::vector<std::vector<int>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("Cayley table rows are not permutations");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      auto x = static_cast<std::size_t>(table[i][j]);
      if (seen[x]) throw std::invalid_argument("Cayley table columns are not permutations");
      seen[x] = true;
    }
  }
  int e = -1;
  for (std::size_t i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table[i][j] == static_cast<int>(j) && table[j][i] == static_cast<int>(j);
    if (ok) e = static_cast<int>(i);
  }
  if (e < 0) throw std::invalid_argument("Cayley table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto ab = static_cast<std::size_t>(table[a][b]);
        auto bc = static_cast<std::size_t>(table[b][c]);
        if (table[ab][c] != table[a][bc]) throw std::invalid_argument("Cayley table is not associative");
      }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::cayley;
  impl->identity = e;
  impl->inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == e) impl->inverse[a] = static_cast<int>(b);
  impl->table = std::move(table);
  for (std::size_t i = 0; i < n; ++i) impl->elements.push_back(Element{{static_cast<long>(i)}});
  Group g;
  g.impl_ = impl;
  return g;
}

Group Group::abelian(std::vector<long> factors) {
  for (long f : factors)
    if (f < 2) throw std::invalid_argument("invariant factors must be at least 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::abelian;
  impl->rank = static_cast<int>(factors.size());
  impl->factors = std::move(factors);
  // mixed radix, first coordinate most significant
  long n = 1;
  for (long f : impl->factors) n *= f;
  for (long idx = 0; idx < n; ++idx) {
    Element el;
    el.v.assign(impl->factors.size(), 0);
    long rest = idx;
    for (std::size_t k = impl->factors.size(); k-- > 0;) {
      el.v[k] = rest % impl->factors[k];
      rest /= impl->factors[k];
    }
    impl->elements.push_back(std::move(el));
  }
  Group g;
  g.impl_ = impl;
  return g;
}

Group Group::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("free abelian rank must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::free_abelian;
  impl->rank = rank;
  Group g;
  g.impl_ = impl;
  return g;
}

Group::Kind Group::kind() const { return impl_->kind; }

bool Group::is_abelian() const {
  if (impl_->kind != Kind::cayley) return true;
  const auto& t = impl_->table;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

long Group::order() const {
  if (!finite()) throw std::logic_error("order of an infinite group");
  return static_cast<long>(impl_->elements.size());
}

int Group::rank() const { return impl_->rank; }
const std::vector<long>& Group::factors() const { return impl_->factors; }

const std::vector<Element>& Group::elements() const {
  if (!finite()) throw std::logic_error("cannot list elements of a free abelian group");
  return impl_->elements;
}

Element Group::identity() const {
  if (impl_->kind == Kind::cayley) return Element{{impl_->identity}};
  return Element{std::vector<long>(static_cast<std::size_t>(impl_->rank), 0)};
}

Element Group::mul(const Element& a, const Element& b) const {
  if (impl_->kind == Kind::cayley)
    return Element{{impl_->table[static_cast<std::size_t>(a.v[0])][static_cast<std::size_t>(b.v[0])]}};
  Element r;
  r.v.resize(a.v.size());
  for (std::size_t k = 0; k < a.v.size(); ++k) {
    r.v[k] = a.v[k] + b.v[k];
    if (impl_->kind == Kind::abelian) r.v[k] = mod_pos(r.v[k], impl_->factors[k]);
  }
  return r;
}

Element Group::inv(const Element& a) const {
  if (impl_->kind == Kind::cayley) return Element{{impl_->inverse[static_cast<std::size_t>(a.v[0])]}};
  Element r;
  r.v.resize(a.v.size());
  for (std::size_t k = 0; k < a.v.size(); ++k) {
    r.v[k] = -a.v[k];
    if (impl_->kind == Kind::abelian) r.v[k] = mod_pos(r.v[k], impl_->factors[k]);
  }
  return r;
}

Element Group::pow(const Element& a, long k) const {
  if (impl_->kind != Kind::cayley) {
    Element r;
    r.v.resize(a.v.size());
    for (std::size_t i = 0; i < a.v.size(); ++i) {
      r.v[i] = a.v[i] * k;
      if (impl_->kind == Kind::abelian) r.v[i] = mod_pos(r.v[i], impl_->factors[i]);
    }
    return r;
  }
  Element base = k < 0 ? inv(a) : a;
  long e = k < 0 ? -k : k;
  Element r = identity();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Element Group::conj(const Element& g, const Element& x) const { return mul(mul(inv(g), x), g); }

long Group::index_of(const Element& a) const {
  if (impl_->kind == Kind::cayley) return a.v[0];
  if (impl_->kind == Kind::free_abelian) throw std::logic_error("free abelian elements have no index");
  long idx = 0;
  for (std::size_t k = 0; k < a.v.size(); ++k) idx = idx * impl_->factors[k] + a.v[k];
  return idx;
}

bool Group::contains(const Element& a) const {
  switch (impl_->kind) {
    case Kind::cayley:
      return a.v.size() == 1 && a.v[0] >= 0 && a.v[0] < static_cast<long>(impl_->table.size());
    case Kind::abelian:
      if (a.v.size() != impl_->factors.size()) return false;
      for (std::size_t k = 0; k < a.v.size(); ++k)
        if (a.v[k] < 0 || a.v[k] >= impl_->factors[k]) return false;
      return true;
    case Kind::free_abelian:
      return a.v.size() == static_cast<std::size_t>(impl_->rank);
  }
  return false;
}

bool Group::is_central(const Element& a) const {
  if (impl_->kind != Kind::cayley) return true;
  for (const auto& g : impl_->elements)
    if (mul(a, g) != mul(g, a)) return false;
  return true;
}

long Group::element_order(const Element& a) const {
  const Element e = identity();
  if (impl_->kind == Kind::free_abelian) return a == e ? 1 : 0;
  if (impl_->kind == Kind::abelian) {
    long o = 1;
    for (std::size_t k = 0; k < a.v.size(); ++k) {
      long f = impl_->factors[k];
      o = std::lcm(o, f / std::gcd(f, a.v[k]));
    }
    return o;
  }
  long o = 1;
  Element x = a;
  while (x != e) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

Element Group::generator(int k) const {
  if (impl_->kind == Kind::cayley) throw std::logic_error("Cayley groups have no standard generators");
  if (k < 0 || k >= impl_->rank) throw std::out_of_range("generator index");
  Element e = identity();
  e.v[static_cast<std::size_t>(k)] = 1;
  return e;
}

std::vector<Element> Group::centralizer(const Element& x) const {
  std::vector<Element> z;
  for (const auto& g : elements())
    if (mul(g, x) == mul(x, g)) z.push_back(g);
  return z;
}

std::vector<ConjClass> Group::conjugacy_classes() const {
  if (!finite()) throw std::logic_error("conjugacy classes of a free abelian group are not enumerated");
  std::vector<ConjClass> out;
  std::set<Element> done;
  for (const auto& x : elements()) {
    if (done.count(x)) continue;
    out.push_back(class_of(x));
    for (const auto& m : out.back().members) done.insert(m);
  }
  return out;
}

ConjClass Group::class_of(const Element& x) const {
  ConjClass c;
  if (!finite()) {
    c.rep = x;
    c.members = {x};
    return c;
  }
  std::set<Element> members;
  for (const auto& g : elements()) members.insert(conj(g, x));
  c.members.assign(members.begin(), members.end());
  c.rep = c.members.front();
  c.centralizer = centralizer(c.rep);
  return c;
}

std::string Group::render(const Element& a) const {
  if (impl_->kind == Kind::cayley) return "#" + std::to_string(a.v[0]);
  std::string s = "g^[";
  for (std::size_t k = 0; k < a.v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a.v[k]);
  }
  return s + "]";
}

Element Group::parse(std::string_view text) const {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto fail = [&]() -> Element { throw std::invalid_argument("cannot parse group element '" + std::string(text) + "'"); };
  if (t == "1" || t == "e") return identity();
  Element r;
  if (impl_->kind == Kind::cayley) {
    if (t.size() < 2 || t[0] != '#') return fail();
    try {
      r.v = {std::stol(t.substr(1))};
    } catch (const std::exception&) {
      return fail();
    }
  } else if (t.rfind("g^[", 0) == 0 && t.back() == ']') {
    std::stringstream ss(t.substr(3, t.size() - 4));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        r.v.push_back(std::stol(item));
      } catch (const std::exception&) {
        return fail();
      }
    }
    if (r.v.size() != static_cast<std::size_t>(impl_->rank)) return fail();
  } else if (impl_->rank == 1 && (t == "g" || t.rfind("g^", 0) == 0)) {
    long k = 1;
    if (t != "g") {
      try {
        k = std::stol(t.substr(2));
      } catch (const std::exception&) {
        return fail();
      }
    }
    r.v = {k};
  } else {
    return fail();
  }
  if (impl_->kind == Kind::abelian)
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] = mod_pos(r.v[k], impl_->factors[k]);
  if (!contains(r)) return fail();
  return r;
}

bool Group::operator==(const Group& o) const {
  if (impl_ == o.impl_) return true;
  if (impl_->kind != o.impl_->kind) return false;
  switch (impl_->kind) {
    case Kind::cayley:
      return impl_->table == o.impl_->table;
    case Kind::abelian:
      return impl_->factors == o.impl_->factors;
    case Kind::free_abelian:
      return impl_->rank == o.impl_->rank;
  }
  return false;
}

CosetSystem::CosetSystem(const Group& g, const ConjClass& cls) : group_(g), cls_(cls) {
  reps_.push_back(g.identity());
  if (!g.finite()) {
    trivial_ = true;
    return;
  }
  std::set<Element> covered(cls.centralizer.begin(), cls.centralizer.end());
  for (const auto& x : g.elements()) {
    if (covered.count(x)) continue;
    reps_.push_back(x);
    for (const auto& z : cls.centralizer) covered.insert(g.mul(z, x));
  }
  index();
}

CosetSystem::CosetSystem(const Group& g, const ConjClass& cls, std::vector<Element> reps)
    : group_(g), cls_(cls), reps_(std::move(reps)) {
  if (reps_.empty() || reps_[0] != g.identity())
    throw std::invalid_argument("coset system must start with the identity");
  if (!g.finite()) {
    if (reps_.size() != 1) throw std::invalid_argument("free abelian coset system has one coset");
    trivial_ = true;
    return;
  }
  index();
}

void CosetSystem::index() {
  const Group& g = group_;
  for (std::size_t t = 0; t < reps_.size(); ++t)
    for (const auto& z : cls_.centralizer) {
      auto [it, fresh] = coset_of_.emplace(g.mul(z, reps_[t]), t);
      if (!fresh) throw std::invalid_argument("coset representatives overlap");
    }
  if (coset_of_.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("coset representatives do not cover the group");
  for (std::size_t t = 0; t < reps_.size(); ++t) theta_of_member_[g.conj(reps_[t], cls_.rep)] = t;
}

std::size_t CosetSystem::theta_of(const Element& member) const {
  if (trivial_) return 0;
  auto it = theta_of_member_.find(member);
  if (it == theta_of_member_.end()) throw std::invalid_argument("element is not in the class");
  return it->second;
}

Element CosetSystem::conjugate(std::size_t theta) const {
  if (trivial_) return cls_.rep;
  return group_.conj(reps_.at(theta), cls_.rep);
}

std::pair<Element, std::size_t> CosetSystem::zeta(std::size_t theta, const Element& h) const {
  if (trivial_) return {h, 0};
  const Element gh = group_.mul(reps_.at(theta), h);
  const std::size_t t2 = coset_of_.at(gh);
  return {group_.mul(gh, group_.inv(reps_[t2])), t2};
}

std::vector<Element> greedy_generators(const Group& g, const std::vector<Element>& subgroup) {
  std::vector<Element> gens;
  std::set<Element> span{g.identity()};
  for (const auto& x : subgroup) {
    if (span.count(x)) continue;
    gens.push_back(x);
    // close under multiplication by the generators
    std::vector<Element> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const auto& y : frontier)
        for (const auto& s : gens) {
          Element z = g.mul(y, s);
          if (span.insert(z).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

std::vector<GroupMap> isomorphisms(const Group& a, const Group& b, long bound) {
  if (!a.finite() || !b.finite()) throw std::logic_error("isomorphism search needs finite groups");
  if (a.order() > bound || b.order() > bound) throw std::out_of_range("automorphism bound exceeded");
  std::vector<GroupMap> out;
  if (a.order() != b.order()) return out;
  const auto gens = greedy_generators(a, a.elements());
  std::vector<std::vector<Element>> candidates;
  for (const auto& s : gens) {
    std::vector<Element> c;
    for (const auto& y : b.elements())
      if (b.element_order(y) == a.element_order(s)) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  for (const auto& c : candidates)
    if (c.empty()) return out;
  while (true) {
    GroupMap f{{a.identity(), b.identity()}};
    std::vector<Element> queue{a.identity()};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const Element x = queue[qi];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        Element y = a.mul(x, gens[k]);
        Element img = b.mul(f.at(x), candidates[k][pick[k]]);
        auto [it, fresh] = f.emplace(y, img);
        if (fresh)
          queue.push_back(y);
        else
          ok = it->second == img;
      }
    }
    if (ok) {
      std::set<Element> image;
      for (const auto& [x, y] : f) image.insert(y);
      if (static_cast<long>(image.size()) == b.order()) out.push_back(std::move(f));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

std::vector<GroupMap> automorphisms(const Group& g, long bound) { return isomorphisms(g, g, bound); }

}  // namespace qha
