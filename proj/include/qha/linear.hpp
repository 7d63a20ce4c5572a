#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qha/report.hpp"
#include "qha/scalar.hpp"

namespace qha {

// finite linear combination over a basis B
template <class B>
using Lin = std::map<B, Scalar>;

template <class B>
using Tensor = Lin<std::pair<B, B>>;

template <class B>
void add_to(Lin<B>& x, const B& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = x.emplace(b, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

template <class B>
void add_all(Lin<B>& x, const Lin<B>& y, const Scalar& c = Scalar(1)) {
  if (c.is_one()) {
    for (const auto& [b, v] : y) add_to(x, b, v);
    return;
  }
  for (const auto& [b, v] : y) add_to(x, b, v * c);
}

template <class B>
Lin<B> single(const B& b, const Scalar& c = Scalar(1)) {
  Lin<B> x;
  add_to(x, b, c);
  return x;
}

template <class B, class Mul>
Lin<B> bilinear(const Lin<B>& x, const Lin<B>& y, Mul mul) {
  Lin<B> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) add_all(out, mul(a, b), ca * cb);
  return out;
}

template <class B>
std::string render_lin(const Lin<B>& x, const std::function<std::string(const B&)>& render) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : x) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (neg) cs = cs.substr(1);
    if (cs != "1") {
      bool compound = !c.is_rational() && (cs.find(' ') != std::string::npos);
      s += compound ? "(" + cs + ")*" : cs + "*";
    }
    s += render(b);
  }
  return s;
}

// structure maps of a Hopf algebra on a basis, for axiom checks on a finite test set
template <class B>
struct HopfOps {
  std::function<Lin<B>(const B&, const B&)> mul;
  std::function<Tensor<B>(const B&)> delta;
  std::function<Scalar(const B&)> eps;
  std::function<Lin<B>(const B&)> antipode;
  std::function<int(const B&)> degree;
  std::function<std::string(const B&)> render;
  B unit;
};

template <class B>
Lin<B> mul_lin(const HopfOps<B>& ops, const Lin<B>& x, const Lin<B>& y) {
  return bilinear(x, y, ops.mul);
}

template <class B>
Tensor<B> delta_lin(const HopfOps<B>& ops, const Lin<B>& x) {
  Tensor<B> out;
  for (const auto& [b, c] : x) add_all(out, ops.delta(b), c);
  return out;
}

template <class B>
Tensor<B> tensor_mul(const HopfOps<B>& ops, const Tensor<B>& x, const Tensor<B>& y) {
  Tensor<B> out;
  for (const auto& [ab, ca] : x)
    for (const auto& [cd, cb] : y) {
      const Lin<B> left = ops.mul(ab.first, cd.first);
      if (left.empty()) continue;
      const Lin<B> right = ops.mul(ab.second, cd.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) add_to(out, std::make_pair(l, r), ca * cb * cl * cr);
    }
  return out;
}

// the suite: coassociativity, counit, unit, associativity, multiplicativity of Delta and epsilon, antipode
template <class B>
std::vector<CheckResult> verify_hopf(const HopfOps<B>& ops, const std::vector<B>& basis, int max_degree, bool check_assoc = true) {
  CheckResult coassoc{"coassociativity", true, 0, ""};
  CheckResult counit{"counit", true, 0, ""};
  CheckResult unit{"unit", true, 0, ""};
  CheckResult assoc{"associativity", true, 0, ""};
  CheckResult dmul{"Delta multiplicative", true, 0, ""};
  CheckResult emul{"epsilon multiplicative", true, 0, ""};
  CheckResult anti{"antipode", true, 0, ""};
  // basis elements are interned so the caches key on integers
  std::map<B, int> ids;
  std::vector<B> items;
  auto id = [&](const B& b) {
    auto [it, fresh] = ids.emplace(b, static_cast<int>(items.size()));
    if (fresh) items.push_back(b);
    return it->second;
  };
  auto intern = [&](const Lin<B>& x) {
    Lin<int> out;
    for (const auto& [b, c] : x) out.emplace(id(b), c);
    return out;
  };
  std::unordered_map<std::uint64_t, Lin<int>> products;
  auto mul = [&](int a, int b) -> const Lin<int>& {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = products.find(key);
    if (it == products.end()) {
      Lin<int> p = intern(ops.mul(items[static_cast<std::size_t>(a)], items[static_cast<std::size_t>(b)]));
      it = products.emplace(key, std::move(p)).first;
    }
    return it->second;
  };
  auto mul_into = [&](const Lin<int>& x, const Lin<int>& y) {
    Lin<int> out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) add_all(out, mul(a, b), ca * cb);
    return out;
  };
  std::vector<std::optional<Tensor<int>>> coproducts;
  auto delta = [&](int b) -> const Tensor<int>& {
    if (coproducts.size() <= static_cast<std::size_t>(b)) coproducts.resize(static_cast<std::size_t>(b) + 1);
    auto& slot = coproducts[static_cast<std::size_t>(b)];
    if (!slot) {
      Tensor<int> t;
      for (const auto& [p, c] : ops.delta(items[static_cast<std::size_t>(b)])) t.emplace(std::pair{id(p.first), id(p.second)}, c);
      slot = std::move(t);
    }
    return *coproducts[static_cast<std::size_t>(b)];
  };
  std::vector<std::optional<Lin<int>>> antipodes;
  auto antipode = [&](int b) -> const Lin<int>& {
    if (antipodes.size() <= static_cast<std::size_t>(b)) antipodes.resize(static_cast<std::size_t>(b) + 1);
    if (!antipodes[static_cast<std::size_t>(b)]) {
      Lin<int> s = intern(ops.antipode(items[static_cast<std::size_t>(b)]));
      antipodes[static_cast<std::size_t>(b)] = std::move(s);
    }
    return *antipodes[static_cast<std::size_t>(b)];
  };
  std::vector<std::optional<Scalar>> counits;
  auto eps = [&](int b) -> const Scalar& {
    if (counits.size() <= static_cast<std::size_t>(b)) counits.resize(static_cast<std::size_t>(b) + 1);
    if (!counits[static_cast<std::size_t>(b)]) counits[static_cast<std::size_t>(b)] = ops.eps(items[static_cast<std::size_t>(b)]);
    return *counits[static_cast<std::size_t>(b)];
  };
  auto tensor_product = [&](const Tensor<int>& x, const Tensor<int>& y) {
    Tensor<int> out;
    for (const auto& [ab, ca] : x)
      for (const auto& [cd, cb] : y) {
        const Lin<int>& left = mul(ab.first, cd.first);
        if (left.empty()) continue;
        const Lin<int>& right = mul(ab.second, cd.second);
        for (const auto& [l, cl] : left)
          for (const auto& [r, cr] : right) add_to(out, std::make_pair(l, r), ca * cb * cl * cr);
      }
    return out;
  };
  auto render = [&](int b) { return ops.render(items[static_cast<std::size_t>(b)]); };

  const int one = id(ops.unit);
  std::vector<int> test_set;
  std::vector<std::vector<int>> by_degree(static_cast<std::size_t>(std::max(max_degree, 0) + 1));
  for (const auto& b : basis) {
    const int k = ops.degree(b);
    if (k < 0 || k > max_degree) continue;
    test_set.push_back(id(b));
    by_degree[static_cast<std::size_t>(k)].push_back(test_set.back());
  }

  using Triple = std::pair<int, std::pair<int, int>>;
  for (int b : test_set) {
    const Tensor<int> d = delta(b);
    // (Delta x id) Delta and (id x Delta) Delta as triples
    Lin<Triple> left, right;
    for (const auto& [p, c] : d) {
      for (const auto& [q, c2] : delta(p.first)) add_to(left, Triple{q.first, {q.second, p.second}}, c * c2);
      for (const auto& [q, c2] : delta(p.second)) add_to(right, Triple{p.first, {q.first, q.second}}, c * c2);
    }
    ++coassoc.checked;
    if (left != right) coassoc.fail(render(b));
    Lin<int> l1, r1;
    for (const auto& [p, c] : d) {
      add_to(l1, p.second, c * eps(p.first));
      add_to(r1, p.first, c * eps(p.second));
    }
    ++counit.checked;
    if (l1 != single(b) || r1 != single(b)) counit.fail(render(b));
    ++unit.checked;
    if (mul(one, b) != single(b) || mul(b, one) != single(b)) unit.fail(render(b));
    Lin<int> s1, s2;
    for (const auto& [p, c] : d) {
      add_all(s1, mul_into(antipode(p.first), single(p.second)), c);
      add_all(s2, mul_into(single(p.first), antipode(p.second)), c);
    }
    ++anti.checked;
    const Lin<int> expect = single(one, eps(b));
    if (s1 != expect || s2 != expect) anti.fail(render(b));
  }
  for (int du = 0; du <= max_degree; ++du)
    for (int dv = 0; du + dv <= max_degree; ++dv)
      for (int u : by_degree[static_cast<std::size_t>(du)])
        for (int v : by_degree[static_cast<std::size_t>(dv)]) {
          const Lin<int> uv = mul(u, v);
          ++dmul.checked;
          Tensor<int> duv;
          for (const auto& [b, c] : uv) add_all(duv, delta(b), c);
          if (duv != tensor_product(delta(u), delta(v))) dmul.fail(render(u) + " * " + render(v));
          ++emul.checked;
          Scalar e(0);
          for (const auto& [b, c] : uv) e += c * eps(b);
          if (!(e == eps(u) * eps(v))) emul.fail(render(u) + " * " + render(v));
          if (!check_assoc) continue;
          for (int dw = 0; du + dv + dw <= max_degree; ++dw)
            for (int w : by_degree[static_cast<std::size_t>(dw)]) {
              ++assoc.checked;
              if (mul_into(uv, single(w)) != mul_into(single(u), mul(v, w)))
                assoc.fail(render(u) + " * " + render(v) + " * " + render(w));
            }
        }
  std::vector<CheckResult> out{coassoc, counit, unit};
  if (check_assoc) out.push_back(assoc);
  out.push_back(dmul);
  out.push_back(emul);
  out.push_back(anti);
  return out;
}

}  // namespace qha
