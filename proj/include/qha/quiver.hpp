#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qha/group.hpp"
#include "qha/structure.hpp"

namespace qha {

struct Arrow {
  Element source;
  Element target;
  int label = 0;
  std::size_t cls = 0;  // position in RSC::classes
  std::size_t theta = 0;  // x^{-1} y = g_theta^{-1} u(C) g_theta

  bool operator==(const Arrow& o) const { return label == o.label && source == o.source && target == o.target; }
  bool operator<(const Arrow& o) const {
    if (label != o.label) return label < o.label;
    if (source != o.source) return source < o.source;
    return target < o.target;
  }
};

// p = a_n ... a_1 stored with arrows[0] = a_1; length 0 is the vertex `start`
struct Path {
  Element start;
  std::vector<Arrow> arrows;

  std::size_t length() const { return arrows.size(); }
  const Element& source() const { return start; }
  const Element& target() const { return arrows.empty() ? start : arrows.back().target; }
  static Path vertex(Element g) { return Path{std::move(g), {}}; }
  static Path of(const Arrow& a) { return Path{a.source, {a}}; }
  // a_k ... a_{j+1}, the subpath between positions j < k
  Path slice(std::size_t j, std::size_t k) const;

  bool operator==(const Path& o) const { return start == o.start && arrows == o.arrows; }
  bool operator<(const Path& o) const;
};

// d[i-1] = d_i
using ThinSplit = std::vector<int>;

// all splits in D_n^{n+m}, lexicographic in the displayed order (d_{n+m}, ..., d_1)
std::vector<ThinSplit> thin_splits(int n, int m, int bound = 12);
// (dA)_i for i = 1..n+m, returned in position order
std::vector<std::variant<Arrow, Element>> apply_thin_split(const ThinSplit& d, const Path& a);
std::string render_split(const ThinSplit& d);

class HopfQuiver {
 public:
  explicit HopfQuiver(RSC rsc);
  HopfQuiver(RSC rsc, std::vector<CosetSystem> cosets);

  const RSC& rsc() const { return rsc_; }
  const Group& group() const { return rsc_.group; }
  const CosetSystem& cosets(std::size_t cls) const { return cosets_.at(cls); }
  const std::vector<CosetSystem>& coset_systems() const { return cosets_; }

  std::vector<Arrow> arrows_from(const Element& x) const;
  std::vector<Arrow> arrows_between(const Element& x, const Element& y) const;
  // a^{(label)}_{y,x}; throws when x^{-1} y is not in the class of the label
  Arrow arrow(const Element& y, const Element& x, int label) const;
  std::vector<Arrow> arrows() const;
  std::vector<Path> paths(std::size_t length) const;

  std::string render(const Arrow& a) const;
  std::string render(const Path& p) const;
  Path parse_path(std::string_view text) const;

 private:
  RSC rsc_;
  std::vector<CosetSystem> cosets_;
};

}  // namespace qha
