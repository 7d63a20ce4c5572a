#include "qha/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qha {

Path Path::slice(std::size_t j, std::size_t k) const {
  Path p;
  p.start = j == 0 ? start : arrows[j - 1].target;
  p.arrows.assign(arrows.begin() + static_cast<long>(j), arrows.begin() + static_cast<long>(k));
  return p;
}

bool Path::operator<(const Path& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (start != o.start) return start < o.start;
  // compare from the last arrow, the way paths are written
  for (std::size_t k = arrows.size(); k-- > 0;) {
    if (arrows[k] < o.arrows[k]) return true;
    if (o.arrows[k] < arrows[k]) return false;
  }
  return false;
}

std::vector<ThinSplit> thin_splits(int n, int m, int bound) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative thin split size");
  if (n + m > bound) throw std::out_of_range("thin split bound exceeded");
  std::vector<ThinSplit> out;
  // displayed tuple (d_{n+m}, ..., d_1): start from zeros first, the lexicographically least
  std::vector<int> shown(static_cast<std::size_t>(n + m), 0);
  std::fill(shown.end() - n, shown.end(), 1);
  do {
    out.emplace_back(shown.rbegin(), shown.rend());
  } while (std::next_permutation(shown.begin(), shown.end()));
  return out;
}

std::vector<std::variant<Arrow, Element>> apply_thin_split(const ThinSplit& d, const Path& a) {
  long ones = std::count(d.begin(), d.end(), 1);
  if (static_cast<std::size_t>(ones) != a.length()) throw std::invalid_argument("thin split does not match path length");
  std::vector<std::variant<Arrow, Element>> out;
  std::size_t di = 0;
  for (int bit : d) {
    if (bit == 1) {
      out.emplace_back(a.arrows[di]);
      ++di;
    } else {
      out.emplace_back(di == 0 ? a.start : a.arrows[di - 1].target);
    }
  }
  return out;
}

std::string render_split(const ThinSplit& d) {
  std::string s = "(";
  for (std::size_t k = d.size(); k-- > 0;) {
    s += std::to_string(d[k]);
    if (k) s += ",";
  }
  return s + ")";
}

HopfQuiver::HopfQuiver(RSC rsc) : rsc_(std::move(rsc)) {
  for (const auto& c : rsc_.classes) cosets_.emplace_back(rsc_.group, c.cls);
}

HopfQuiver::HopfQuiver(RSC rsc, std::vector<CosetSystem> cosets) : rsc_(std::move(rsc)), cosets_(std::move(cosets)) {
  if (cosets_.size() != rsc_.classes.size()) throw std::invalid_argument("one coset system per class required");
  for (std::size_t k = 0; k < cosets_.size(); ++k)
    if (!(cosets_[k].cls() == rsc_.classes[k].cls)) throw std::invalid_argument("coset system for the wrong class");
}

std::vector<Arrow> HopfQuiver::arrows_from(const Element& x) const {
  const Group& G = group();
  std::vector<Arrow> out;
  for (std::size_t c = 0; c < rsc_.classes.size(); ++c) {
    const auto& rc = rsc_.classes[c];
    for (const auto& m : rc.cls.members) {
      const std::size_t theta = cosets_[c].theta_of(m);
      for (int l : rc.labels) out.push_back(Arrow{x, G.mul(x, m), l, c, theta});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arrow> HopfQuiver::arrows_between(const Element& x, const Element& y) const {
  std::vector<Arrow> out;
  for (auto& a : arrows_from(x))
    if (a.target == y) out.push_back(a);
  return out;
}

Arrow HopfQuiver::arrow(const Element& y, const Element& x, int label) const {
  const Group& G = group();
  const Element m = G.mul(G.inv(x), y);
  const auto& rc = rsc_.class_of_label(label);
  if (!rc.cls.contains(m))
    throw std::invalid_argument("no arrow a" + std::to_string(label) + " from " + G.render(x) + " to " + G.render(y));
  const std::size_t c = static_cast<std::size_t>(&rc - rsc_.classes.data());
  return Arrow{x, y, label, c, cosets_[c].theta_of(m)};
}

std::vector<Arrow> HopfQuiver::arrows() const {
  std::vector<Arrow> out;
  for (const auto& x : group().elements())
    for (auto& a : arrows_from(x)) out.push_back(std::move(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> HopfQuiver::paths(std::size_t length) const {
  std::vector<Path> cur;
  for (const auto& x : group().elements()) cur.push_back(Path::vertex(x));
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Path> next;
    for (const auto& p : cur)
      for (const auto& a : arrows_from(p.target())) {
        Path q = p;
        q.arrows.push_back(a);
        next.push_back(std::move(q));
      }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::string HopfQuiver::render(const Arrow& a) const {
  return "a" + std::to_string(a.label) + "[" + group().render(a.target) + "<-" + group().render(a.source) + "]";
}

std::string HopfQuiver::render(const Path& p) const {
  if (p.arrows.empty()) return group().render(p.start);
  std::string s;
  for (std::size_t k = p.arrows.size(); k-- > 0;) {
    s += render(p.arrows[k]);
    if (k) s += "·";
  }
  return s;
}

Path HopfQuiver::parse_path(std::string_view text) const {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  // separators: middle dot or '*'
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.compare(i, 2, "·") == 0) {
      parts.push_back(cur);
      cur.clear();
      ++i;
    } else if (t[i] == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += t[i];
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && (parts[0].empty() || parts[0][0] != 'a')) return Path::vertex(group().parse(parts[0]));
  Path p;
  for (std::size_t k = parts.size(); k-- > 0;) {
    const std::string& s = parts[k];
    auto lb = s.find('['), sep = s.find("<-"), rb = s.rfind(']');
    if (s.empty() || s[0] != 'a' || lb == std::string::npos || sep == std::string::npos || rb != s.size() - 1)
      throw std::invalid_argument("cannot parse arrow '" + s + "'");
    int label = std::stoi(s.substr(1, lb - 1));
    Element y = group().parse(s.substr(lb + 1, sep - lb - 1));
    Element x = group().parse(s.substr(sep + 2, rb - sep - 2));
    Arrow a = arrow(y, x, label);
    if (p.arrows.empty())
      p.start = a.source;
    else if (p.target() != a.source)
      throw std::invalid_argument("arrows in '" + std::string(text) + "' are not composable");
    p.arrows.push_back(a);
  }
  return p;
}

}  // namespace qha
