#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qha/linear.hpp"

namespace qha {

// Incremental Gaussian elimination on sparse vectors, tracking how each vector
// was combined from the inputs.
template <class K>
class Eliminator {
 public:
  // returns the dependency (coefficients over all inputs so far) if v is in the span
  std::optional<std::vector<Scalar>> insert(Lin<K> v) {
    const std::size_t idx = count_++;
    std::map<std::size_t, Scalar> combo{{idx, Scalar(1)}};
    while (!v.empty()) {
      const K key = v.begin()->first;
      auto it = rows_.find(key);
      if (it == rows_.end()) {
        rows_.emplace(key, Row{std::move(v), std::move(combo)});
        return std::nullopt;
      }
      const Scalar f = v.begin()->second / it->second.vec.begin()->second;
      for (const auto& [k, c] : it->second.vec) add_to(v, k, -f * c);
      for (const auto& [k, c] : it->second.combo) add_to(combo, k, -f * c);
    }
    std::vector<Scalar> dep(count_, Scalar(0));
    for (const auto& [k, c] : combo) dep[k] = c;
    return dep;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Lin<K> vec;
    std::map<std::size_t, Scalar> combo;
  };
  std::map<K, Row> rows_;
  std::size_t count_ = 0;
};

template <class K>
std::size_t rank_of(const std::vector<Lin<K>>& vecs) {
  Eliminator<K> e;
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

// basis of {x : sum_j x_j images[j] = 0}
template <class K>
std::vector<std::vector<Scalar>> kernel_of(const std::vector<Lin<K>>& images) {
  Eliminator<K> e;
  std::vector<std::vector<Scalar>> out;
  for (const auto& v : images) {
    auto dep = e.insert(v);
    if (dep) {
      dep->resize(images.size(), Scalar(0));
      out.push_back(std::move(*dep));
    }
  }
  return out;
}

}  // namespace qha
