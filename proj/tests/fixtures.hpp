#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "qha/character.hpp"
#include "qha/group.hpp"
#include "qha/quantum_group.hpp"
#include "qha/structure.hpp"

namespace qha::fixtures {

// Z2 with m loops per vertex; loops i > n carry chi_-
inline RSC z2_loops(int m, int n) {
  const Group G = Group::cyclic(2);
  const auto dual = dual_group(G);
  std::vector<Character> chars;
  for (int i = 1; i <= m; ++i) chars.push_back(i > n ? dual[1] : dual[0]);
  return make_rsc(G, {{G.identity(), chars}});
}

// S3 as permutations of {0,1,2} in lexicographic order, #0 = identity
inline Group s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)])];
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return Group::cayley(table);
}

// transposition class with the sign character of its centralizer and the 3-cycle class with a faithful one
inline RSC s3_rsc() {
  const Group G = s3();
  const Element t{{1}}, c{{3}};
  const auto zt = G.centralizer(t), zc = G.centralizer(c);
  return make_rsc(G, {{t, {Character::on_subgroup(G, zt, {1})}}, {c, {Character::on_subgroup(G, zc, {1})}}});
}

// single-index ESC over Z_n with chi(g) = zeta_n
inline ESC taft(long n) {
  const Group G = Group::cyclic(n);
  return ESC{G, {G.generator(0)}, {Character::from_exponents(G, {1})}};
}

// two-index quantum linear space over Z_n x Z_n with N_1 = N_2 = n
inline ESC linear_space(long n) {
  const Group G = Group::abelian({n, n});
  return ESC{G, {G.generator(0), G.generator(1)},
             {Character::from_exponents(G, {1, 1}), Character::from_exponents(G, {n - 1, 1})}};
}

inline FLData sl2() { return cartan_to_esc({{2}}, {1}, Scalar::q()); }
inline FLData sl3() { return cartan_to_esc({{2, -1}, {-1, 2}}, {1, 1}, Scalar::q()); }

}  // namespace qha::fixtures
