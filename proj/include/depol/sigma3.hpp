#pragma once

#include <array>
#include <string>
#include <vector>

#include "depol/linalg.hpp"

namespace depol {

// Permutation of {1,2,3}; images[i-1] = sigma(i).
struct Perm {
  std::array<int, 3> images;

  int operator()(int i) const { return images[i - 1]; }
  friend bool operator==(const Perm&, const Perm&) = default;
};

inline constexpr int kGroupOrder = 6;

// Fixed ordered basis of the group algebra: Id, t12, t13, t23, c, c2,
// with c the 3-cycle 1->2->3->1. All 6-vectors use this coordinate order.
const std::array<Perm, kGroupOrder>& group_elements();
const Perm& basis_perm(int idx);
int perm_index(const Perm& p);
std::string perm_name(int idx);

// Function composition: (s*t)(i) = s(t(i)).
Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& p);
int signature(const Perm& p);

using GroupVec = Vec6;

// Coordinates of s*v for v in the group algebra.
GroupVec left_translate(const Perm& s, const GroupVec& v);

// Row sigma (in basis order) holds the coordinates of sigma*v.
Mat6 orbit_matrix(const GroupVec& v);

// Transpose of orbit_matrix: coords(sum_s u_s (s*v)) = combination_matrix(v) * u.
Mat6 combination_matrix(const GroupVec& v);

// Dimension of the submodule generated by v; rejects v = 0.
int module_rank(const GroupVec& v);

// Representatives of the rank classification of 6-vectors, instantiated at
// fixed sample parameter values admissible for each family.
struct RankFamily {
  std::string name;
  int declared_rank;
  GroupVec sample;
};
std::vector<RankFamily> rank_classification_samples();

// The 12 degree-3 monomials: 6 left-parenthesized then 6 right-parenthesized,
// each indexed by the basis permutation. Index 0..5 = L(sigma), 6..11 = R(sigma).
std::string monomial_name(int idx);

}  // namespace depol
