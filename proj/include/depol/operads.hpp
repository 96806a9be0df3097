#pragma once

#include "depol/identities.hpp"

namespace depol {

// A subspace of the 12-dimensional space of degree-3 monomial coefficients,
// stored as its canonical echelon basis and closed under the permutation action.
struct RelationSpace {
  Mat basis;  // echelon rows, 12 columns
  int dim() const { return static_cast<int>(basis.rows()); }
  friend bool operator==(const RelationSpace& a, const RelationSpace& b) {
    return a.basis.rows() == b.basis.rows() && a.basis == b.basis;
  }
};

// Span of all permutation translates of the given identities.
RelationSpace orbit_span(std::span<const Identity> ids);

// 12 minus the orbit span dimension: the arity-3 component of the quotient.
int dim_arity3(std::span<const Identity> ids);

// Diagonal form on the 12 monomials: +sign(sigma) on L(sigma), -sign(sigma) on R(sigma).
Mat12 pairing_matrix();

// Annihilator under the pairing; dimension is always 12 - dim.
RelationSpace dual_relations(const RelationSpace& r);

bool is_self_dual(const RelationSpace& r);

// Dimensions of the free one-generator algebra over the quotient by the given
// identities, degrees 0..max_degree. Degree-n relations are all substitutions
// of tree monomials into the identities plus left/right products of
// lower-degree relations with tree monomials. max_degree is capped at 5.
std::vector<long> free_dims(std::span<const Identity> ids, int max_degree);

long catalan(int n);

// Full binary trees with a fixed number of leaves; degree-n pool has
// catalan(n-1) entries in a deterministic order.
struct TreePool {
  explicit TreePool(int max_degree);
  int count(int degree) const;
  // Index of node(left, right) where left/right are indices in their pools.
  int node(int ldeg, int lidx, int rdeg, int ridx) const;
  std::string name(int degree, int idx) const;

 private:
  // offsets[n][k] = first index at degree n of trees whose left subtree has degree k
  std::vector<std::vector<int>> offsets_;
  std::vector<int> counts_;
};

// Reference 6x12 relation matrices for the transposed Poisson operad and its
// pairing image, as commonly tabulated.
Mat tp_matrix();
Mat dtp_matrix();

}  // namespace depol
