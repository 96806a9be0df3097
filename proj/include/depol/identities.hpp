#pragma once

#include <optional>
#include <span>
#include <vector>

#include "depol/sigma3.hpp"

namespace depol {

// A degree-3 multilinear relation: sum_i left[i] * L-monomial_i plus
// sum_i right[i] * R-monomial_i equals zero, in the fixed monomial order.
struct Identity {
  GroupVec left;
  GroupVec right;

  bool is_zero() const { return left == GroupVec::Zero() && right == GroupVec::Zero(); }
  friend bool operator==(const Identity&, const Identity&) = default;
};

using Lambda12 = Vec12;

// A relation mixing the commutative product and the bracket:
// sum_i alpha[i] x_i.[x_{i+1},x_{i+2}] + sum_i beta[i] [x_i.x_{i+1}, x_{i+2}] = 0
// with cyclic indices.
struct DistributiveLaw {
  std::array<Rational, 3> alpha;
  std::array<Rational, 3> beta;
  friend bool operator==(const DistributiveLaw&, const DistributiveLaw&) = default;
};

// Coefficient transform between the (a|b) encoding of an identity of a single
// multiplication and the 12 coefficients of the equivalent relation between
// its commutative and anticommutative parts. Mutually inverse bijections.
Lambda12 polarize_coeffs(const Identity& id);
Identity depolarize_coeffs(const Lambda12& lambda);

// rho-vector of a distributive law and the induced (W1 | W2) identity.
Vec6 law_rho(const DistributiveLaw& d);
Identity encode_distributive(const DistributiveLaw& d);
// Inverse of encode_distributive; nullopt when the identity does not carry
// the distributive-law shape (right block must be the permuted negation of left).
std::optional<DistributiveLaw> decode_distributive(const Identity& id);

// The 6x6 pattern taking rho to the right block W2(rho).
Mat6 w2_pattern();

Vec12 stack(const Identity& id);
Identity sigma_translate(const Perm& s, const Identity& id);

// Witness u with combination_matrix(family.left) u = target.left and
// combination_matrix(family.right) u = target.right; nullopt when the target
// is not a linear consequence of the family's permutation orbit.
std::optional<Vec6> implies(const Identity& family, const Identity& target);

// Multi-axiom form: one column block of unknowns per axiom.
std::optional<Vec> implies(std::span<const Identity> family, const Identity& target);

// On NoSolution, a left row combination certifying inconsistency of the
// stacked system; nullopt when the implication holds.
std::optional<Vec> implies_certificate(std::span<const Identity> family, const Identity& target);

// Echelon basis of { rho : the law with coefficient vector rho is implied by
// the family }, solved as one homogeneous linear system in (u, rho).
std::vector<Vec6> consequence_space(const Identity& family);

}  // namespace depol
