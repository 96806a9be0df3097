#pragma once

#include "depol/algebras.hpp"

namespace depol {

// Sign exponents are stored structurally as subsets of variable pairs; the
// realized sign on homogeneous inputs of degrees (d1,d2,d3) is
// (-1)^(sum over chosen pairs of d_i d_j).
enum SignPair : unsigned { kSignXY = 1u, kSignXZ = 2u, kSignYZ = 4u };

struct SignedTerm {
  Rational coeff;
  unsigned signs = 0;  // bitmask over SignPair
};

// Twelve terms over the fixed monomial order (6 left- then 6 right-parenthesized).
struct SignedIdentity {
  std::array<SignedTerm, 12> terms;

  // Specialization at degrees (0,0,0): all signs become +1.
  Identity degree0() const;
};

SignedIdentity lift_unsigned(const Identity& id);

// Named graded identities. Each specializes at degrees (0,0,0) to its
// ungraded counterpart exactly.
SignedIdentity super_poisson();
SignedIdentity super_jacobi();
SignedIdentity super_associativity();
SignedIdentity super_leibniz();
SignedIdentity super_transposed_leibniz();
SignedIdentity super_flexibility();
// Graded form of the two-sided admissibility family; degree-0 gives jacass_family.
SignedIdentity super_jacass(const Rational& a1, const Rational& a2, const Rational& a3);

// Evaluates a signed identity on every homogeneous basis triple of a graded
// algebra; reports the lexicographically first failing triple.
CheckResult check_signed(const StructureAlgebra& alg, const SignedIdentity& sid);

// Flexibility with the graded sign on the reversed associator.
CheckResult superflexibility_check(const StructureAlgebra& alg);

// Multivariate polynomial with rational coefficients in the parameters a,b,c,d.
class ParamPoly {
 public:
  using Monomial = std::array<int, 4>;

  ParamPoly() = default;
  static ParamPoly variable(int idx);
  static ParamPoly constant(Rational r);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Monomial, Rational>& coeffs() const { return coeffs_; }

  // Divide by rational content and make the leading (lex-first) coefficient positive.
  ParamPoly normalized() const;
  ParamPoly substituted(const std::array<std::optional<Rational>, 4>& values) const;
  Rational evaluate(const std::array<Rational, 4>& values) const;
  std::string str() const;

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const Rational& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  std::map<Monomial, Rational> coeffs_;
};

// Generic graded 2-dimensional product e0e0 = a e0, e0e1 = b e1, e1e0 = c e1,
// e1e1 = d e0, evaluated symbolically against the graded Poisson identity on
// all homogeneous triples; returns the distinct nonzero normalized conditions.
std::vector<ParamPoly> classify_dim2_conditions();

// Shipped 2-dimensional graded families, verified against the classification
// conditions. sp24 extends sp22 by the odd square; the antisymmetric variant
// with a nonzero odd square fails the identity and is not a valid family.
StructureAlgebra sp21(const Rational& a);
StructureAlgebra sp22(const Rational& a);
StructureAlgebra sp23(const Rational& b);
StructureAlgebra sp24(const Rational& a, const Rational& d);

// 3-dimensional graded instance with a nonzero odd square and a nontrivial
// even action; mixed-degree elements fail third-power associativity on it.
StructureAlgebra odd_line_superalgebra();

}  // namespace depol
