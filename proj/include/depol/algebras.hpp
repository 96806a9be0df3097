#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "depol/identities.hpp"

namespace depol {

// Finite-dimensional algebra given by structure constants e_i e_j = sum_k c[i][j][k] e_k,
// optionally Z2-graded. Indices are 0-based internally.
struct StructureAlgebra {
  int dim = 0;
  std::vector<int> grading;    // empty = ungraded; else one 0/1 degree per basis vector
  std::vector<Rational> c;     // dim^3 entries, [(i*dim + j)*dim + k]

  static StructureAlgebra zero(int dim, std::vector<int> grading = {});

  bool graded() const { return !grading.empty(); }
  Rational& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  const Rational& at(int i, int j, int k) const { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  Vec product(const Vec& x, const Vec& y) const;
  Vec basis_product(int i, int j) const;

  bool commutative() const;
  bool anticommutative() const;
  // c[i][j][k] = 0 whenever deg(e_k) != deg(e_i) + deg(e_j) mod 2
  bool grading_consistent() const;
};

struct Failure {
  int i, j, k;  // 0-based basis triple, lexicographically first
  Vec residual;
};
using CheckResult = std::optional<Failure>;  // empty = pass

// Evaluates the 12-term relation on every basis triple; multilinearity makes
// basis triples sufficient. Graded algebras go through the signed checker.
CheckResult check_identity(const StructureAlgebra& alg, const Identity& id);

// mu = (dot + bracket)/2; dot must be commutative, bracket anticommutative.
StructureAlgebra depolarize_algebra(const StructureAlgebra& dot, const StructureAlgebra& bracket);
// x.y = xy + yx and [x,y] = xy - yx; exact inverse of depolarize_algebra.
std::pair<StructureAlgebra, StructureAlgebra> polarize_algebra(const StructureAlgebra& mu);

// Exact univariate rational polynomials, sparse by exponent.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  static Poly monomial(long exponent, Rational coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  void set(long exponent, Rational coeff);

  Poly derivative() const;
  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::map<long, Rational> coeffs_;  // exponent -> nonzero coefficient
};

// The function-space model: f.g = fg, [f,g] = f'g - fg', mu = (f.g + [f,g])/2.
Poly model_dot(const Poly& f, const Poly& g);
Poly model_bracket(const Poly& f, const Poly& g);
Poly model_mu(const Poly& f, const Poly& g);

struct PolyWitness {
  Poly f, g, h;
  Poly residual;
};
struct PolyCheckResult {
  bool pass = false;
  std::optional<PolyWitness> witness;
};

// Checks the relation exactly on the monomial basis t^a, a <= degree_bound
// (complete for polynomials of that degree by multilinearity), then on
// `trials` random polynomial triples drawn from the given seed.
PolyCheckResult poly_check(const Identity& id, int degree_bound, int trials, uint64_t seed);
PolyCheckResult poly_check(const DistributiveLaw& law, int degree_bound, int trials, uint64_t seed);

// Distinct values over all full bracketings of n copies of x; n <= 6.
// A singleton means the n-th power of x is unambiguous.
std::vector<Vec> power_defect(const StructureAlgebra& alg, const Vec& x, int n);

}  // namespace depol
