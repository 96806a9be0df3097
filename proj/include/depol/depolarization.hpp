#pragma once

#include "depol/identities.hpp"

namespace depol {

// Named degree-3 identities in the fixed monomial order.
Identity jacobi_identity();
Identity associativity_identity();
Identity leibniz_identity();
Identity transposed_leibniz_identity();
Identity aa_cyclic_identity();
Identity poisson_identity();
Identity anti_pre_lie_identity();
Identity flexible_identity();

// The two-parameter-free family of identities satisfied by every
// depolarization of an (associative commutative, Lie) pair.
Identity jacass_family(const Rational& a1, const Rational& a2, const Rational& a3);

bool lie_admissible(const Identity& id);
bool assoc_admissible(const Identity& id);

struct PoissonSolve {
  Rational a1, a2, a3;  // the unique parameters making the family imply Leibniz
  Identity identity;    // normalized to the smallest integer vector, leading coefficient positive
};
// Solves the Leibniz implication over the jacass family. Throws logic_error
// if the system is inconsistent (which would indicate an implementation bug).
PoissonSolve solve_poisson();

struct TransposedSolve {
  Eigen::Matrix<Rational, 3, 3> system;  // reduced equations in (a1, a2, a3)
  Eigen::Matrix<Rational, 3, 1> rhs;
  Vec certificate;  // y with y^T system = 0 and y . rhs != 0
};
// The same pipeline with the transposed Leibniz target; always inconsistent,
// returns the reduced system together with a machine-checkable certificate.
TransposedSolve solve_transposed();

// The three axioms every depolarized transposed Poisson multiplication satisfies.
std::array<Identity, 3> transposed_axioms();

// Generalized transposed law a x3.[x1,x2] - b [x3.x1,x2] - c [x1,x3.x2] = 0; a != 0.
Identity abc_transposed(const Rational& a, const Rational& b, const Rational& c);

struct AaCyclicReport {
  Vec6 u;                   // the sign vector (1,-1,-1,-1,1,1)
  Rational tlei_eigenvalue; // combination matrices of the transposed Leibniz blocks scale u by this
  Identity certified;       // the cyclic identity implied by the axioms
  DistributiveLaw law;      // its distributive-law form
  Vec witness;              // stacked witness for implies(transposed_axioms, certified)
};
// Certifies the cyclic consequence of the transposed axioms, including the
// eigen-facts on u for the transposed Leibniz blocks and for the jacass family
// (left block scales u by -1, right block fixes u, for every parameter value).
AaCyclicReport aa_cyclic_consequence();

}  // namespace depol
