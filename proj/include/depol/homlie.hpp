#pragma once

#include "depol/algebras.hpp"

namespace depol {

using Endomorphism = Mat;  // square rational matrix over the algebra basis

// Checks [[x1,x2],f(x3)] + [[x2,x3],f(x1)] + [[x3,x1],f(x2)] = 0 on basis
// triples; the bracket must be anticommutative.
CheckResult hom_jacobi_check(const StructureAlgebra& bracket, const Endomorphism& f);

// Basis of { f : [f(x),y] + [x,f(y)] = 0 }, solved as a linear system in the
// n^2 entries of f with a deterministic echelon kernel basis.
std::vector<Endomorphism> gv_basis(const StructureAlgebra& bracket);

struct ClosureResult {
  bool pass = true;
  int i = -1, j = -1;  // witness pair on failure
};
// Commutators of basis members stay inside the span.
ClosureResult gv_closure_check(const StructureAlgebra& bracket);

struct BulletResult {
  StructureAlgebra algebra;  // x.y = [x, f(y)]
  bool commutative = false;
  int wi = -1, wj = -1;  // witness basis pair when noncommutative
};
BulletResult bullet_from_f(const StructureAlgebra& bracket, const Endomorphism& f);

// For a commutative product: the associator summed over the 3-cycles vanishes
// and the product is flexible. Rejects noncommutative input.
CheckResult lemma2_check(const StructureAlgebra& dot);

// The alternating sum of the antiassociator AA(x,y,z) = (xy)z + x(yz) over all
// six variable orders, with transposition terms negated.
CheckResult theorem7_check(const StructureAlgebra& mu);

// 3-dimensional Heisenberg bracket [e1,e2] = e3 = -[e2,e1].
StructureAlgebra heisenberg3();

}  // namespace depol
