#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "depol/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<depol::Rational> : GenericNumTraits<depol::Rational> {
  typedef depol::Rational Real;
  typedef depol::Rational NonInteger;
  typedef depol::Rational Nested;
  typedef depol::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20
  };
  static inline Real epsilon() { return depol::Rational(0); }
  static inline Real dummy_precision() { return depol::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace depol {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat6 = Eigen::Matrix<Rational, 6, 6>;
using Vec6 = Eigen::Matrix<Rational, 6, 1>;
using Mat12 = Eigen::Matrix<Rational, 12, 12>;
using Vec12 = Eigen::Matrix<Rational, 12, 1>;

// Reduced row echelon form with deterministic pivoting: columns are scanned
// left to right and the first row with a nonzero entry becomes the pivot.
struct Rref {
  Mat reduced;
  std::vector<int> pivot_cols;  // 0-based, strictly increasing
};
Rref rref(Mat m);

int rank(const Mat& m);

// Basis of the right null space, one vector per free column, in column order.
std::vector<Vec> kernel_basis(const Mat& m);

// Maximal independent subset of columns, chosen greedily left to right.
struct ImageBasis {
  std::vector<int> columns;  // 1-based indices into the input
  std::vector<Vec> vectors;
};
ImageBasis image_basis(const Mat& m);

struct LinearSolution {
  Vec particular;
  std::vector<Vec> kernel;
};
// One solution plus kernel basis, or nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const Mat& m, const Vec& rhs);

// Left row combination y with y^T m = 0 and y^T rhs != 0.
// Exists exactly when m x = rhs has no solution.
std::optional<Vec> inconsistency_certificate(const Mat& m, const Vec& rhs);

// RREF rows with zero rows dropped; canonical basis of the row space.
Mat row_space_echelon(const Mat& m);
bool same_row_space(const Mat& a, const Mat& b);
bool in_row_space(const Mat& echelon, const Vec& v);

}  // namespace depol
