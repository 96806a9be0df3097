#include "depol/homlie.hpp"

#include <stdexcept>

#include "depol/depolarization.hpp"

namespace depol {

namespace {
Vec apply(const Endomorphism& f, const Vec& x) { return f * x; }

Vec basis_vec(int dim, int i) {
  Vec e = Vec::Zero(dim);
  e(i) = Rational(1);
  return e;
}
}  // namespace

CheckResult hom_jacobi_check(const StructureAlgebra& bracket, const Endomorphism& f) {
  if (!bracket.anticommutative())
    throw std::invalid_argument("hom_jacobi_check: bracket is not anticommutative");
  const int n = bracket.dim;
  if (f.rows() != n || f.cols() != n)
    throw std::invalid_argument("hom_jacobi_check: endomorphism dimension mismatch");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec r = bracket.product(bracket.basis_product(i, j), apply(f, basis_vec(n, k))) +
                bracket.product(bracket.basis_product(j, k), apply(f, basis_vec(n, i))) +
                bracket.product(bracket.basis_product(k, i), apply(f, basis_vec(n, j)));
        if (r != Vec::Zero(n)) return Failure{i, j, k, r};
      }
    }
  }
  return std::nullopt;
}

std::vector<Endomorphism> gv_basis(const StructureAlgebra& bracket) {
  if (!bracket.anticommutative())
    throw std::invalid_argument("gv_basis: bracket is not anticommutative");
  const int n = bracket.dim;
  // Unknowns f(r,c) flattened row-major. Conditions [f(e_i),e_j] + [e_i,f(e_j)] = 0
  // for i < j (i = j holds automatically, (j,i) is the negative of (i,j)).
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        Vec row = Vec::Zero(n * n);
        for (int l = 0; l < n; ++l) {
          row(l * n + i) += bracket.at(l, j, m);  // [f(e_i), e_j]
          row(l * n + j) += bracket.at(i, l, m);  // [e_i, f(e_j)]
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Mat system(static_cast<int>(rows.size()), n * n);
  for (size_t r = 0; r < rows.size(); ++r) system.row(static_cast<int>(r)) = rows[r].transpose();

  std::vector<Endomorphism> basis;
  for (const Vec& v : kernel_basis(system)) {
    Endomorphism f(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f(r, c) = v(r * n + c);
    basis.push_back(std::move(f));
  }
  return basis;
}

ClosureResult gv_closure_check(const StructureAlgebra& bracket) {
  auto basis = gv_basis(bracket);
  const int n = bracket.dim;
  Mat span(static_cast<int>(basis.size()), n * n);
  for (size_t b = 0; b < basis.size(); ++b)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) span(static_cast<int>(b), r * n + c) = basis[b](r, c);
  Mat echelon = row_space_echelon(span);

  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Endomorphism comm = basis[i] * basis[j] - basis[j] * basis[i];
      Vec flat(n * n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) flat(r * n + c) = comm(r, c);
      if (!in_row_space(echelon, flat))
        return {false, static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {};
}

BulletResult bullet_from_f(const StructureAlgebra& bracket, const Endomorphism& f) {
  const int n = bracket.dim;
  BulletResult out;
  out.algebra = StructureAlgebra::zero(n, bracket.grading);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec v = bracket.product(basis_vec(n, i), apply(f, basis_vec(n, j)));
      for (int k = 0; k < n; ++k) out.algebra.at(i, j, k) = v(k);
    }
  }
  out.commutative = out.algebra.commutative();
  if (!out.commutative) {
    for (int i = 0; i < n && out.wi < 0; ++i)
      for (int j = i + 1; j < n && out.wi < 0; ++j)
        if (out.algebra.basis_product(i, j) != out.algebra.basis_product(j, i)) {
          out.wi = i;
          out.wj = j;
        }
  }
  return out;
}

CheckResult lemma2_check(const StructureAlgebra& dot) {
  if (!dot.commutative()) throw std::invalid_argument("lemma2_check: product is not commutative");
  const int n = dot.dim;
  auto assoc = [&](int i, int j, int k) {
    Vec e = basis_vec(n, k);
    Vec left = dot.product(dot.basis_product(i, j), e);
    Vec right = dot.product(basis_vec(n, i), dot.basis_product(j, k));
    return Vec(left - right);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec cyc = assoc(i, j, k) + assoc(j, k, i) + assoc(k, i, j);
        if (cyc != Vec::Zero(n)) return Failure{i, j, k, cyc};
        Vec flex = assoc(i, j, k) + assoc(k, j, i);
        if (flex != Vec::Zero(n)) return Failure{i, j, k, flex};
      }
    }
  }
  return std::nullopt;
}

CheckResult theorem7_check(const StructureAlgebra& mu) {
  return check_identity(mu, aa_cyclic_identity());
}

StructureAlgebra heisenberg3() {
  StructureAlgebra h = StructureAlgebra::zero(3);
  h.at(0, 1, 2) = Rational(1);
  h.at(1, 0, 2) = Rational(-1);
  return h;
}

}  // namespace depol
