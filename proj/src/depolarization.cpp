#include "depol/depolarization.hpp"

#include <stdexcept>

namespace depol {

namespace {
GroupVec gv(long a1, long a2, long a3, long a4, long a5, long a6) {
  GroupVec v;
  v << Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a5), Rational(a6);
  return v;
}

// Scale a 12-vector identity to the smallest integer form with positive
// leading (first nonzero) coefficient.
Identity normalize_integral(const Identity& id) {
  Vec12 v = stack(id);
  mpz_class lcm_den(1);
  for (int i = 0; i < 12; ++i) {
    mpz_class den = v(i).denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  mpz_class gcd_num(0);
  for (int i = 0; i < 12; ++i) {
    mpz_class n = v(i).numerator() * (lcm_den / v(i).denominator());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
  }
  if (gcd_num == 0) return id;
  Rational scale{mpq_class(lcm_den, gcd_num)};
  Vec12 w = v * scale;
  for (int i = 0; i < 12; ++i) {
    if (!w(i).is_zero()) {
      if (w(i).sign() < 0) w = -w;
      break;
    }
  }
  return Identity{w.head<6>(), w.tail<6>()};
}
}  // namespace

Identity jacobi_identity() { return {gv(1, -1, -1, -1, 1, 1), gv(-1, 1, 1, 1, -1, -1)}; }
Identity associativity_identity() { return {gv(1, 1, -1, 0, -1, 0), gv(-1, 0, 1, -1, 0, 1)}; }
Identity leibniz_identity() { return {gv(1, 1, 1, -1, -1, 1), gv(-1, -1, -1, 1, 1, -1)}; }
Identity transposed_leibniz_identity() { return {gv(2, -2, 1, -1, 1, -1), gv(-1, 1, -2, -1, 1, 2)}; }
Identity aa_cyclic_identity() { return {gv(1, -1, -1, -1, 1, 1), gv(1, -1, -1, -1, 1, 1)}; }
Identity poisson_identity() { return {gv(3, 1, 0, -1, -1, 1), gv(-3, 0, 0, 0, 0, 0)}; }
Identity anti_pre_lie_identity() { return {gv(1, 1, 0, 0, 0, 0), gv(-1, -1, 0, 0, 0, 0)}; }
Identity flexible_identity() { return {gv(1, 0, 1, 0, 0, 0), gv(-1, 0, -1, 0, 0, 0)}; }

Identity jacass_family(const Rational& a1, const Rational& a2, const Rational& a3) {
  const Rational two(2), three(3), one(1);
  Identity id;
  id.left(0) = a1;
  id.left(1) = a2;
  id.left(2) = a3;
  id.left(3) = -two - three * a1 + two * a2 + two * a3;
  id.left(4) = -one - two * a1 + two * a2 + a3;
  id.left(5) = -two - two * a1 + a2 + two * a3;
  id.right = gv(1, 0, 0, 0, 0, 0);
  return id;
}

bool lie_admissible(const Identity& id) { return implies(id, jacobi_identity()).has_value(); }
bool assoc_admissible(const Identity& id) { return implies(id, associativity_identity()).has_value(); }

namespace {
// The jacass right block is the identity matrix, so the combination vector is
// forced to the target's right block and the left condition becomes an affine
// system in (a1, a2, a3). Returns the full 6-row system: M a = rhs.
void jacass_affine_system(const Identity& target, Mat& m, Vec& rhs) {
  const GroupVec u = target.right;
  auto image = [&](const Rational& a1, const Rational& a2, const Rational& a3) {
    return GroupVec(combination_matrix(jacass_family(a1, a2, a3).left) * u);
  };
  const GroupVec f0 = image(0, 0, 0);
  m.resize(6, 3);
  m.col(0) = image(1, 0, 0) - f0;
  m.col(1) = image(0, 1, 0) - f0;
  m.col(2) = image(0, 0, 1) - f0;
  rhs = target.left - f0;
}
}  // namespace

PoissonSolve solve_poisson() {
  Mat m;
  Vec rhs;
  jacass_affine_system(leibniz_identity(), m, rhs);
  auto sol = solve(m, rhs);
  if (!sol) throw std::logic_error("solve_poisson: Leibniz system inconsistent");
  PoissonSolve out;
  out.a1 = sol->particular(0);
  out.a2 = sol->particular(1);
  out.a3 = sol->particular(2);
  out.identity = normalize_integral(jacass_family(out.a1, out.a2, out.a3));
  return out;
}

TransposedSolve solve_transposed() {
  Mat m;
  Vec rhs;
  jacass_affine_system(transposed_leibniz_identity(), m, rhs);

  // Drop duplicate equations and divide each row by the gcd of its entries.
  Mat aug(6, 4);
  aug.leftCols(3) = m;
  aug.col(3) = rhs;
  std::vector<Vec> rows;
  for (int i = 0; i < 6; ++i) {
    mpz_class g(0), lcm(1);
    for (int j = 0; j < 4; ++j) {
      mpz_class den = aug(i, j).denominator();
      mpz_class t;
      mpz_gcd(t.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / t * den;
    }
    for (int j = 0; j < 4; ++j) {
      mpz_class n = aug(i, j).numerator() * (lcm / aug(i, j).denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) continue;
    Vec row(4);
    for (int j = 0; j < 4; ++j) row(j) = aug(i, j) * Rational(mpq_class(lcm, g));
    bool dup = false;
    for (const Vec& r : rows) {
      if (r == row || Vec(-r) == row) { dup = true; break; }
    }
    if (!dup) rows.push_back(std::move(row));
  }
  if (rows.size() != 3) throw std::logic_error("solve_transposed: unexpected reduced system size");

  TransposedSolve out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.system(i, j) = rows[i](j);
    out.rhs(i) = rows[i](3);
  }
  Mat sys(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sys(i, j) = out.system(i, j);
  Vec r(3);
  for (int i = 0; i < 3; ++i) r(i) = out.rhs(i);
  auto cert = inconsistency_certificate(sys, r);
  if (!cert) throw std::logic_error("solve_transposed: system unexpectedly consistent");
  out.certificate = *cert;
  return out;
}

std::array<Identity, 3> transposed_axioms() {
  return {transposed_leibniz_identity(), jacobi_identity(), associativity_identity()};
}

Identity abc_transposed(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw std::invalid_argument("abc_transposed: a must be nonzero");
  Identity id;
  id.left(0) = a;
  id.left(1) = -a;
  id.left(2) = c;
  id.left(3) = -b;
  id.left(4) = c;
  id.left(5) = -b;
  id.right(0) = -c;
  id.right(1) = b;
  id.right(2) = -a;
  id.right(3) = -c;
  id.right(4) = b;
  id.right(5) = a;
  return id;
}

AaCyclicReport aa_cyclic_consequence() {
  AaCyclicReport report;
  report.u = gv(1, -1, -1, -1, 1, 1);
  report.certified = aa_cyclic_identity();

  const Identity tlei = transposed_leibniz_identity();
  const GroupVec au = combination_matrix(tlei.left) * report.u;
  const GroupVec bu = combination_matrix(tlei.right) * report.u;
  if (au != GroupVec(report.u * Rational(4)) || bu != GroupVec(report.u * Rational(4)))
    throw std::logic_error("aa_cyclic_consequence: transposed Leibniz eigen-fact failed");
  report.tlei_eigenvalue = Rational(4);

  // The jacass combination matrices act on u by -1 (left) and +1 (right) for
  // every parameter value; the action is affine in the parameters, so checking
  // the four corner points proves it identically.
  const Rational corners[4][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& p : corners) {
    Identity fam = jacass_family(p[0], p[1], p[2]);
    if (GroupVec(combination_matrix(fam.left) * report.u) != GroupVec(-report.u))
      throw std::logic_error("aa_cyclic_consequence: jacass left eigen-fact failed");
    if (GroupVec(combination_matrix(fam.right) * report.u) != report.u)
      throw std::logic_error("aa_cyclic_consequence: jacass right eigen-fact failed");
  }

  auto law = decode_distributive(report.certified);
  if (!law) throw std::logic_error("aa_cyclic_consequence: certified identity not a law");
  report.law = *law;

  auto axioms = transposed_axioms();
  auto witness = implies(std::span<const Identity>(axioms), report.certified);
  if (!witness) throw std::logic_error("aa_cyclic_consequence: implication failed");
  report.witness = *witness;
  return report;
}

}  // namespace depol
