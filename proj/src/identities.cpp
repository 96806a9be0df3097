#include "depol/identities.hpp"

namespace depol {

Lambda12 polarize_coeffs(const Identity& id) {
  const GroupVec& a = id.left;
  const GroupVec& b = id.right;
  Lambda12 l;
  l(0) = a(0) + a(1) + b(2) + b(5);
  l(1) = a(2) + a(4) + b(0) + b(3);
  l(2) = a(3) + a(5) + b(1) + b(4);
  l(3) = a(0) + a(1) - b(2) - b(5);
  l(4) = a(2) + a(4) - b(0) - b(3);
  l(5) = a(3) + a(5) - b(1) - b(4);
  l(6) = a(0) - a(1) - b(2) + b(5);
  l(7) = a(2) - a(4) - b(0) + b(3);
  l(8) = a(3) - a(5) + b(1) - b(4);
  l(9) = a(0) - a(1) + b(2) - b(5);
  l(10) = a(2) - a(4) + b(0) - b(3);
  l(11) = a(3) - a(5) - b(1) + b(4);
  return l;
}

Identity depolarize_coeffs(const Lambda12& l) {
  const Rational q(1, 4);
  Identity id;
  GroupVec& a = id.left;
  GroupVec& b = id.right;
  a(0) = q * (l(0) + l(3) + l(6) + l(9));
  a(1) = q * (l(0) + l(3) - l(6) - l(9));
  b(2) = q * (l(0) - l(3) - l(6) + l(9));
  b(5) = q * (l(0) - l(3) + l(6) - l(9));
  a(2) = q * (l(1) + l(4) + l(7) + l(10));
  a(4) = q * (l(1) + l(4) - l(7) - l(10));
  b(0) = q * (l(1) - l(4) - l(7) + l(10));
  b(3) = q * (l(1) - l(4) + l(7) - l(10));
  a(3) = q * (l(2) + l(5) + l(8) + l(11));
  a(5) = q * (l(2) + l(5) - l(8) - l(11));
  b(1) = q * (l(2) - l(5) + l(8) - l(11));
  b(4) = q * (l(2) - l(5) - l(8) + l(11));
  return id;
}

Vec6 law_rho(const DistributiveLaw& d) {
  Vec6 rho;
  rho(0) = d.alpha[2] + d.beta[0];
  rho(1) = -d.alpha[2] + d.beta[0];
  rho(2) = -d.alpha[0] + d.beta[1];
  rho(3) = -d.alpha[1] + d.beta[2];
  rho(4) = d.alpha[0] + d.beta[1];
  rho(5) = d.alpha[1] + d.beta[2];
  return rho;
}

Mat6 w2_pattern() {
  Mat6 p = Mat6::Zero();
  p(0, 2) = Rational(-1);
  p(1, 5) = Rational(-1);
  p(2, 0) = Rational(-1);
  p(3, 4) = Rational(-1);
  p(4, 3) = Rational(-1);
  p(5, 1) = Rational(-1);
  return p;
}

Identity encode_distributive(const DistributiveLaw& d) {
  Vec6 rho = law_rho(d);
  return Identity{rho, w2_pattern() * rho};
}

std::optional<DistributiveLaw> decode_distributive(const Identity& id) {
  if (id.right != w2_pattern() * id.left) return std::nullopt;
  const Vec6& rho = id.left;
  const Rational h(1, 2);
  DistributiveLaw d;
  d.alpha[0] = h * (rho(4) - rho(2));
  d.alpha[1] = h * (rho(5) - rho(3));
  d.alpha[2] = h * (rho(0) - rho(1));
  d.beta[0] = h * (rho(0) + rho(1));
  d.beta[1] = h * (rho(2) + rho(4));
  d.beta[2] = h * (rho(3) + rho(5));
  return d;
}

Vec12 stack(const Identity& id) {
  Vec12 v;
  v.head<6>() = id.left;
  v.tail<6>() = id.right;
  return v;
}

Identity sigma_translate(const Perm& s, const Identity& id) {
  return Identity{left_translate(s, id.left), left_translate(s, id.right)};
}

namespace {
// Stacked 12 x 6k system [A_1 .. A_k ; B_1 .. B_k].
Mat stacked_system(std::span<const Identity> family) {
  const int k = static_cast<int>(family.size());
  Mat m(12, 6 * k);
  for (int j = 0; j < k; ++j) {
    m.block<6, 6>(0, 6 * j) = combination_matrix(family[j].left);
    m.block<6, 6>(6, 6 * j) = combination_matrix(family[j].right);
  }
  return m;
}
}  // namespace

std::optional<Vec6> implies(const Identity& family, const Identity& target) {
  std::array<Identity, 1> one{family};
  auto sol = implies(std::span<const Identity>(one), target);
  if (!sol) return std::nullopt;
  return Vec6(sol->head<6>());
}

std::optional<Vec> implies(std::span<const Identity> family, const Identity& target) {
  auto sol = solve(stacked_system(family), stack(target));
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<Vec> implies_certificate(std::span<const Identity> family, const Identity& target) {
  return inconsistency_certificate(stacked_system(family), stack(target));
}

std::vector<Vec6> consequence_space(const Identity& family) {
  // Homogeneous in (u, rho): A u = rho and B u = W2(rho).
  Mat m(12, 12);
  m.block<6, 6>(0, 0) = combination_matrix(family.left);
  m.block<6, 6>(0, 6) = -Mat6::Identity();
  m.block<6, 6>(6, 0) = combination_matrix(family.right);
  m.block<6, 6>(6, 6) = -w2_pattern();
  auto kernel = kernel_basis(m);

  Mat rho_rows(static_cast<int>(kernel.size()), 6);
  for (size_t i = 0; i < kernel.size(); ++i) {
    rho_rows.row(static_cast<int>(i)) = kernel[i].tail(6).transpose();
  }
  Mat echelon = row_space_echelon(rho_rows);

  std::vector<Vec6> basis;
  for (int i = 0; i < echelon.rows(); ++i) basis.push_back(Vec6(echelon.row(i).transpose()));
  return basis;
}

}  // namespace depol
