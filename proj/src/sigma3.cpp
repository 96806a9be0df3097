#include "depol/sigma3.hpp"

#include <stdexcept>

namespace depol {

const std::array<Perm, kGroupOrder>& group_elements() {
  static const std::array<Perm, kGroupOrder> table = {
      Perm{{1, 2, 3}},  // Id
      Perm{{2, 1, 3}},  // t12
      Perm{{3, 2, 1}},  // t13
      Perm{{1, 3, 2}},  // t23
      Perm{{2, 3, 1}},  // c
      Perm{{3, 1, 2}},  // c^2
  };
  return table;
}

const Perm& basis_perm(int idx) {
  if (idx < 0 || idx >= kGroupOrder) throw std::out_of_range("basis_perm: bad index");
  return group_elements()[idx];
}

int perm_index(const Perm& p) {
  const auto& table = group_elements();
  for (int i = 0; i < kGroupOrder; ++i) {
    if (table[i] == p) return i;
  }
  throw std::invalid_argument("perm_index: not a permutation of {1,2,3}");
}

std::string perm_name(int idx) {
  static const char* names[kGroupOrder] = {"id", "t12", "t13", "t23", "c", "c2"};
  return names[idx];
}

Perm compose(const Perm& s, const Perm& t) {
  return Perm{{s(t(1)), s(t(2)), s(t(3))}};
}

Perm inverse(const Perm& p) {
  Perm q{{0, 0, 0}};
  for (int i = 1; i <= 3; ++i) q.images[p(i) - 1] = i;
  return q;
}

int signature(const Perm& p) {
  int inv = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

GroupVec left_translate(const Perm& s, const GroupVec& v) {
  GroupVec out = GroupVec::Zero();
  for (int j = 0; j < kGroupOrder; ++j) {
    out(perm_index(compose(s, basis_perm(j)))) += v(j);
  }
  return out;
}

Mat6 orbit_matrix(const GroupVec& v) {
  Mat6 m;
  for (int i = 0; i < kGroupOrder; ++i) {
    m.row(i) = left_translate(basis_perm(i), v).transpose();
  }
  return m;
}

Mat6 combination_matrix(const GroupVec& v) { return orbit_matrix(v).transpose(); }

int module_rank(const GroupVec& v) {
  if (v == GroupVec::Zero()) throw std::invalid_argument("module_rank: zero vector");
  return rank(orbit_matrix(v));
}

namespace {
GroupVec gv(long a1, long a2, long a3, long a4, long a5, long a6) {
  GroupVec v;
  v << Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a5), Rational(a6);
  return v;
}
}  // namespace

std::vector<RankFamily> rank_classification_samples() {
  // Parameter choices: t=2 where t != 1 is required, (b1,b5)=(1,2),
  // (b1,b2)=(1,2) with b2 != +-b1, and (alpha,beta)=(1,1) which satisfies
  // alpha^2 != 1 + beta + beta^2.
  std::vector<RankFamily> fams;
  fams.push_back({"V1_1", 1, gv(1, -1, -1, -1, 1, 1)});
  fams.push_back({"V1_2", 1, gv(1, 1, 1, 1, 1, 1)});
  fams.push_back({"V2_1", 2, gv(1, -1, 3, -2, 2, -3)});   // (b1,-b1,b1+b5,-b5,b5,-b1-b5), b1=1, b5=2
  fams.push_back({"V2_2", 2, gv(1, 2, 2, 2, 1, 1)});      // (b1,b2,b2,b2,b1,b1), b2 != +-b1
  fams.push_back({"V3_1", 3, gv(1, 2, 0, -1, 0, -2)});    // (1,t,0,-1,0,-t), t=2
  fams.push_back({"V3_2", 3, gv(1, -1, 0, -2, 2, 0)});
  fams.push_back({"V3_3", 3, gv(-2, 0, -4, 1, -3, 2)});   // (-2,0,-(2+t),t-1,-(1+t),t), t=2
  fams.push_back({"V4_1", 4, gv(2, 3, 1, 0, 1, -1)});     // (2,1+t,1,0,1,1-t), t=2
  fams.push_back({"V4_2", 4, gv(2, 1, 0, 1, 1, 1)});
  fams.push_back({"V4_3", 4, gv(2, 0, 1, -1, 3, 1)});
  fams.push_back({"V4_4", 4, gv(1, 0, 1, -1, 1, -2)});    // (1,0,a,-a,b,-1-b), a=b=1
  fams.push_back({"V5_1", 5, gv(2, -1, -1, -1, 1, 0)});
  fams.push_back({"V5_2", 5, gv(2, 1, 1, 1, 1, 0)});
  fams.push_back({"V6_1", 6, gv(1, 0, 0, 0, 0, 0)});
  return fams;
}

std::string monomial_name(int idx) {
  static const char* names[12] = {
      "(x1x2)x3", "(x2x1)x3", "(x3x2)x1", "(x1x3)x2", "(x2x3)x1", "(x3x1)x2",
      "x1(x2x3)", "x2(x1x3)", "x3(x2x1)", "x1(x3x2)", "x2(x3x1)", "x3(x1x2)",
  };
  if (idx < 0 || idx >= 12) throw std::out_of_range("monomial_name: bad index");
  return names[idx];
}

}  // namespace depol
