#include <doctest.h>

#include "depol/depolarization.hpp"
#include "depol/linalg.hpp"

using namespace depol;

namespace {
struct SplitMix {
  uint64_t state;
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Mat random_matrix(SplitMix& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(rng.range(-5, 5), rng.range(1, 3));
  return m;
}
}  // namespace

TEST_CASE("rank basics") {
  Mat id6 = Mat(Mat6::Identity());
  CHECK(rank(id6) == 6);
  CHECK(rank(Mat(Mat::Zero(6, 6))) == 0);
  // the combination matrix of the Leibniz coefficient vector has rank 3
  CHECK(rank(Mat(combination_matrix(leibniz_identity().left))) == 3);
}

TEST_CASE("solve with identity matrix") {
  Mat id6 = Mat(Mat6::Identity());
  Vec rhs(6);
  for (int i = 0; i < 6; ++i) rhs(i) = Rational(i + 1);
  auto sol = solve(id6, rhs);
  REQUIRE(sol);
  CHECK(sol->particular == rhs);
  CHECK(sol->kernel.empty());
}

TEST_CASE("inconsistent system has a certificate") {
  Mat m(3, 3);
  m << Rational(-1), Rational(1), Rational(0),
       Rational(-4), Rational(2), Rational(2),
       Rational(2), Rational(0), Rational(-2);
  Vec rhs(3);
  rhs << Rational(1), Rational(3), Rational(-3);
  CHECK_FALSE(solve(m, rhs));
  auto cert = inconsistency_certificate(m, rhs);
  REQUIRE(cert);
  Vec combo = m.transpose() * *cert;
  CHECK(combo == Vec(Vec::Zero(3)));
  Rational dot(0);
  for (int i = 0; i < 3; ++i) dot += (*cert)(i)*rhs(i);
  CHECK_FALSE(dot.is_zero());
}

TEST_CASE("image basis") {
  Mat id3 = Mat(Mat::Identity(3, 3));
  auto ib = image_basis(id3);
  CHECK(ib.columns == std::vector<int>{1, 2, 3});
  CHECK(image_basis(Mat(Mat::Zero(4, 4))).columns.empty());
  // greedy left-to-right columns of the Leibniz combination matrix
  auto lb = image_basis(Mat(combination_matrix(leibniz_identity().left)));
  CHECK(lb.columns == std::vector<int>{1, 3, 4});
  // the orbit matrix is the matrix tabulated alongside it; there the greedy
  // columns are 1, 2, 4
  auto ob = image_basis(Mat(orbit_matrix(leibniz_identity().left)));
  CHECK(ob.columns == std::vector<int>{1, 2, 4});
}

TEST_CASE("rank-nullity and solvable systems on random matrices") {
  SplitMix rng{42};
  for (int trial = 0; trial < 30; ++trial) {
    int rows = static_cast<int>(rng.range(1, 7));
    int cols = static_cast<int>(rng.range(1, 7));
    Mat m = random_matrix(rng, rows, cols);
    int r = rank(m);
    CHECK(r + static_cast<int>(kernel_basis(m).size()) == cols);

    Vec x(cols);
    for (int i = 0; i < cols; ++i) x(i) = Rational(rng.range(-4, 4));
    Vec rhs = m * x;
    auto sol = solve(m, rhs);
    REQUIRE(sol);
    CHECK(Vec(m * sol->particular) == rhs);
    for (const Vec& k : sol->kernel) CHECK(Vec(m * k) == Vec(Vec::Zero(rows)));
  }
}

TEST_CASE("rank invariant under row and column permutation") {
  SplitMix rng{7};
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_matrix(rng, 5, 6);
    int r = rank(m);
    Mat p = m;
    for (int i = 4; i > 0; --i) {
      long j = rng.range(0, i);
      p.row(i).swap(p.row(j));
    }
    for (int i = 5; i > 0; --i) {
      long j = rng.range(0, i);
      p.col(i).swap(p.col(j));
    }
    CHECK(rank(p) == r);
  }
}

TEST_CASE("row space echelon canonical") {
  SplitMix rng{11};
  Mat m = random_matrix(rng, 4, 5);
  Mat doubled(8, 5);
  doubled.topRows(4) = m;
  doubled.bottomRows(4) = m * Rational(3);
  CHECK(same_row_space(m, doubled));
  CHECK(in_row_space(row_space_echelon(m), Vec(m.row(1).transpose())));
}
