#include <doctest.h>

#include "depol/depolarization.hpp"
#include "depol/io.hpp"

using namespace depol;

namespace {
GroupVec gv(long a, long b, long c, long d, long e, long f) {
  GroupVec v;
  v << Rational(a), Rational(b), Rational(c), Rational(d), Rational(e), Rational(f);
  return v;
}

struct SplitMix {
  uint64_t state;
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  Rational rat() { return Rational(static_cast<long>(next() % 19) - 9, static_cast<long>(next() % 7) + 1); }
};
}  // namespace

TEST_CASE("polarize basic values") {
  Identity e_id{gv(1, 0, 0, 0, 0, 0), GroupVec::Zero()};
  Lambda12 l = polarize_coeffs(e_id);
  Lambda12 expected = Lambda12::Zero();
  expected(0) = expected(3) = expected(6) = expected(9) = Rational(1);
  CHECK(l == expected);

  CHECK(polarize_coeffs(Identity{GroupVec::Zero(), GroupVec::Zero()}) == Lambda12(Lambda12::Zero()));

  // frozen by the direct-table evaluation
  Lambda12 pl = polarize_coeffs(poisson_identity());
  Lambda12 pexp;
  pexp << Rational(4), Rational(-4), Rational(0), Rational(4), Rational(2), Rational(0),
      Rational(2), Rational(4), Rational(-2), Rational(2), Rational(-2), Rational(-2);
  CHECK(pl == pexp);
}

TEST_CASE("depolarize basic values") {
  CHECK(depolarize_coeffs(Lambda12(Lambda12::Zero())).is_zero());
  Lambda12 e1 = Lambda12::Zero();
  e1(0) = Rational(1);
  Identity d = depolarize_coeffs(e1);
  CHECK(d.left == gv(1, 1, 0, 0, 0, 0) * Rational(1, 4));
  CHECK(d.right == gv(0, 0, 1, 0, 0, 1) * Rational(1, 4));
}

TEST_CASE("polarize and depolarize are mutually inverse") {
  SplitMix rng{2024};
  for (int trial = 0; trial < 200; ++trial) {
    Identity id;
    for (int i = 0; i < 6; ++i) {
      id.left(i) = rng.rat();
      id.right(i) = rng.rat();
    }
    CHECK(depolarize_coeffs(polarize_coeffs(id)) == id);
    Lambda12 l;
    for (int i = 0; i < 12; ++i) l(i) = rng.rat();
    CHECK(polarize_coeffs(depolarize_coeffs(l)) == l);
  }
}

TEST_CASE("encode distributive laws") {
  DistributiveLaw leibniz{{-1, 1, 0}, {1, 0, 0}};
  Identity enc = encode_distributive(leibniz);
  CHECK(enc.left == gv(1, 1, 1, -1, -1, 1));
  CHECK(enc.right == gv(-1, -1, -1, 1, 1, -1));
  CHECK(enc == leibniz_identity());

  DistributiveLaw tl{{0, 0, 2}, {0, 1, -1}};
  Identity enc2 = encode_distributive(tl);
  CHECK(enc2.left == gv(2, -2, 1, -1, 1, -1));
  CHECK(enc2.right == gv(-1, 1, -2, -1, 1, 2));
  CHECK(enc2 == transposed_leibniz_identity());

  CHECK(encode_distributive(DistributiveLaw{{0, 0, 0}, {0, 0, 0}}).is_zero());
}

TEST_CASE("decode distributive laws") {
  SplitMix rng{17};
  for (int trial = 0; trial < 200; ++trial) {
    DistributiveLaw d;
    for (int i = 0; i < 3; ++i) {
      d.alpha[i] = rng.rat();
      d.beta[i] = rng.rat();
    }
    auto back = decode_distributive(encode_distributive(d));
    REQUIRE(back);
    CHECK(*back == d);
  }
  // the Jacobi right block breaks the pattern: it needs right(2) = -left(0)
  CHECK_FALSE(decode_distributive(jacobi_identity()));
  auto leib = decode_distributive(leibniz_identity());
  REQUIRE(leib);
  CHECK(leib->alpha == std::array<Rational, 3>{-1, 1, 0});
  CHECK(leib->beta == std::array<Rational, 3>{1, 0, 0});
}

TEST_CASE("implies is reflexive with a valid witness") {
  for (const Identity& id : {leibniz_identity(), poisson_identity(), jacobi_identity()}) {
    auto u = implies(id, id);
    REQUIRE(u);
    CHECK(GroupVec(combination_matrix(id.left) * *u) == id.left);
    CHECK(GroupVec(combination_matrix(id.right) * *u) == id.right);
    // the identity element is always a witness here
    GroupVec e = gv(1, 0, 0, 0, 0, 0);
    CHECK(GroupVec(combination_matrix(id.left) * e) == id.left);
  }
}

TEST_CASE("implies: poisson to leibniz") {
  auto u = implies(poisson_identity(), leibniz_identity());
  REQUIRE(u);
  CHECK(GroupVec(combination_matrix(poisson_identity().left) * *u) == leibniz_identity().left);
  CHECK(GroupVec(combination_matrix(poisson_identity().right) * *u) == leibniz_identity().right);
}

TEST_CASE("implies: jacass(0,0,0) does not give transposed leibniz") {
  std::array<Identity, 1> fam{jacass_family(0, 0, 0)};
  CHECK_FALSE(implies(jacass_family(0, 0, 0), transposed_leibniz_identity()));
  auto cert = implies_certificate(fam, transposed_leibniz_identity());
  REQUIRE(cert);
  // y annihilates the stacked system but not the stacked target
  Mat stacked(12, 6);
  stacked.topRows(6) = combination_matrix(fam[0].left);
  stacked.bottomRows(6) = combination_matrix(fam[0].right);
  CHECK(Vec(stacked.transpose() * *cert) == Vec(Vec::Zero(6)));
  Vec t = stack(transposed_leibniz_identity());
  Rational dot(0);
  for (int i = 0; i < 12; ++i) dot += (*cert)(i)*t(i);
  CHECK_FALSE(dot.is_zero());
}

TEST_CASE("consequence space of the zero family is zero") {
  CHECK(consequence_space(Identity{GroupVec::Zero(), GroupVec::Zero()}).empty());
}

TEST_CASE("consequence space of poisson") {
  auto basis = consequence_space(poisson_identity());
  REQUIRE(basis.size() == 3);
  // contains the Leibniz coefficient vector
  Mat rows(3, 6);
  for (int i = 0; i < 3; ++i) rows.row(i) = basis[i].transpose();
  CHECK(in_row_space(row_space_echelon(rows), Vec(gv(1, 1, 1, -1, -1, 1))));
  // every member is genuinely implied
  for (const Vec6& rho : basis) {
    Identity law{rho, w2_pattern() * rho};
    CHECK(implies(poisson_identity(), law));
    auto decoded = decode_distributive(law);
    REQUIRE(decoded);
    CHECK(implies(poisson_identity(), encode_distributive(*decoded)));
  }
}

TEST_CASE("translate-closed implication") {
  // whatever the family implies, it also implies every combination of
  // translates of the implied identity
  Identity f = poisson_identity();
  Identity g = leibniz_identity();
  REQUIRE(implies(f, g));
  SplitMix rng{31};
  for (int trial = 0; trial < 10; ++trial) {
    Identity h{GroupVec::Zero(), GroupVec::Zero()};
    for (int s = 0; s < kGroupOrder; ++s) {
      Rational c = rng.rat();
      Identity t = sigma_translate(basis_perm(s), g);
      h.left += c * t.left;
      h.right += c * t.right;
    }
    CHECK(implies(f, h));
  }
}

TEST_CASE("identity file round trip") {
  Identity id = transposed_leibniz_identity();
  CHECK(parse_identity(format_identity(id)) == id);
  CHECK_THROWS_AS(parse_identity("left: 1 2 3\n"), ParseError);
}
