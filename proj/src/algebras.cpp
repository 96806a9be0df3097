#include "depol/algebras.hpp"

#include <sstream>
#include <stdexcept>

namespace depol {

StructureAlgebra StructureAlgebra::zero(int dim, std::vector<int> grading) {
  StructureAlgebra a;
  a.dim = dim;
  a.grading = std::move(grading);
  a.c.assign(static_cast<size_t>(dim) * dim * dim, Rational(0));
  return a;
}

Vec StructureAlgebra::product(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y(j).is_zero()) continue;
      Rational f = x(i) * y(j);
      for (int k = 0; k < dim; ++k) out(k) += f * at(i, j, k);
    }
  }
  return out;
}

Vec StructureAlgebra::basis_product(int i, int j) const {
  Vec out(dim);
  for (int k = 0; k < dim; ++k) out(k) = at(i, j, k);
  return out;
}

bool StructureAlgebra::commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

bool StructureAlgebra::anticommutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

bool StructureAlgebra::grading_consistent() const {
  if (!graded()) return true;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (!at(i, j, k).is_zero() && grading[k] != (grading[i] + grading[j]) % 2) return false;
  return true;
}

namespace {
// Value of monomial `idx` at the basis triple; idx 0..5 left-parenthesized,
// 6..11 right-parenthesized, permutation from the basis order.
Vec monomial_value(const StructureAlgebra& alg, int idx, int i, int j, int k) {
  const Perm& p = basis_perm(idx % kGroupOrder);
  const int x[3] = {i, j, k};
  const int a = x[p(1) - 1], b = x[p(2) - 1], c = x[p(3) - 1];
  Vec e = Vec::Zero(alg.dim);
  if (idx < kGroupOrder) {
    Vec ab = alg.basis_product(a, b);
    e(c) = Rational(1);
    return alg.product(ab, e);
  }
  Vec bc = alg.basis_product(b, c);
  e(a) = Rational(1);
  return alg.product(e, bc);
}
}  // namespace

CheckResult check_identity(const StructureAlgebra& alg, const Identity& id) {
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      for (int k = 0; k < alg.dim; ++k) {
        Vec residual = Vec::Zero(alg.dim);
        for (int m = 0; m < 12; ++m) {
          const Rational& coeff = m < 6 ? id.left(m) : id.right(m - 6);
          if (coeff.is_zero()) continue;
          residual += coeff * monomial_value(alg, m, i, j, k);
        }
        if (residual != Vec::Zero(alg.dim)) return Failure{i, j, k, residual};
      }
    }
  }
  return std::nullopt;
}

StructureAlgebra depolarize_algebra(const StructureAlgebra& dot, const StructureAlgebra& bracket) {
  if (dot.dim != bracket.dim) throw std::invalid_argument("depolarize_algebra: dimension mismatch");
  if (!dot.commutative()) throw std::invalid_argument("depolarize_algebra: dot is not commutative");
  if (!bracket.anticommutative())
    throw std::invalid_argument("depolarize_algebra: bracket is not anticommutative");
  StructureAlgebra mu = StructureAlgebra::zero(dot.dim, dot.grading);
  const Rational half(1, 2);
  for (size_t t = 0; t < mu.c.size(); ++t) mu.c[t] = half * (dot.c[t] + bracket.c[t]);
  return mu;
}

std::pair<StructureAlgebra, StructureAlgebra> polarize_algebra(const StructureAlgebra& mu) {
  StructureAlgebra dot = StructureAlgebra::zero(mu.dim, mu.grading);
  StructureAlgebra bracket = StructureAlgebra::zero(mu.dim, mu.grading);
  for (int i = 0; i < mu.dim; ++i)
    for (int j = 0; j < mu.dim; ++j)
      for (int k = 0; k < mu.dim; ++k) {
        dot.at(i, j, k) = mu.at(i, j, k) + mu.at(j, i, k);
        bracket.at(i, j, k) = mu.at(i, j, k) - mu.at(j, i, k);
      }
  return {std::move(dot), std::move(bracket)};
}

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) coeffs_[0] = std::move(constant);
}

Poly Poly::monomial(long exponent, Rational coeff) {
  Poly p;
  if (!coeff.is_zero()) p.coeffs_[exponent] = std::move(coeff);
  return p;
}

void Poly::set(long exponent, Rational coeff) {
  if (coeff.is_zero())
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(coeff);
}

Poly Poly::derivative() const {
  Poly out;
  for (const auto& [e, c] : coeffs_) {
    if (e == 0) continue;
    out.coeffs_[e - 1] = c * Rational(e);
  }
  return out;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (e == 1) os << "*t";
    else if (e > 1) os << "*t^" << e;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.coeffs_) {
    auto it = out.coeffs_.find(e);
    if (it == out.coeffs_.end()) {
      out.coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      auto it = out.coeffs_.find(ea + eb);
      if (it == out.coeffs_.end()) {
        Rational v = ca * cb;
        if (!v.is_zero()) out.coeffs_[ea + eb] = std::move(v);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  return out;
}

Poly operator*(const Rational& a, const Poly& b) {
  Poly out;
  if (a.is_zero()) return out;
  for (const auto& [e, c] : b.coeffs_) out.coeffs_[e] = a * c;
  return out;
}

Poly model_dot(const Poly& f, const Poly& g) { return f * g; }
Poly model_bracket(const Poly& f, const Poly& g) { return f.derivative() * g - f * g.derivative(); }
Poly model_mu(const Poly& f, const Poly& g) {
  return Rational(1, 2) * (model_dot(f, g) + model_bracket(f, g));
}

namespace {
Poly identity_residual(const Identity& id, const Poly& f, const Poly& g, const Poly& h) {
  const Poly* x[3] = {&f, &g, &h};
  Poly total;
  for (int s = 0; s < kGroupOrder; ++s) {
    const Perm& p = basis_perm(s);
    const Poly& a = *x[p(1) - 1];
    const Poly& b = *x[p(2) - 1];
    const Poly& c = *x[p(3) - 1];
    if (!id.left(s).is_zero()) total = total + id.left(s) * model_mu(model_mu(a, b), c);
    if (!id.right(s).is_zero()) total = total + id.right(s) * model_mu(a, model_mu(b, c));
  }
  return total;
}

Poly law_residual(const DistributiveLaw& law, const Poly& f, const Poly& g, const Poly& h) {
  const Poly* x[3] = {&f, &g, &h};
  Poly total;
  for (int i = 0; i < 3; ++i) {
    const Poly& xi = *x[i];
    const Poly& xj = *x[(i + 1) % 3];
    const Poly& xk = *x[(i + 2) % 3];
    if (!law.alpha[i].is_zero()) total = total + law.alpha[i] * model_dot(xi, model_bracket(xj, xk));
    if (!law.beta[i].is_zero()) total = total + law.beta[i] * model_bracket(model_dot(xi, xj), xk);
  }
  return total;
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
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Poly random_poly(SplitMix& rng, int degree_bound) {
  Poly p;
  for (long e = 0; e <= degree_bound; ++e) {
    if (rng.range(0, 2) == 0) continue;  // keep it sparse
    p.set(e, Rational(rng.range(-9, 9), rng.range(1, 5)));
  }
  return p;
}

template <typename Residual>
PolyCheckResult run_poly_check(Residual&& residual, int degree_bound, int trials, uint64_t seed) {
  for (long a = 0; a <= degree_bound; ++a)
    for (long b = 0; b <= degree_bound; ++b)
      for (long c = 0; c <= degree_bound; ++c) {
        Poly f = Poly::monomial(a), g = Poly::monomial(b), h = Poly::monomial(c);
        Poly r = residual(f, g, h);
        if (!r.is_zero()) return {false, PolyWitness{f, g, h, r}};
      }
  SplitMix rng{seed};
  for (int t = 0; t < trials; ++t) {
    Poly f = random_poly(rng, degree_bound);
    Poly g = random_poly(rng, degree_bound);
    Poly h = random_poly(rng, degree_bound);
    Poly r = residual(f, g, h);
    if (!r.is_zero()) return {false, PolyWitness{f, g, h, r}};
  }
  return {true, std::nullopt};
}
}  // namespace

PolyCheckResult poly_check(const Identity& id, int degree_bound, int trials, uint64_t seed) {
  return run_poly_check(
      [&](const Poly& f, const Poly& g, const Poly& h) { return identity_residual(id, f, g, h); },
      degree_bound, trials, seed);
}

PolyCheckResult poly_check(const DistributiveLaw& law, int degree_bound, int trials, uint64_t seed) {
  return run_poly_check(
      [&](const Poly& f, const Poly& g, const Poly& h) { return law_residual(law, f, g, h); },
      degree_bound, trials, seed);
}

std::vector<Vec> power_defect(const StructureAlgebra& alg, const Vec& x, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("power_defect: n must be in 1..6");
  // values[d] = all values of full bracketings of d copies of x
  std::vector<std::vector<Vec>> values(n + 1);
  values[1] = {x};
  for (int d = 2; d <= n; ++d) {
    for (int k = 1; k < d; ++k) {
      for (const Vec& u : values[k]) {
        for (const Vec& v : values[d - k]) {
          Vec w = alg.product(u, v);
          bool seen = false;
          for (const Vec& seen_w : values[d]) {
            if (seen_w == w) { seen = true; break; }
          }
          if (!seen) values[d].push_back(std::move(w));
        }
      }
    }
  }
  return values[n];
}

}  // namespace depol
