#include "depol/operads.hpp"

#include <stdexcept>

namespace depol {

RelationSpace orbit_span(std::span<const Identity> ids) {
  Mat rows(static_cast<int>(ids.size()) * kGroupOrder, 12);
  int r = 0;
  for (const Identity& id : ids) {
    for (int s = 0; s < kGroupOrder; ++s) {
      rows.row(r++) = stack(sigma_translate(basis_perm(s), id)).transpose();
    }
  }
  return RelationSpace{row_space_echelon(rows)};
}

int dim_arity3(std::span<const Identity> ids) { return 12 - orbit_span(ids).dim(); }

Mat12 pairing_matrix() {
  Mat12 p = Mat12::Zero();
  for (int s = 0; s < kGroupOrder; ++s) {
    p(s, s) = Rational(signature(basis_perm(s)));
    p(6 + s, 6 + s) = Rational(-signature(basis_perm(s)));
  }
  return p;
}

RelationSpace dual_relations(const RelationSpace& r) {
  Mat paired = r.basis * pairing_matrix();
  auto kernel = kernel_basis(paired);
  Mat rows(static_cast<int>(kernel.size()), 12);
  for (size_t i = 0; i < kernel.size(); ++i) rows.row(static_cast<int>(i)) = kernel[i].transpose();
  return RelationSpace{row_space_echelon(rows)};
}

bool is_self_dual(const RelationSpace& r) { return dual_relations(r) == r; }

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

TreePool::TreePool(int max_degree) {
  counts_.assign(max_degree + 1, 0);
  offsets_.assign(max_degree + 1, {});
  if (max_degree >= 1) counts_[1] = 1;
  for (int n = 2; n <= max_degree; ++n) {
    offsets_[n].assign(n, 0);
    int total = 0;
    for (int k = 1; k < n; ++k) {
      offsets_[n][k] = total;
      total += counts_[k] * counts_[n - k];
    }
    counts_[n] = total;
  }
}

int TreePool::count(int degree) const { return counts_.at(degree); }

int TreePool::node(int ldeg, int lidx, int rdeg, int ridx) const {
  const int n = ldeg + rdeg;
  return offsets_.at(n).at(ldeg) + lidx * counts_.at(rdeg) + ridx;
}

std::string TreePool::name(int degree, int idx) const {
  if (degree == 1) return "X";
  for (int k = 1; k < degree; ++k) {
    int block = counts_.at(k) * counts_.at(degree - k);
    int base = offsets_.at(degree).at(k);
    if (idx >= base && idx < base + block) {
      int li = (idx - base) / counts_.at(degree - k);
      int ri = (idx - base) % counts_.at(degree - k);
      return "(" + name(k, li) + name(degree - k, ri) + ")";
    }
  }
  throw std::out_of_range("TreePool::name: bad index");
}

namespace {
// Coefficient row over the degree-n trees obtained by substituting the trees
// (t1, t2, t3) for the three variables of the identity.
Vec substitute(const TreePool& pool, const Identity& id, const std::array<std::pair<int, int>, 3>& t) {
  const int n = t[0].first + t[1].first + t[2].first;
  Vec row = Vec::Zero(pool.count(n));
  for (int s = 0; s < kGroupOrder; ++s) {
    const Perm& p = basis_perm(s);
    auto [d1, i1] = t[p(1) - 1];
    auto [d2, i2] = t[p(2) - 1];
    auto [d3, i3] = t[p(3) - 1];
    if (!id.left(s).is_zero()) {
      int pair = pool.node(d1, i1, d2, i2);
      row(pool.node(d1 + d2, pair, d3, i3)) += id.left(s);
    }
    if (!id.right(s).is_zero()) {
      int pair = pool.node(d2, i2, d3, i3);
      row(pool.node(d1, i1, d2 + d3, pair)) += id.right(s);
    }
  }
  return row;
}
}  // namespace

std::vector<long> free_dims(std::span<const Identity> ids, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("free_dims: negative degree");
  if (max_degree > 5) throw std::invalid_argument("free_dims: degree cap is 5");

  std::vector<long> dims(max_degree + 1, 0);
  dims[0] = 1;  // constants
  if (max_degree >= 1) dims[1] = 1;
  if (max_degree < 2) return dims;

  TreePool pool(max_degree);
  // relations[n]: echelon basis of the degree-n component of the ideal
  std::vector<Mat> relations(max_degree + 1);
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<Vec> rows;

    // substitutions t1, t2, t3 with degrees summing to n
    for (int d1 = 1; d1 <= n - 2; ++d1) {
      for (int d2 = 1; d1 + d2 <= n - 1; ++d2) {
        int d3 = n - d1 - d2;
        for (int i1 = 0; i1 < pool.count(d1); ++i1)
          for (int i2 = 0; i2 < pool.count(d2); ++i2)
            for (int i3 = 0; i3 < pool.count(d3); ++i3)
              for (const Identity& id : ids)
                rows.push_back(substitute(pool, id, {{{d1, i1}, {d2, i2}, {d3, i3}}}));
      }
    }

    // products of lower-degree relations with tree monomials, both sides
    for (int d = 2; d < n; ++d) {
      const Mat& rel = relations[d];
      int td = n - d;
      for (int r = 0; r < rel.rows(); ++r) {
        for (int ti = 0; ti < pool.count(td); ++ti) {
          Vec lmul = Vec::Zero(pool.count(n));
          Vec rmul = Vec::Zero(pool.count(n));
          for (int c = 0; c < rel.cols(); ++c) {
            if (rel(r, c).is_zero()) continue;
            lmul(pool.node(td, ti, d, c)) += rel(r, c);
            rmul(pool.node(d, c, td, ti)) += rel(r, c);
          }
          rows.push_back(std::move(lmul));
          rows.push_back(std::move(rmul));
        }
      }
    }

    Mat all(static_cast<int>(rows.size()), pool.count(n));
    for (size_t i = 0; i < rows.size(); ++i) all.row(static_cast<int>(i)) = rows[i].transpose();
    relations[n] = row_space_echelon(all);
    dims[n] = pool.count(n) - relations[n].rows();
  }
  return dims;
}

namespace {
Mat rows12(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m(static_cast<int>(rows.size()), 12);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}
}  // namespace

Mat tp_matrix() {
  return rows12({
      {2, -2, 1, -1, 1, -1, -1, 1, -2, -1, 1, 2},
      {1, 1, 2, -1, -2, -1, -2, 1, -1, 2, 1, -1},
      {-1, -1, 1, 2, 1, -2, -1, 2, 1, -1, -2, 1},
      {1, -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, -1},
      {1, 1, -1, 0, -1, 0, -1, 0, 1, -1, 0, 1},
      {1, 1, 0, -1, 0, -1, 0, -1, 1, 0, -1, 1},
  });
}

Mat dtp_matrix() {
  return rows12({
      {2, 2, -1, 1, 1, -1, 1, 1, -2, -1, -1, -2},
      {1, -1, -2, 1, -2, -1, 2, 1, -1, 2, -1, 1},
      {-1, 1, -1, -2, 1, -2, 1, 2, 1, -1, 2, -1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, -1, 1, 0, -1, 0, 1, 0, 1, -1, 0, -1},
      {1, -1, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1},
  });
}

}  // namespace depol
