#include "hermicode/matrix.hpp"

namespace hermicode::la {

using gf::Fe;
using gf::FieldCtx;

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Fe{1};
  return m;
}

Mat mul(const FieldCtx& ctx, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw ArgumentError("matrix product dimension mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const Fe v = x.at(i, k);
      if (v.code == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = ctx.add(r.at(i, j), ctx.mul(v, y.at(k, j)));
    }
  }
  return r;
}

Mat conj_transpose(const FieldCtx& ctx, const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = ctx.conj(m.at(i, j));
  return r;
}

Mat scale(const FieldCtx& ctx, Fe c, const Mat& m) {
  Mat r = m;
  for (auto& v : r.a) v = ctx.mul(c, v);
  return r;
}

Mat add(const FieldCtx& ctx, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw ArgumentError("matrix sum dimension mismatch");
  Mat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = ctx.add(r.a[i], y.a[i]);
  return r;
}

std::vector<Fe> mat_vec(const FieldCtx& ctx, const Mat& m, std::span<const Fe> x) {
  if (m.cols != static_cast<int>(x.size()))
    throw ArgumentError("matrix-vector dimension mismatch");
  std::vector<Fe> r(m.rows, Fe{0});
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      r[i] = ctx.add(r[i], ctx.mul(m.at(i, j), x[j]));
  return r;
}

Fe dot(const FieldCtx& ctx, std::span<const Fe> x, std::span<const Fe> y) {
  if (x.size() != y.size()) throw ArgumentError("dot product dimension mismatch");
  Fe r{0};
  for (std::size_t i = 0; i < x.size(); ++i) r = ctx.add(r, ctx.mul(x[i], y[i]));
  return r;
}

Mat rref(const FieldCtx& ctx, Mat m, int* rank_out) {
  int piv = 0;
  for (int col = 0; col < m.cols && piv < m.rows; ++col) {
    int sel = -1;
    for (int r = piv; r < m.rows; ++r) {
      if (m.at(r, col).code != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != piv)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(piv, j));
    const Fe ip = ctx.inv(m.at(piv, col));
    for (int j = 0; j < m.cols; ++j) m.at(piv, j) = ctx.mul(ip, m.at(piv, j));
    for (int r = 0; r < m.rows; ++r) {
      if (r == piv) continue;
      const Fe f = m.at(r, col);
      if (f.code == 0) continue;
      for (int j = 0; j < m.cols; ++j)
        m.at(r, j) = ctx.sub(m.at(r, j), ctx.mul(f, m.at(piv, j)));
    }
    ++piv;
  }
  if (rank_out) *rank_out = piv;
  return m;
}

int rank(const FieldCtx& ctx, const Mat& m) {
  int r = 0;
  rref(ctx, m, &r);
  return r;
}

Mat kernel_basis(const FieldCtx& ctx, const Mat& m) {
  int r = 0;
  const Mat e = rref(ctx, m, &r);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0; row < r; ++row) {
    for (int col = 0; col < m.cols; ++col) {
      if (e.at(row, col).code != 0) {
        pivot_col.push_back(col);
        is_pivot[col] = true;
        break;
      }
    }
  }
  Mat k(m.cols - r, m.cols);
  int out = 0;
  for (int col = 0; col < m.cols; ++col) {
    if (is_pivot[col]) continue;
    k.at(out, col) = Fe{1};
    for (int row = 0; row < r; ++row)
      k.at(out, pivot_col[row]) = ctx.neg(e.at(row, col));
    ++out;
  }
  return rref(ctx, k);  // canonical basis
}

std::optional<std::vector<Fe>> solve(const FieldCtx& ctx, const Mat& m,
                                     std::span<const Fe> b) {
  if (m.rows != static_cast<int>(b.size()))
    throw ArgumentError("solve dimension mismatch");
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  int r = 0;
  const Mat e = rref(ctx, aug, &r);
  std::vector<Fe> x(m.cols, Fe{0});
  for (int row = 0; row < r; ++row) {
    int lead = -1;
    for (int col = 0; col <= m.cols; ++col) {
      if (e.at(row, col).code != 0) {
        lead = col;
        break;
      }
    }
    if (lead == m.cols) return std::nullopt;  // 0 = nonzero
    if (lead >= 0) x[lead] = e.at(row, m.cols);
  }
  return x;
}

std::optional<Mat> inverse(const FieldCtx& ctx, const Mat& m) {
  if (m.rows != m.cols) throw ArgumentError("inverse of non-square matrix");
  if (rank(ctx, m) < m.rows) return std::nullopt;
  Mat aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Fe{1};
  }
  const Mat e = rref(ctx, aug);
  Mat inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = e.at(i, m.cols + j);
  return inv;
}

}  // namespace hermicode::la
