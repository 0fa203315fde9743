#include "hermicode/hermitian.hpp"

namespace hermicode::hermitian {

using gf::Fe;
using gf::FieldCtx;
using gf::Subfield;
using la::Mat;

Subspace Subspace::from_rows(const FieldCtx& ctx, int ambient, Mat rows) {
  if (rows.cols != ambient && rows.rows != 0)
    throw ArgumentError("basis width does not match ambient dimension");
  int r = 0;
  Mat e = rref(ctx, std::move(rows), &r);
  Mat basis(r, ambient);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = e.at(i, j);
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, Mat(0, ambient)); }

Subspace Subspace::full(int ambient) {
  return Subspace(ambient, Mat::identity(ambient));
}

bool Subspace::contains(const FieldCtx& ctx, std::span<const Fe> v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw ArgumentError("vector dimension mismatch");
  std::vector<Fe> w(v.begin(), v.end());
  for (int row = 0; row < basis_.rows; ++row) {
    int lead = -1;
    for (int col = 0; col < ambient_; ++col)
      if (basis_.at(row, col).code != 0) {
        lead = col;
        break;
      }
    const Fe f = w[lead];
    if (f.code == 0) continue;
    for (int col = 0; col < ambient_; ++col)
      w[col] = ctx.sub(w[col], ctx.mul(f, basis_.at(row, col)));
  }
  for (Fe c : w)
    if (c.code != 0) return false;
  return true;
}

std::vector<std::vector<Fe>> Subspace::enumerate(const FieldCtx& ctx) const {
  gf::PointDomain coeffs(ctx, Subfield::Ft2, basis_.rows);
  std::vector<std::vector<Fe>> out;
  out.reserve(coeffs.size());
  std::vector<Fe> c(basis_.rows);
  for (std::int64_t i = 0; i < coeffs.size(); ++i) {
    coeffs.decode(i, c);
    std::vector<Fe> v(ambient_, Fe{0});
    for (int row = 0; row < basis_.rows; ++row) {
      if (c[row].code == 0) continue;
      for (int col = 0; col < ambient_; ++col)
        v[col] = ctx.add(v[col], ctx.mul(c[row], basis_.at(row, col)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace sum(const FieldCtx& ctx, const Subspace& x, const Subspace& y) {
  if (x.ambient() != y.ambient()) throw ArgumentError("ambient dimension mismatch");
  Mat stacked(x.dim() + y.dim(), x.ambient());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.ambient(); ++j) stacked.at(i, j) = x.basis().at(i, j);
  for (int i = 0; i < y.dim(); ++i)
    for (int j = 0; j < x.ambient(); ++j) stacked.at(x.dim() + i, j) = y.basis().at(i, j);
  return Subspace::from_rows(ctx, x.ambient(), std::move(stacked));
}

Subspace intersect(const FieldCtx& ctx, const Subspace& x, const Subspace& y) {
  if (x.ambient() != y.ambient()) throw ArgumentError("ambient dimension mismatch");
  const int n = x.ambient();
  // lambda.X - mu.Y = 0; columns are (lambda, mu).
  Mat sys(n, x.dim() + y.dim());
  for (int j = 0; j < x.dim(); ++j)
    for (int i = 0; i < n; ++i) sys.at(i, j) = x.basis().at(j, i);
  for (int j = 0; j < y.dim(); ++j)
    for (int i = 0; i < n; ++i) sys.at(i, x.dim() + j) = ctx.neg(y.basis().at(j, i));
  const Mat ker = kernel_basis(ctx, sys);
  Mat rows(ker.rows, n);
  for (int r = 0; r < ker.rows; ++r)
    for (int i = 0; i < n; ++i) {
      Fe v{0};
      for (int j = 0; j < x.dim(); ++j)
        v = ctx.add(v, ctx.mul(ker.at(r, j), x.basis().at(j, i)));
      rows.at(r, i) = v;
    }
  return Subspace::from_rows(ctx, n, std::move(rows));
}

HermitianForm::HermitianForm(const FieldCtx& ctx, Mat m) : m_(std::move(m)) {
  if (m_.rows != m_.cols) throw ArgumentError("hermitian matrix must be square");
  for (int i = 0; i < m_.rows; ++i)
    for (int j = 0; j < m_.cols; ++j)
      if (m_.at(j, i) != ctx.conj(m_.at(i, j)))
        throw ArgumentError("matrix is not hermitian");
}

HermitianForm HermitianForm::zero(int n) { return HermitianForm(Mat(n, n)); }

HermitianForm HermitianForm::identity(int n) { return HermitianForm(Mat::identity(n)); }

HermitianForm HermitianForm::diagonal(const FieldCtx& ctx, std::span<const Fe> d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return HermitianForm(ctx, std::move(m));
}

Fe eval(const FieldCtx& ctx, const HermitianForm& h, std::span<const Fe> x,
        std::span<const Fe> y) {
  const int n = h.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw ArgumentError("form evaluation dimension mismatch");
  Fe acc{0};
  for (int i = 0; i < n; ++i) {
    if (x[i].code == 0) continue;
    const Fe xi = ctx.conj(x[i]);
    for (int j = 0; j < n; ++j)
      acc = ctx.add(acc, ctx.mul(xi, ctx.mul(h.matrix().at(i, j), y[j])));
  }
  return acc;
}

HermitianForm change_basis(const FieldCtx& ctx, const HermitianForm& h, const Mat& p) {
  if (p.rows != h.dim() || p.cols != h.dim())
    throw ArgumentError("change of basis dimension mismatch");
  if (!inverse(ctx, p)) throw ArgumentError("change of basis matrix is singular");
  return HermitianForm(ctx, mul(ctx, conj_transpose(ctx, p), mul(ctx, h.matrix(), p)));
}

std::pair<Subspace, int> kernel_rank(const FieldCtx& ctx, const HermitianForm& h) {
  // Ker H = nullspace of M (M* = M).
  const Mat k = kernel_basis(ctx, h.matrix());
  const int r = h.dim() - k.rows;
  return {Subspace::from_rows(ctx, h.dim(), k), r};
}

Orthogonalization orthogonalize(const FieldCtx& ctx, const HermitianForm& h) {
  const int n = h.dim();
  std::vector<std::vector<Fe>> ones;
  Mat current = Mat::identity(n);  // rows span the still-unprocessed subspace

  while (current.rows > 0) {
    // Scan the span in coefficient enumeration order for a non-isotropic vector.
    gf::PointDomain coeffs(ctx, Subfield::Ft2, current.rows);
    std::vector<Fe> c(current.rows);
    std::vector<Fe> x(n);
    bool found = false;
    Fe b{0};
    for (std::int64_t idx = 1; idx < coeffs.size() && !found; ++idx) {
      coeffs.decode(idx, c);
      std::fill(x.begin(), x.end(), Fe{0});
      for (int row = 0; row < current.rows; ++row) {
        if (c[row].code == 0) continue;
        for (int col = 0; col < n; ++col)
          x[col] = ctx.add(x[col], ctx.mul(c[row], current.at(row, col)));
      }
      b = eval(ctx, h, x, x);
      if (b.code != 0) found = true;
    }
    if (!found) break;  // H vanishes on the span: every remaining vector is fine as-is

    const Fe scale = ctx.inv(ctx.norm_preimage(b));
    for (auto& v : x) v = ctx.mul(scale, v);
    ones.push_back(x);

    // Restrict to {y in span(current) : H(x,y) = 0}: a linear condition on
    // the coefficients since H is linear in y.
    Mat cond(1, current.rows);
    std::vector<Fe> rowvec(n);
    for (int row = 0; row < current.rows; ++row) {
      for (int col = 0; col < n; ++col) rowvec[col] = current.at(row, col);
      cond.at(0, row) = eval(ctx, h, x, rowvec);
    }
    const Mat ker = kernel_basis(ctx, cond);
    Mat next(ker.rows, n);
    for (int r = 0; r < ker.rows; ++r)
      for (int col = 0; col < n; ++col) {
        Fe v{0};
        for (int row = 0; row < current.rows; ++row)
          v = ctx.add(v, ctx.mul(ker.at(r, row), current.at(row, col)));
        next.at(r, col) = v;
      }
    current = std::move(next);
  }

  Orthogonalization out;
  out.rank = static_cast<int>(ones.size());
  out.basis = Mat(n, n);
  out.diag.assign(n, 0);
  for (int k = 0; k < out.rank; ++k) {
    out.diag[k] = 1;
    for (int i = 0; i < n; ++i) out.basis.at(i, k) = ones[k][i];
  }
  for (int k = 0; k < current.rows; ++k)
    for (int i = 0; i < n; ++i) out.basis.at(i, out.rank + k) = current.at(k, i);
  return out;
}

HermitianForm polar_form(const FieldCtx& ctx, int n,
                         const std::function<Fe(std::span<const Fe>)>& q) {
  const Fe quarter = ctx.inv(ctx.from_int(4));
  const Fe alpha = ctx.alpha();
  const Fe two = ctx.from_int(2);
  const Fe c2 = ctx.inv(ctx.mul(two, ctx.sub(alpha, ctx.conj(alpha))));

  auto qv = [&](const std::vector<Fe>& v) {
    const Fe val = q(v);
    if (!ctx.contains(Subfield::Ft, val))
      throw ArgumentError("evaluator value outside F_t");
    return val;
  };

  Mat m(n, n);
  std::vector<Fe> x(n), v(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::fill(x.begin(), x.end(), Fe{0});
      x[i] = Fe{1};
      auto with_y = [&](Fe lambda) {
        v = x;
        v[j] = ctx.add(v[j], lambda);
        return qv(v);
      };
      const Fe d1 = ctx.sub(with_y(Fe{1}), with_y(ctx.from_int(-1)));
      const Fe d2 = ctx.sub(with_y(alpha), with_y(ctx.conj(alpha)));
      m.at(i, j) = ctx.add(ctx.mul(quarter, d1), ctx.mul(c2, d2));
    }
  }
  return HermitianForm(ctx, std::move(m));  // ctor rejects non-hermitian results
}

bool equivalent(const FieldCtx& ctx, const HermitianForm& h1, const HermitianForm& h2) {
  if (h1.dim() != h2.dim()) throw ArgumentError("dimension mismatch");
  return rank(ctx, h1.matrix()) == rank(ctx, h2.matrix());
}

Subspace orth_complement(const FieldCtx& ctx, const HermitianForm& h, const Subspace& f) {
  if (f.ambient() != h.dim()) throw ArgumentError("ambient dimension mismatch");
  // H(x,b) = 0 for all basis b of F  <=>  H(b,x) = 0 by hermitian symmetry,
  // which is linear in x: rows b* M.
  Mat sys(f.dim(), h.dim());
  for (int r = 0; r < f.dim(); ++r) {
    for (int j = 0; j < h.dim(); ++j) {
      Fe v{0};
      for (int i = 0; i < h.dim(); ++i)
        v = ctx.add(v, ctx.mul(ctx.conj(f.basis().at(r, i)), h.matrix().at(i, j)));
      sys.at(r, j) = v;
    }
  }
  return Subspace::from_rows(ctx, h.dim(), kernel_basis(ctx, sys));
}

bool is_isotropic(const FieldCtx& ctx, const HermitianForm& h, const Subspace& f) {
  const Subspace perp = orth_complement(ctx, h, f);
  return intersect(ctx, f, perp).dim() > 0;
}

}  // namespace hermicode::hermitian
