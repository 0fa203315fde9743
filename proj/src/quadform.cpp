#include "hermicode/quadform.hpp"

namespace hermicode::quadform {

using gf::Fe;
using gf::FieldCtx;
using gf::Subfield;
using hermitian::HermitianForm;
using hermitian::Subspace;
using la::Mat;

std::vector<Fe> iota(const FieldCtx& ctx, std::span<const Fe> x) {
  if (x.size() % 2 != 0) throw ArgumentError("iota needs an even number of coordinates");
  std::vector<Fe> z(x.size() / 2);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!ctx.contains(Subfield::Ft, x[2 * k]) || !ctx.contains(Subfield::Ft, x[2 * k + 1]))
      throw ArgumentError("iota coordinate outside F_t");
    z[k] = ctx.combine(x[2 * k], x[2 * k + 1]);
  }
  return z;
}

std::vector<Fe> iota_inv(const FieldCtx& ctx, std::span<const Fe> z) {
  std::vector<Fe> x(2 * z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const auto [u, v] = ctx.split(z[k]);
    x[2 * k] = u;
    x[2 * k + 1] = v;
  }
  return x;
}

QuadHermForm::QuadHermForm(const FieldCtx& ctx, HermitianForm h) : h_(std::move(h)) {
  const int n2 = 2 * h_.dim();
  b_ = Mat(n2, n2);
  std::vector<Fe> ei(n2, Fe{0}), ej(n2, Fe{0});
  for (int i = 0; i < n2; ++i) {
    ei[i] = Fe{1};
    for (int j = 0; j < n2; ++j) {
      ej[j] = Fe{1};
      const Fe hij = hermitian::eval(ctx, h_, iota(ctx, ei), iota(ctx, ej));
      b_.at(i, j) = ctx.trace(hij, Subfield::Ft2, Subfield::Ft);
      ej[j] = Fe{0};
    }
    ei[i] = Fe{0};
  }
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < i; ++j)
      if (b_.at(i, j) != b_.at(j, i)) throw CheckFailed("descended bilinear form not symmetric");
  rho_ = rank(ctx, h_.matrix());
  if (rank(ctx, b_) != 2 * rho_) throw CheckFailed("rank of B is not twice the rank of H");
}

Fe eval(const FieldCtx& ctx, const QuadHermForm& q, std::span<const Fe> x) {
  const auto z = iota(ctx, x);
  return hermitian::eval(ctx, q.hermitian_form(), z, z);
}

Fe bilinear(const FieldCtx& ctx, const QuadHermForm& q, std::span<const Fe> x,
            std::span<const Fe> y) {
  const auto tx = mat_vec(ctx, q.b_matrix(), x);
  return la::dot(ctx, tx, y);
}

Subspace kernel_b(const FieldCtx& ctx, const QuadHermForm& q) {
  return Subspace::from_rows(ctx, q.dim(), kernel_basis(ctx, q.b_matrix()));
}

Subspace image_t(const FieldCtx& ctx, const QuadHermForm& q) {
  // rows of B span the image of x -> T(x) = B x (B symmetric).
  return Subspace::from_rows(ctx, q.dim(), q.b_matrix());
}

std::optional<std::vector<Fe>> solve_t(const FieldCtx& ctx, const QuadHermForm& q,
                                       std::span<const Fe> v) {
  if (static_cast<int>(v.size()) != q.dim()) throw ArgumentError("dimension mismatch");
  for (Fe c : v)
    if (!ctx.contains(Subfield::Ft, c)) throw ArgumentError("vector coordinate outside F_t");
  auto particular = solve(ctx, q.b_matrix(), v);
  if (!particular) return std::nullopt;
  const Mat ker = kernel_basis(ctx, q.b_matrix());

  auto less = [](const std::vector<Fe>& a, const std::vector<Fe>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].code != b[i].code) return a[i].code < b[i].code;
    }
    return false;
  };

  std::vector<Fe> best = *particular;
  gf::PointDomain coeffs(ctx, Subfield::Ft, ker.rows);
  std::vector<Fe> c(ker.rows);
  std::vector<Fe> cand(q.dim());
  for (std::int64_t idx = 0; idx < coeffs.size(); ++idx) {
    coeffs.decode(idx, c);
    cand = *particular;
    for (int row = 0; row < ker.rows; ++row) {
      if (c[row].code == 0) continue;
      for (int col = 0; col < q.dim(); ++col)
        cand[col] = ctx.add(cand[col], ctx.mul(c[row], ker.at(row, col)));
    }
    if (less(cand, best)) best = cand;
  }
  return best;
}

QuadHermForm standard_form(const FieldCtx& ctx, int n, int rho) {
  if (rho < 0 || rho > n) throw ArgumentError("rank parameter out of range");
  std::vector<Fe> d(n, Fe{0});
  for (int i = 0; i < rho; ++i) d[i] = Fe{1};
  return QuadHermForm(ctx, HermitianForm::diagonal(ctx, d));
}

}  // namespace hermicode::quadform
