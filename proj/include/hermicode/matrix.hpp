#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermicode/gf.hpp"

namespace hermicode::la {

/// Dense row-major matrix over the ambient field of a FieldCtx.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<gf::Fe> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static Mat identity(int n);

  gf::Fe& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const gf::Fe& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::span<const gf::Fe> row(int r) const { return {a.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mul(const gf::FieldCtx& ctx, const Mat& x, const Mat& y);
Mat conj_transpose(const gf::FieldCtx& ctx, const Mat& m);
Mat scale(const gf::FieldCtx& ctx, gf::Fe c, const Mat& m);
Mat add(const gf::FieldCtx& ctx, const Mat& x, const Mat& y);
std::vector<gf::Fe> mat_vec(const gf::FieldCtx& ctx, const Mat& m, std::span<const gf::Fe> x);
gf::Fe dot(const gf::FieldCtx& ctx, std::span<const gf::Fe> x, std::span<const gf::Fe> y);

/// Reduced row echelon form with first-nonzero pivoting; deterministic.
Mat rref(const gf::FieldCtx& ctx, Mat m, int* rank_out = nullptr);
int rank(const gf::FieldCtx& ctx, const Mat& m);
/// Rows form a canonical (RREF) basis of the right nullspace {x : Mx = 0}.
Mat kernel_basis(const gf::FieldCtx& ctx, const Mat& m);
/// Particular solution of Mx = b with free variables set to zero.
std::optional<std::vector<gf::Fe>> solve(const gf::FieldCtx& ctx, const Mat& m,
                                         std::span<const gf::Fe> b);
std::optional<Mat> inverse(const gf::FieldCtx& ctx, const Mat& m);

}  // namespace hermicode::la
