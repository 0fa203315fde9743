#pragma once

#include <optional>

#include "hermicode/hermitian.hpp"

namespace hermicode::quadform {

/// Coordinate pairing F_t^{2N} -> F_{t^2}^N, (x1,...,x2N) -> (x1 + alpha x2, ...).
std::vector<gf::Fe> iota(const gf::FieldCtx& ctx, std::span<const gf::Fe> x);
std::vector<gf::Fe> iota_inv(const gf::FieldCtx& ctx, std::span<const gf::Fe> z);

/// The descended form f(x) = H(iota x, iota x) on F_t^{2N}, together with
/// its bilinear form B (symmetric 2N x 2N over F_t) and rank parameter rho.
/// Relative to the standard inner product the endomorphism with
/// B(x,y) = T(x).y has the same matrix as B.
class QuadHermForm {
 public:
  QuadHermForm(const gf::FieldCtx& ctx, hermitian::HermitianForm h);

  const hermitian::HermitianForm& hermitian_form() const { return h_; }
  int n() const { return h_.dim(); }
  int dim() const { return 2 * h_.dim(); }
  int rho() const { return rho_; }
  const la::Mat& b_matrix() const { return b_; }

 private:
  hermitian::HermitianForm h_;
  la::Mat b_;
  int rho_ = 0;
};

/// f(x) = H(iota x, iota x), an element of F_t.
gf::Fe eval(const gf::FieldCtx& ctx, const QuadHermForm& q, std::span<const gf::Fe> x);

/// B(x,y), equal to both f(x+y)-f(x)-f(y) and Tr_{t^2/t}(H(iota x, iota y)).
gf::Fe bilinear(const gf::FieldCtx& ctx, const QuadHermForm& q,
                std::span<const gf::Fe> x, std::span<const gf::Fe> y);

hermitian::Subspace kernel_b(const gf::FieldCtx& ctx, const QuadHermForm& q);
hermitian::Subspace image_t(const gf::FieldCtx& ctx, const QuadHermForm& q);

/// Least-encoded u with T(u) = v, or nullopt when v is outside Im T.
/// "Least" compares the coordinate encoding tuples lexicographically,
/// first coordinate most significant.
std::optional<std::vector<gf::Fe>> solve_t(const gf::FieldCtx& ctx,
                                           const QuadHermForm& q,
                                           std::span<const gf::Fe> v);

/// Descends diag(1,...,1,0,...,0) with rho ones; rank(f) = 2 rho.
QuadHermForm standard_form(const gf::FieldCtx& ctx, int n, int rho);

}  // namespace hermicode::quadform
