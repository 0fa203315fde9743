#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hermicode/matrix.hpp"

namespace hermicode::hermitian {

/// A subspace of F_{t^2}^n, stored with a reduced-echelon basis so that
/// equal subspaces compare equal as values.
class Subspace {
 public:
  static Subspace from_rows(const gf::FieldCtx& ctx, int ambient, la::Mat rows);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const la::Mat& basis() const { return basis_; }
  bool contains(const gf::FieldCtx& ctx, std::span<const gf::Fe> v) const;
  /// All dim()^|field| member vectors, in coefficient enumeration order.
  std::vector<std::vector<gf::Fe>> enumerate(const gf::FieldCtx& ctx) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(int ambient, la::Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_ = 0;
  la::Mat basis_;  // RREF, no zero rows
};

Subspace sum(const gf::FieldCtx& ctx, const Subspace& x, const Subspace& y);
Subspace intersect(const gf::FieldCtx& ctx, const Subspace& x, const Subspace& y);

/// Sesquilinear hermitian form on F_{t^2}^n, held by its matrix M with
/// M* = M in the standard basis.
class HermitianForm {
 public:
  HermitianForm(const gf::FieldCtx& ctx, la::Mat m);
  static HermitianForm zero(int n);
  static HermitianForm identity(int n);
  static HermitianForm diagonal(const gf::FieldCtx& ctx, std::span<const gf::Fe> d);

  int dim() const { return m_.rows; }
  const la::Mat& matrix() const { return m_; }

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  explicit HermitianForm(la::Mat m) : m_(std::move(m)) {}
  la::Mat m_;
};

/// H(x,y) = X* M Y; semi-linear in x, linear in y.
gf::Fe eval(const gf::FieldCtx& ctx, const HermitianForm& h,
            std::span<const gf::Fe> x, std::span<const gf::Fe> y);

/// Matrix of H after the change of coordinates P: P* M P.
HermitianForm change_basis(const gf::FieldCtx& ctx, const HermitianForm& h,
                           const la::Mat& p);

/// Kernel {x : H(x,.) = 0} and rank; dim kernel + rank = n.
std::pair<Subspace, int> kernel_rank(const gf::FieldCtx& ctx, const HermitianForm& h);

struct Orthogonalization {
  la::Mat basis;          // columns are the orthogonal basis vectors
  std::vector<int> diag;  // 0/1 entries of P* M P
  int rank = 0;
};

/// Orthogonal basis with H(e_i,e_i) in {0,1}, ones first; the number of
/// ones equals the rank. Requires odd t (enforced at tower construction).
Orthogonalization orthogonalize(const gf::FieldCtx& ctx, const HermitianForm& h);

/// Recovers the hermitian form from a point evaluator q with values in
/// F_t via the odd-characteristic polarization identity. Errors if the
/// reconstructed matrix is not hermitian.
HermitianForm polar_form(const gf::FieldCtx& ctx, int n,
                         const std::function<gf::Fe(std::span<const gf::Fe>)>& q);

/// Same dimension and same rank.
bool equivalent(const gf::FieldCtx& ctx, const HermitianForm& h1,
                const HermitianForm& h2);

/// F_perp = {x : H(x,y) = 0 for all y in F}.
Subspace orth_complement(const gf::FieldCtx& ctx, const HermitianForm& h,
                         const Subspace& f);

/// F meets its orthogonal nontrivially.
bool is_isotropic(const gf::FieldCtx& ctx, const HermitianForm& h, const Subspace& f);

}  // namespace hermicode::hermitian
