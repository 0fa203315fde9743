#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermicode/gf.hpp"

namespace hermicode::charsum {

/// Exact element of Z[zeta_p], stored in the basis 1, zeta, ..., zeta^(p-2).
/// The representation is canonical, so equality is coefficient-wise.
class CycInt {
 public:
  explicit CycInt(int p) : p_(p), c_(p - 1, 0) {
    if (p < 2) throw ArgumentError("cyclotomic order must be >= 2");
  }
  static CycInt integer(int p, std::int64_t n);
  static CycInt zeta_power(int p, std::int64_t k);
  /// sum of counts[k] * zeta^k for k in [0, p).
  static CycInt from_histogram(int p, std::span<const std::int64_t> counts);

  int prime() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(std::int64_t k);
  friend CycInt operator+(CycInt x, const CycInt& y) { return x += y; }
  friend CycInt operator-(CycInt x, const CycInt& y) { return x -= y; }
  friend CycInt operator*(CycInt x, std::int64_t k) { return x *= k; }
  friend CycInt operator*(const CycInt& x, const CycInt& y);
  friend bool operator==(const CycInt&, const CycInt&) = default;

  /// Galois action zeta -> zeta^(-1) (complex conjugation on values).
  CycInt galois_conj() const;
  /// Exact division by an integer; throws CheckFailed if any coefficient
  /// is not divisible.
  CycInt divided_exact(std::int64_t d) const;

  std::string str() const;

 private:
  int p_;
  std::vector<std::int64_t> c_;
};

/// Additive character: zeta_p^(Tr_{field/Fp}(x)). Errors if x is outside
/// the tagged field.
CycInt psi(const gf::FieldCtx& ctx, gf::Fe x, gf::Subfield field);

/// Brute-force sum of psi(l(y)) over y in F_t^m, m = l.size().
CycInt char_sum_linear(const gf::FieldCtx& ctx, std::span<const gf::Fe> l);

/// Brute-force sum of psi(N_{F_{t^m}/F_t}(x)) over F_{t^m}, m in {1,2}.
CycInt norm_char_sum(const gf::FieldCtx& ctx, int m);

/// Exact count of solutions f(x) = target for f with values in (F_s, +),
/// evaluated through the full character group of F_s. The final division
/// by s must be exact; anything else is an invariant violation.
std::int64_t count_via_characters(const gf::FieldCtx& ctx, std::int64_t domain_size,
                                  const std::function<gf::Fe(std::int64_t)>& eval,
                                  gf::Fe target);

}  // namespace hermicode::charsum
