#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hermicode/errors.hpp"

namespace hermicode::gf {

/// The four levels of the tower F_p < F_s < F_t < F_{t^2}.
enum class Subfield { Fp, Fs, Ft, Ft2 };

const char* subfield_name(Subfield sub);

/// Tower parameters: s = p^a, t = s^b = p^(ab), ambient field F_{t^2}.
/// N is the geometric dimension used by the form modules.
struct TowerSpec {
  int p = 0;
  int a = 0;
  int b = 0;
  int N = 1;

  void validate() const;  // throws ConfigError

  std::int64_t s() const;
  std::int64_t t() const;
  std::int64_t t2() const;
  int degree() const;  // 2ab, the ambient degree over F_p

  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

/// A field element, stored as the packed integer sum(c_i p^i) of its
/// coefficient vector in the ambient polynomial basis.
struct Fe {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

/// Immutable context for one tower: deterministic modulus, generator,
/// discrete-log tables and subfield enumerations. All operations are
/// pure functions of (ctx, inputs); a context can be shared across threads.
class FieldCtx {
 public:
  explicit FieldCtx(TowerSpec spec);

  const TowerSpec& spec() const { return spec_; }
  std::int64_t p() const { return spec_.p; }
  std::int64_t s() const { return spec_.s(); }
  std::int64_t t() const { return spec_.t(); }
  std::int64_t t2() const { return q_; }
  int degree() const { return deg_; }

  /// Monic irreducible modulus, constant term first, length degree()+1.
  const std::vector<int>& modulus() const { return modulus_; }
  Fe generator() const { return g_; }
  Fe alpha() const { return alpha_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe from_code(std::int64_t code) const;
  Fe from_int(std::int64_t n) const;  // embeds n mod p
  std::vector<int> coeffs(Fe x) const;

  Fe add(Fe x, Fe y) const;  // Zech-logarithm lookup, division-free
  Fe sub(Fe x, Fe y) const;
  Fe neg(Fe x) const { return Fe{neg_[x.code]}; }
  Fe mul(Fe x, Fe y) const;
  Fe inv(Fe x) const;
  Fe pow(Fe x, std::int64_t k) const;
  Fe conj(Fe x) const { return Fe{conj_[x.code]}; }  // x^t
  Fe frobenius(Fe x) const { return Fe{frob_[x.code]}; }  // x^p

  std::int64_t order(Subfield sub) const;       // number of elements
  int subfield_degree(Subfield sub) const;      // over F_p
  bool contains(Subfield sub, Fe x) const;

  /// Relative trace sum over the Frobenius orbit; requires to <= from
  /// in the tower and x a member of `from`.
  Fe trace(Fe x, Subfield from, Subfield to) const;
  /// Relative norm x^((q_from-1)/(q_to-1)), 0 at 0; same preconditions.
  Fe norm(Fe x, Subfield from, Subfield to) const;
  /// Integer value in [0,p) of Tr_{from/Fp}(x); the psi exponent.
  int trace_to_prime(Fe x, Subfield from) const;
  /// Least-encoded a in F_{t^2}* with a^(t+1) = b, for b in F_t*.
  Fe norm_preimage(Fe b) const;

  /// Canonical enumeration: 0 first, then powers of the subfield generator.
  const std::vector<Fe>& elements(Subfield sub) const;
  std::int64_t index_of(Fe x, Subfield sub) const;
  Fe subfield_generator(Subfield sub) const;

  /// x = first + second*alpha with both parts in F_t.
  std::pair<Fe, Fe> split(Fe x) const;
  Fe combine(Fe u, Fe v) const;  // u + v*alpha

 private:
  void find_modulus();
  void build_tables();
  Fe add_raw(Fe x, Fe y) const;   // digit arithmetic, used during construction
  Fe mul_raw(Fe x, Fe y) const;
  Fe pow_raw(Fe x, std::int64_t k) const;
  int tag_index(Subfield sub) const { return static_cast<int>(sub); }

  TowerSpec spec_;
  std::int64_t q_ = 0;
  int deg_ = 0;
  std::vector<int> modulus_;
  Fe g_, alpha_;
  std::vector<std::uint32_t> exp_, dlog_, inv_, neg_, conj_, frob_, zech_;
  std::int64_t minus_one_log_ = 0;  // (q-1)/2: g^k = -1
  std::int64_t orders_[4] = {};
  int degrees_[4] = {};
  std::int64_t steps_[4] = {};  // (q-1)/(order-1)
  std::vector<Fe> elements_[4];
  std::vector<std::int32_t> index_[4];
  std::vector<std::int32_t> trace_p_[4];  // psi exponents per subfield
  std::vector<std::pair<std::uint32_t, std::uint32_t>> split_;
};

/// The point domain F_sub^dims in canonical mixed-radix order: the index
/// digit k (least significant first) selects coordinate k from the
/// subfield enumeration.
class PointDomain {
 public:
  PointDomain(const FieldCtx& ctx, Subfield sub, int dims);

  std::int64_t size() const { return size_; }
  int dims() const { return dims_; }
  void decode(std::int64_t index, std::span<Fe> out) const;
  std::vector<Fe> point(std::int64_t index) const;
  std::int64_t index_of(const FieldCtx& ctx, std::span<const Fe> x) const;

 private:
  const std::vector<Fe>* elems_;
  Subfield sub_;
  int dims_;
  std::int64_t radix_;
  std::int64_t size_;
};

std::int64_t ipow(std::int64_t base, int e);

}  // namespace hermicode::gf
