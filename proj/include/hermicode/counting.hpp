#pragma once

#include <variant>

#include "hermicode/charsum.hpp"
#include "hermicode/quadform.hpp"

namespace hermicode::counting {

/// Cached f-values over the canonical point enumeration of F_t^{2N};
/// shared by every brute-force kernel for one form.
struct FormTable {
  const quadform::QuadHermForm* form = nullptr;
  gf::PointDomain domain;
  std::vector<gf::Fe> values;

  static FormTable build(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q);
};

/// Exact S(af,v) = sum over x of psi(a f(x) + v.x), computed point by point.
/// The serial routine is the reference; the parallel one partitions the
/// point range and merges exponent histograms.
charsum::CycInt brute_sum_serial(const gf::FieldCtx& ctx, const FormTable& table,
                                 std::span<const gf::Fe> v, gf::Fe a);
charsum::CycInt brute_sum_parallel(const gf::FieldCtx& ctx, const FormTable& table,
                                   std::span<const gf::Fe> v, gf::Fe a, int threads);
charsum::CycInt brute_sum(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q,
                          std::span<const gf::Fe> v, gf::Fe a, int threads = 1);

struct ClosedSum {
  charsum::CycInt value;
  bool v_in_image = false;
  std::optional<std::vector<gf::Fe>> u;  // witness with T(u) = v when inside
};

/// Closed form: (-1)^rho t^(2N-rho) psi(-a^{-1} f(u)) when v = T(u);
/// zero when v is outside (Ker B)-perp = Im T. Membership is decided by
/// solving T u = v; the orthogonal-complement characterization is
/// recomputed as a cross-check.
ClosedSum closed_sum(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q,
                     std::span<const gf::Fe> v, gf::Fe a);

/// One verified instance: closed form next to its brute-force oracle.
struct CountReport {
  std::string kind;  // "exp_sum" | "trace_affine" | "trace_level"
  gf::TowerSpec spec;
  int rho = 0;
  std::vector<std::vector<std::uint32_t>> form;  // hermitian matrix encodings
  std::vector<std::uint32_t> v_enc;
  std::uint32_t a_enc = 0;
  std::string branch;
  std::variant<std::int64_t, charsum::CycInt> closed_form;
  std::variant<std::int64_t, charsum::CycInt> brute_force;
  std::optional<int> A_value;
  bool match = false;
};

CountReport check_sum(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q,
                      std::span<const gf::Fe> v, gf::Fe a, int threads = 1);

/// Solutions of Tr_{t/s}(f(x) + v.x) = 0, brute force.
std::int64_t brute_count_affine_serial(const gf::FieldCtx& ctx, const FormTable& table,
                                       std::span<const gf::Fe> v);
std::int64_t brute_count_affine_parallel(const gf::FieldCtx& ctx, const FormTable& table,
                                         std::span<const gf::Fe> v, int threads);

/// Closed form vs brute force for Tr_{t/s}(f(x) + v.x) = 0; requires
/// 1 <= rho <= N.
CountReport count_trace_affine(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q,
                               std::span<const gf::Fe> v, int threads = 1);

/// Closed form vs brute force for Tr_{t/s}(f(x)) = a, a in F_s.
CountReport count_trace_level(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q,
                              gf::Fe a, int threads = 1);

/// Direct count of Tr_{t/s}(f(x) + v.x) = a. No closed form is claimed
/// for the mixed equation; this is data only.
std::int64_t brute_count_general(const gf::FieldCtx& ctx, const quadform::QuadHermForm& q,
                                 std::span<const gf::Fe> v, gf::Fe a, int threads = 1);

}  // namespace hermicode::counting
