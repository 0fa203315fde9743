#pragma once

#include <map>
#include <optional>
#include <string>

#include "hermicode/quadform.hpp"

namespace hermicode::codes {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  static Rational make(std::int64_t n, std::int64_t d);  // reduced, den > 0
  friend Rational operator-(const Rational& x, const Rational& y);
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class CodeLabel { Gamma, C };

const char* label_name(CodeLabel label);

/// F_s-linear code of length t^{2N}; coordinates follow the canonical
/// enumeration of F_t^{2N}. Rows are a basis of the code (checked).
struct LinearCode {
  CodeLabel label{};
  gf::TowerSpec spec;
  std::int64_t length = 0;
  int dimension = 0;
  la::Mat rows;
};

/// The N^2 hermitian matrix units over F_t: diagonals E_ii first, then for
/// each i < j the pair (E_ij + E_ji) and (alpha E_ij + conj(alpha) E_ji).
std::vector<la::Mat> hermitian_basis(const gf::FieldCtx& ctx, int n);

/// 1, tau, ..., tau^(b-1) with tau the canonical generator of F_t; an
/// F_s-basis of F_t.
std::vector<gf::Fe> ft_over_fs_basis(const gf::FieldCtx& ctx);

/// Rows: Tr_{t/s}(f(x)) for every basis form scaled by every tau power,
/// then Tr_{t/s}(tau^j x_k) for every coordinate; K = (N^2 + 2N) log_s t.
LinearCode build_gamma(const gf::FieldCtx& ctx);

/// Rows: the form rows plus the all-ones row; K = 1 + N^2 log_s t.
LinearCode build_c(const gf::FieldCtx& ctx);

struct CodeParams {
  std::string label;
  std::int64_t n = 0;
  int k = 0;
  std::int64_t d_min = 0;
  std::optional<std::int64_t> w_max;
  std::optional<Rational> disparity;  // w_max / d_min
  Rational lambda;                    // (k + d_min) / n
  std::map<std::int64_t, std::int64_t> weight_distribution;
  std::int64_t bound_lower = 0;  // theorem bounds on nonzero weights
  std::int64_t bound_upper = 0;
  bool lower_attained = false;
  bool upper_attained = false;
};

/// Weight tally over all s^K codewords; index = weight.
std::vector<std::int64_t> weight_tally_serial(const gf::FieldCtx& ctx,
                                              const LinearCode& code);
std::vector<std::int64_t> weight_tally_parallel(const gf::FieldCtx& ctx,
                                                const LinearCode& code, int threads);

/// Full enumeration of the weight distribution. Refuses (BudgetExceeded)
/// when s^K * n codeword symbols exceed the budget; never samples.
/// Throws CheckFailed if any weight escapes the theorem bounds or the
/// zero word is not unique.
CodeParams weight_distribution(const gf::FieldCtx& ctx, const LinearCode& code,
                               std::int64_t budget = 10'000'000, int threads = 1);

/// Parameters of the order-2 generalized Reed-Muller comparison code on
/// F_t^{2N}, by formula only; requires t > 2.
CodeParams rm_params(int n_dim, std::int64_t t);

struct Comparison {
  std::string label_p, label_q;
  std::int64_t n = 0;
  Rational rate_p, rate_q;          // K/n
  Rational reliability_p, reliability_q;  // d/n
  Rational lambda_p, lambda_q;
  std::int64_t d_diff = 0;          // d_p - d_q
  Rational rate_diff, lambda_diff;  // p minus q
};

Comparison compare(const CodeParams& p, const CodeParams& q);

/// The closed-form identities relating Gamma, C and the Reed-Muller
/// parameters when s = t, each checked exactly.
struct RmIdentities {
  bool applicable = false;  // s == t
  bool d_gamma_ok = false;      // D_Gamma - D_R = t^(2N-1) - t^(2N-2)
  bool d_c_ok = false;          // D_C - D_R = t^(2N-2)(t-1)
  bool rate_ok = false;         // K_R/n - K_Gamma/n = (N^2+N+1)/t^(2N)
  bool lambda_ok = false;       // lambda(Gamma)-lambda(R) closed form
  bool lambda_sign_ok = false;  // >= 0 whenever N >= 2 or t >= 4
  bool all_ok() const;
};

RmIdentities check_rm_identities(const gf::FieldCtx& ctx, const CodeParams& gamma,
                                 const CodeParams& c, const CodeParams& rm);

}  // namespace hermicode::codes
