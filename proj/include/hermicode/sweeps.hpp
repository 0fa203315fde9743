#pragma once

#include "hermicode/counting.hpp"

namespace hermicode::sweeps {

struct CheckResult {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t mismatches = 0;
  std::vector<std::string> notes;  // first few failing instances
};

/// Standard form of rank 2*rho plus `random_variants` deterministic
/// basis-changed copies (seeded PRNG, invertible change of coordinates).
std::vector<quadform::QuadHermForm> rank_variants(const gf::FieldCtx& ctx, int rho,
                                                  int random_variants,
                                                  std::uint64_t seed);

/// Closed exponential sum against the brute-force oracle, over every form
/// (ranks 1..N, standard + variants), every v in F_t^{2N} and every a in
/// F_s*. Counts inside/outside-image branch coverage in the notes.
CheckResult sweep_exponential_sum(const gf::FieldCtx& ctx, int random_variants,
                                  std::uint64_t seed, int threads = 1);

/// Both counting theorems against brute force over the same instance grid.
CheckResult sweep_trace_affine(const gf::FieldCtx& ctx, int random_variants,
                               std::uint64_t seed, int threads = 1);
CheckResult sweep_trace_level(const gf::FieldCtx& ctx, int random_variants,
                              std::uint64_t seed, int threads = 1);

/// Exhaustive linear-form character sums over F_t^m for m = 1, 2.
CheckResult sweep_linear_char_sum(const gf::FieldCtx& ctx);

/// The structure-theorem property checks: polarization round-trip,
/// orthogonalization shape, rank descent, the T endomorphism laws, norm
/// fibers, the norm character sum, character orthogonality, counting via
/// characters, fiber well-definedness, the scaling law and the
/// affine/level consistency. Exhaustive over all hermitian forms when
/// `exhaustive`, else over seeded random forms.
std::vector<CheckResult> structure_suite(const gf::FieldCtx& ctx, bool exhaustive,
                                         int random_samples, std::uint64_t seed);

/// Everything cmd-verify runs, in report order.
std::vector<CheckResult> run_all(const gf::FieldCtx& ctx, int random_variants,
                                 std::uint64_t seed, int threads = 1);

std::int64_t total_mismatches(const std::vector<CheckResult>& results);

}  // namespace hermicode::sweeps
