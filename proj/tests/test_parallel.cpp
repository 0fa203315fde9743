#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hermicode/codes.hpp"
#include "hermicode/counting.hpp"
#include "hermicode/sweeps.hpp"

using namespace hermicode;
using counting::FormTable;
using gf::Fe;
using gf::FieldCtx;
using gf::PointDomain;
using gf::Subfield;
using gf::TowerSpec;

// The OpenMP kernels must agree with the serial reference bit for bit:
// everything is exact integer arithmetic, so partition-and-merge cannot
// change any result.

TEST_CASE("exponential-sum kernels agree") {
  FieldCtx ctx(TowerSpec{3, 1, 2, 1});
  for (int rho : {1}) {
    for (const auto& q : sweeps::rank_variants(ctx, rho, 2, 9)) {
      const FormTable table = FormTable::build(ctx, q);
      PointDomain dom(ctx, Subfield::Ft, q.dim());
      std::vector<Fe> v(q.dim());
      for (std::int64_t i = 0; i < dom.size(); ++i) {
        dom.decode(i, v);
        for (Fe a : ctx.elements(Subfield::Fs)) {
          if (a.code == 0) continue;
          const auto serial = counting::brute_sum_serial(ctx, table, v, a);
          for (int threads : {2, 3}) {
            CHECK(counting::brute_sum_parallel(ctx, table, v, a, threads) == serial);
          }
        }
      }
    }
  }
}

TEST_CASE("count kernels agree") {
  FieldCtx ctx(TowerSpec{3, 1, 1, 2});
  const auto q = quadform::standard_form(ctx, 2, 1);
  const FormTable table = FormTable::build(ctx, q);
  PointDomain dom(ctx, Subfield::Ft, 4);
  std::vector<Fe> v(4);
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, v);
    const auto serial = counting::brute_count_affine_serial(ctx, table, v);
    CHECK(counting::brute_count_affine_parallel(ctx, table, v, 2) == serial);
    CHECK(counting::brute_count_general(ctx, q, v, ctx.one(), 2) ==
          counting::brute_count_general(ctx, q, v, ctx.one(), 1));
  }
}

TEST_CASE("weight tally kernels agree") {
  for (TowerSpec spec : {TowerSpec{3, 1, 1, 1}, TowerSpec{3, 1, 2, 1},
                         TowerSpec{3, 1, 1, 2}}) {
    FieldCtx ctx(spec);
    for (const auto& code : {codes::build_gamma(ctx), codes::build_c(ctx)}) {
      const auto serial = codes::weight_tally_serial(ctx, code);
      for (int threads : {2, 5}) {
        CHECK(codes::weight_tally_parallel(ctx, code, threads) == serial);
      }
    }
  }
}

TEST_CASE("parallel reports equal serial reports") {
  FieldCtx ctx(TowerSpec{3, 1, 2, 1});
  const auto q = quadform::standard_form(ctx, 1, 1);
  const std::vector<Fe> v{ctx.one(), ctx.zero()};
  const auto one = counting::count_trace_affine(ctx, q, v, 1);
  const auto two = counting::count_trace_affine(ctx, q, v, 2);
  CHECK(one.closed_form == two.closed_form);
  CHECK(one.brute_force == two.brute_force);
  CHECK(one.branch == two.branch);
}
