#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hermicode/counting.hpp"
#include "hermicode/sweeps.hpp"

using namespace hermicode;
using charsum::CycInt;
using counting::FormTable;
using gf::Fe;
using gf::FieldCtx;
using gf::PointDomain;
using gf::Subfield;
using gf::TowerSpec;
using hermitian::HermitianForm;
using quadform::QuadHermForm;

namespace {

const FieldCtx& ctx1() {  // s = t = 3, N = 1
  static FieldCtx ctx(TowerSpec{3, 1, 1, 1});
  return ctx;
}

const FieldCtx& ctx2() {  // s = t = 3, N = 2
  static FieldCtx ctx(TowerSpec{3, 1, 1, 2});
  return ctx;
}

const FieldCtx& ctx_t9() {  // s = 3, t = 9, N = 1
  static FieldCtx ctx(TowerSpec{3, 1, 2, 1});
  return ctx;
}

std::vector<Fe> zero_vec(int n) { return std::vector<Fe>(n, Fe{0}); }

}  // namespace

TEST_CASE("brute-force exponential sums") {
  const auto& ctx = ctx1();
  const QuadHermForm rank2 = quadform::standard_form(ctx, 1, 1);
  CHECK(counting::brute_sum(ctx, rank2, zero_vec(2), ctx.one()) ==
        CycInt::integer(3, -3));

  const QuadHermForm zero = quadform::standard_form(ctx, 1, 0);
  CHECK(counting::brute_sum(ctx, zero, zero_vec(2), ctx.one()) ==
        CycInt::integer(3, 9));
  CHECK(counting::brute_sum(ctx, zero, std::vector<Fe>{ctx.one(), ctx.zero()},
                            ctx.one()) == CycInt(3));

  CHECK_THROWS_AS(counting::brute_sum(ctx, rank2, zero_vec(2), ctx.zero()),
                  ArgumentError);
  CHECK_THROWS_AS(
      counting::brute_sum(ctx, rank2, std::vector<Fe>{ctx.alpha(), ctx.zero()},
                          ctx.one()),
      ArgumentError);
}

TEST_CASE("closed sums at N = 1") {
  const auto& ctx = ctx1();
  const QuadHermForm q = quadform::standard_form(ctx, 1, 1);
  const auto closed = counting::closed_sum(ctx, q, zero_vec(2), ctx.one());
  CHECK(closed.v_in_image);
  CHECK(closed.value == CycInt::integer(3, -3));

  // sum over a in F_s*: A(s,v) = s - 1 = 2 when the trace vanishes at u = 0
  CycInt total(3);
  for (Fe a : ctx.elements(Subfield::Fs)) {
    if (a.code == 0) continue;
    total += counting::closed_sum(ctx, q, zero_vec(2), a).value;
  }
  CHECK(total == CycInt::integer(3, -6));
}

TEST_CASE("the zero branch exists and is exact at N = 2") {
  const auto& ctx = ctx2();
  const QuadHermForm q = quadform::standard_form(ctx, 2, 1);
  PointDomain dom(ctx, Subfield::Ft, 4);
  std::vector<Fe> v(4);
  std::int64_t outside = 0;
  const FormTable table = FormTable::build(ctx, q);
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, v);
    const auto closed = counting::closed_sum(ctx, q, v, ctx.one());
    if (closed.v_in_image) continue;
    ++outside;
    CHECK(closed.value.is_zero());
    CHECK(counting::brute_sum_serial(ctx, table, v, ctx.one()).is_zero());
  }
  CHECK(outside == 81 - 9);  // rank-2 image inside F_3^4
}

TEST_CASE("closed equals brute across a full grid") {
  for (const FieldCtx* ctx : {&ctx1(), &ctx_t9()}) {
    for (int rho = 1; rho <= ctx->spec().N; ++rho) {
      for (const auto& q : sweeps::rank_variants(*ctx, rho, 3, 42)) {
        const FormTable table = FormTable::build(*ctx, q);
        PointDomain dom(*ctx, Subfield::Ft, q.dim());
        std::vector<Fe> v(q.dim());
        for (std::int64_t i = 0; i < dom.size(); ++i) {
          dom.decode(i, v);
          for (Fe a : ctx->elements(Subfield::Fs)) {
            if (a.code == 0) continue;
            CHECK(counting::closed_sum(*ctx, q, v, a).value ==
                  counting::brute_sum_serial(*ctx, table, v, a));
          }
        }
      }
    }
  }
}

TEST_CASE("affine trace counts") {
  const auto& ctx = ctx1();
  const QuadHermForm q = quadform::standard_form(ctx, 1, 1);

  {
    const auto rep = counting::count_trace_affine(ctx, q, zero_vec(2));
    CHECK(rep.branch == "v_in_imT");
    CHECK(rep.A_value == 2);
    CHECK(std::get<std::int64_t>(rep.closed_form) == 1);
    CHECK(rep.match);
  }
  {
    // any v = T(u) with f(u) != 0 gives the A = -1 branch and M = 4
    std::vector<Fe> u{ctx.one(), ctx.zero()};
    const auto v = mat_vec(ctx, q.b_matrix(), u);
    REQUIRE(quadform::eval(ctx, q, u).code != 0);
    const auto rep = counting::count_trace_affine(ctx, q, v);
    CHECK(rep.A_value == -1);
    CHECK(std::get<std::int64_t>(rep.closed_form) == 4);
    CHECK(rep.match);
  }
  {
    // outside the image the count is t^{2N}/s = 27
    const auto& c2 = ctx2();
    const QuadHermForm q2 = quadform::standard_form(c2, 2, 1);
    PointDomain dom(c2, Subfield::Ft, 4);
    std::vector<Fe> v(4);
    bool found = false;
    for (std::int64_t i = 0; i < dom.size() && !found; ++i) {
      dom.decode(i, v);
      if (quadform::solve_t(c2, q2, v)) continue;
      found = true;
      const auto rep = counting::count_trace_affine(c2, q2, v);
      CHECK(rep.branch == "v_not_in_imT");
      CHECK(std::get<std::int64_t>(rep.closed_form) == 27);
      CHECK(rep.match);
    }
    CHECK(found);
  }
  CHECK_THROWS_AS(
      counting::count_trace_affine(ctx, quadform::standard_form(ctx, 1, 0), zero_vec(2)),
      ArgumentError);
}

TEST_CASE("level trace counts") {
  const auto& ctx = ctx1();
  const QuadHermForm q = quadform::standard_form(ctx, 1, 1);
  {
    const auto rep = counting::count_trace_level(ctx, q, ctx.one());
    CHECK(rep.branch == "a_nonzero");
    CHECK(std::get<std::int64_t>(rep.closed_form) == 4);
    CHECK(rep.match);
  }
  {
    const auto rep = counting::count_trace_level(ctx, q, ctx.zero());
    CHECK(rep.branch == "a_zero");
    CHECK(std::get<std::int64_t>(rep.closed_form) == 1);
    CHECK(rep.match);
  }
  {
    const auto& c2 = ctx2();
    const auto rep = counting::count_trace_level(
        c2, quadform::standard_form(c2, 2, 2), c2.zero());
    CHECK(std::get<std::int64_t>(rep.closed_form) == 33);
    CHECK(rep.match);
  }
  CHECK_THROWS_AS(counting::count_trace_level(ctx, q, ctx.alpha()), ArgumentError);
}

TEST_CASE("general counts partition the domain") {
  const auto& ctx = ctx_t9();
  const QuadHermForm q = quadform::standard_form(ctx, 1, 1);
  const std::vector<Fe> v{ctx.one(), ctx.from_int(2)};

  std::int64_t total = 0;
  for (Fe a : ctx.elements(Subfield::Fs))
    total += counting::brute_count_general(ctx, q, v, a);
  CHECK(total == 81);

  // a = 0 reduces to the affine theorem, v = 0 to the level theorem
  const auto affine = counting::count_trace_affine(ctx, q, v);
  CHECK(counting::brute_count_general(ctx, q, v, ctx.zero()) ==
        std::get<std::int64_t>(affine.brute_force));
  const auto level = counting::count_trace_level(ctx, q, ctx.one());
  CHECK(counting::brute_count_general(ctx, q, zero_vec(2), ctx.one()) ==
        std::get<std::int64_t>(level.brute_force));
}

TEST_CASE("scaling law and level/affine consistency") {
  const auto& ctx = ctx2();
  for (int rho = 1; rho <= 2; ++rho) {
    const QuadHermForm q = quadform::standard_form(ctx, 2, rho);
    for (Fe a : ctx.elements(Subfield::Fs)) {
      if (a.code == 0) continue;
      const QuadHermForm qa(
          ctx, HermitianForm(ctx, scale(ctx, a, q.hermitian_form().matrix())));
      CHECK(qa.b_matrix() == scale(ctx, a, q.b_matrix()));
    }
    const auto affine = counting::count_trace_affine(ctx, q, zero_vec(4));
    const auto level = counting::count_trace_level(ctx, q, ctx.zero());
    CHECK(affine.closed_form == level.closed_form);
    CHECK(affine.brute_force == level.brute_force);
  }
}

TEST_CASE("vanishing product for v outside the perp") {
  const auto& ctx = ctx2();
  const QuadHermForm q = quadform::standard_form(ctx, 2, 1);
  const FormTable table = FormTable::build(ctx, q);
  const CycInt s0 = counting::brute_sum_serial(ctx, table, zero_vec(4), ctx.one());
  PointDomain dom(ctx, Subfield::Ft, 4);
  std::vector<Fe> v(4);
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, v);
    if (quadform::solve_t(ctx, q, v)) continue;
    const CycInt sv = counting::brute_sum_serial(ctx, table, v, ctx.one());
    CHECK((sv * s0.galois_conj()).is_zero());
  }
}
