#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hermicode/codes.hpp"
#include "hermicode/quadform.hpp"

using namespace hermicode;
using gf::Fe;
using gf::FieldCtx;
using gf::PointDomain;
using gf::Subfield;
using gf::TowerSpec;
using hermitian::HermitianForm;
using la::Mat;
using quadform::QuadHermForm;

namespace {

const FieldCtx& ctx3() {
  static FieldCtx ctx(TowerSpec{3, 1, 1, 1});
  return ctx;
}

const FieldCtx& ctx3n2() {
  static FieldCtx ctx(TowerSpec{3, 1, 1, 2});
  return ctx;
}

}  // namespace

TEST_CASE("coordinate pairing") {
  const auto& ctx = ctx3();
  const std::vector<Fe> z2(2, Fe{0});
  CHECK(quadform::iota(ctx, z2) == std::vector<Fe>{ctx.zero()});
  CHECK(quadform::iota(ctx, std::vector<Fe>{ctx.one(), ctx.zero()}) ==
        std::vector<Fe>{ctx.one()});
  CHECK(quadform::iota(ctx, std::vector<Fe>{ctx.zero(), ctx.one()}) ==
        std::vector<Fe>{ctx.alpha()});
  CHECK_THROWS_AS(quadform::iota(ctx, std::vector<Fe>{ctx.alpha(), ctx.zero()}),
                  ArgumentError);
  CHECK_THROWS_AS(quadform::iota(ctx, std::vector<Fe>{ctx.one()}), ArgumentError);

  for (const FieldCtx* c : {&ctx3(), &ctx3n2()}) {
    PointDomain dom(*c, Subfield::Ft, 2 * c->spec().N);
    std::vector<Fe> x(2 * c->spec().N);
    for (std::int64_t i = 0; i < dom.size(); ++i) {
      dom.decode(i, x);
      CHECK(quadform::iota_inv(*c, quadform::iota(*c, x)) == x);
    }
  }
}

TEST_CASE("pairing is F_t-linear") {
  const auto& ctx = ctx3n2();
  PointDomain dom(ctx, Subfield::Ft, 4);
  std::vector<Fe> x(4), y(4), sum(4), scaled(4);
  for (std::int64_t i = 0; i < dom.size(); i += 3) {
    dom.decode(i, x);
    for (std::int64_t j = 0; j < dom.size(); j += 7) {
      dom.decode(j, y);
      for (int k = 0; k < 4; ++k) sum[k] = ctx.add(x[k], y[k]);
      const auto ix = quadform::iota(ctx, x);
      const auto iy = quadform::iota(ctx, y);
      auto expect = ix;
      for (std::size_t k = 0; k < expect.size(); ++k)
        expect[k] = ctx.add(ix[k], iy[k]);
      CHECK(quadform::iota(ctx, sum) == expect);
    }
    for (Fe lam : ctx.elements(Subfield::Ft)) {
      for (int k = 0; k < 4; ++k) scaled[k] = ctx.mul(lam, x[k]);
      auto expect = quadform::iota(ctx, x);
      for (auto& c : expect) c = ctx.mul(lam, c);
      CHECK(quadform::iota(ctx, scaled) == expect);
    }
  }
}

TEST_CASE("descended form values") {
  const auto& ctx = ctx3();
  const QuadHermForm q(ctx, HermitianForm::identity(1));
  // f(u,v) = u^2 + v^2 in this model (alpha^2 = -1)
  for (Fe u : ctx.elements(Subfield::Ft)) {
    for (Fe v : ctx.elements(Subfield::Ft)) {
      const std::vector<Fe> x{u, v};
      CHECK(quadform::eval(ctx, q, x) ==
            ctx.add(ctx.mul(u, u), ctx.mul(v, v)));
    }
  }
  CHECK(quadform::eval(ctx, q, std::vector<Fe>{ctx.one(), ctx.one()}) == ctx.from_int(2));
  CHECK(quadform::eval(ctx, q, std::vector<Fe>{ctx.zero(), ctx.zero()}) == ctx.zero());
}

TEST_CASE("squares scale quadratically") {
  const auto& ctx = ctx3n2();
  const QuadHermForm q = quadform::standard_form(ctx, 2, 1);
  PointDomain dom(ctx, Subfield::Ft, 4);
  std::vector<Fe> x(4), lx(4);
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, x);
    const Fe fx = quadform::eval(ctx, q, x);
    for (Fe lam : ctx.elements(Subfield::Ft)) {
      for (int k = 0; k < 4; ++k) lx[k] = ctx.mul(lam, x[k]);
      CHECK(quadform::eval(ctx, q, lx) == ctx.mul(ctx.mul(lam, lam), fx));
    }
  }
}

TEST_CASE("bilinear form") {
  const auto& ctx = ctx3();
  const QuadHermForm q(ctx, HermitianForm::identity(1));

  Mat expect = Mat::identity(2);
  for (auto& v : expect.a) v = ctx.mul(ctx.from_int(2), v);
  CHECK(q.b_matrix() == expect);  // B = 2 I

  const std::vector<Fe> e1{ctx.one(), ctx.zero()};
  const std::vector<Fe> e2{ctx.zero(), ctx.one()};
  const std::vector<Fe> zero{ctx.zero(), ctx.zero()};
  CHECK(quadform::bilinear(ctx, q, e1, e1) == ctx.from_int(2));
  CHECK(quadform::bilinear(ctx, q, e1, e2) == ctx.zero());
  CHECK(quadform::bilinear(ctx, q, e1, zero) == ctx.zero());

  // B(x,y) = f(x+y) - f(x) - f(y) and B(x,x) = 2 f(x), all points
  PointDomain dom(ctx, Subfield::Ft, 2);
  std::vector<Fe> x(2), y(2), s(2);
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, x);
    CHECK(quadform::bilinear(ctx, q, x, x) ==
          ctx.mul(ctx.from_int(2), quadform::eval(ctx, q, x)));
    for (std::int64_t j = 0; j < dom.size(); ++j) {
      dom.decode(j, y);
      for (int k = 0; k < 2; ++k) s[k] = ctx.add(x[k], y[k]);
      const Fe polarized = ctx.sub(
          ctx.sub(quadform::eval(ctx, q, s), quadform::eval(ctx, q, x)),
          quadform::eval(ctx, q, y));
      CHECK(quadform::bilinear(ctx, q, x, y) == polarized);
      CHECK(quadform::bilinear(ctx, q, x, y) == quadform::bilinear(ctx, q, y, x));
    }
  }
}

TEST_CASE("endomorphism matrix") {
  const auto& ctx = ctx3();
  {
    const QuadHermForm q(ctx, HermitianForm::identity(1));
    Mat expect = Mat::identity(2);
    for (auto& v : expect.a) v = ctx.mul(ctx.from_int(2), v);
    CHECK(q.b_matrix() == expect);
  }
  {
    const QuadHermForm q(ctx, HermitianForm::zero(1));
    CHECK(q.b_matrix() == Mat(2, 2));
    CHECK(quadform::kernel_b(ctx, q).dim() == 2);
  }
  {
    const auto& c2 = ctx3n2();
    const QuadHermForm q = quadform::standard_form(c2, 2, 1);
    CHECK(rank(c2, q.b_matrix()) == 2);
  }
}

TEST_CASE("standard forms") {
  const auto& ctx = ctx3n2();
  CHECK(quadform::standard_form(ctx, 2, 0).rho() == 0);
  CHECK(quadform::standard_form(ctx, 2, 2).rho() == 2);
  CHECK_THROWS_AS(quadform::standard_form(ctx, 2, 3), ArgumentError);
  CHECK_THROWS_AS(quadform::standard_form(ctx, 2, -1), ArgumentError);
}

TEST_CASE("solving T u = v returns the least solution") {
  for (int rho = 1; rho <= 2; ++rho) {
    const auto& ctx = ctx3n2();
    const QuadHermForm q = quadform::standard_form(ctx, 2, rho);
    PointDomain dom(ctx, Subfield::Ft, 4);
    std::vector<Fe> v(4), u(4);
    for (std::int64_t vi = 0; vi < dom.size(); ++vi) {
      dom.decode(vi, v);
      // oracle: scan every u for T(u) = v, keep the lexicographic least
      std::optional<std::vector<Fe>> best;
      for (std::int64_t ui = 0; ui < dom.size(); ++ui) {
        dom.decode(ui, u);
        if (mat_vec(ctx, q.b_matrix(), u) != v) continue;
        const auto lex_less = [](const std::vector<Fe>& a, const std::vector<Fe>& b) {
          for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].code != b[k].code) return a[k].code < b[k].code;
          return false;
        };
        if (!best || lex_less(u, *best)) best = u;
      }
      const auto got = quadform::solve_t(ctx, q, v);
      CHECK(got == best);
      if (got) CHECK(mat_vec(ctx, q.b_matrix(), *got) == v);
    }
  }
}

TEST_CASE("descended basis forms stay independent as functions") {
  const auto& ctx = ctx3n2();
  const int n = 2;
  const auto basis = codes::hermitian_basis(ctx, n);
  REQUIRE(basis.size() == static_cast<std::size_t>(n * n));
  PointDomain dom(ctx, Subfield::Ft, 2 * n);
  Mat values(static_cast<int>(basis.size()), static_cast<int>(dom.size()));
  std::vector<Fe> x(2 * n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const QuadHermForm q(ctx, HermitianForm(ctx, basis[k]));
    for (std::int64_t i = 0; i < dom.size(); ++i) {
      dom.decode(i, x);
      values.at(static_cast<int>(k), static_cast<int>(i)) = quadform::eval(ctx, q, x);
    }
  }
  CHECK(rank(ctx, values) == n * n);
}

TEST_CASE("values are constant on T-fibers") {
  const auto& ctx = ctx3n2();
  const QuadHermForm q = quadform::standard_form(ctx, 2, 1);
  PointDomain dom(ctx, Subfield::Ft, 4);
  std::vector<Fe> x(4);
  std::map<std::int64_t, Fe> first;
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, x);
    const auto tx = mat_vec(ctx, q.b_matrix(), x);
    const auto key = dom.index_of(ctx, tx);
    const Fe fx = quadform::eval(ctx, q, x);
    auto [it, inserted] = first.emplace(key, fx);
    if (!inserted) CHECK(it->second == fx);
  }
}
