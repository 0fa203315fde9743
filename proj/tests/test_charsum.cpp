#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hermicode/charsum.hpp"

using namespace hermicode;
using charsum::CycInt;
using gf::Fe;
using gf::FieldCtx;
using gf::Subfield;
using gf::TowerSpec;

namespace {

const FieldCtx& ctx9() {
  static FieldCtx ctx(TowerSpec{3, 1, 1, 1});
  return ctx;
}

const FieldCtx& ctx81() {
  static FieldCtx ctx(TowerSpec{3, 1, 2, 1});
  return ctx;
}

const FieldCtx& ctx_s9() {  // s = t = 9
  static FieldCtx ctx(TowerSpec{3, 2, 1, 1});
  return ctx;
}

}  // namespace

TEST_CASE("canonical reduction of the full orbit") {
  // 1 + zeta + ... + zeta^(p-1) = 0
  for (int p : {3, 5, 7}) {
    std::vector<std::int64_t> ones(p, 1);
    CHECK(CycInt::from_histogram(p, ones).is_zero());
  }
}

TEST_CASE("ring arithmetic in Z[zeta_5]") {
  const auto z = [](std::int64_t k) { return CycInt::zeta_power(5, k); };
  CHECK(z(1) * z(4) == CycInt::integer(5, 1));
  CHECK(z(2) * z(3) == CycInt::integer(5, 1));
  CHECK(z(0) + z(1) + z(2) + z(3) + z(4) == CycInt(5));
  // distributivity on a small sample
  const CycInt a = z(1) + z(2) * 3;
  const CycInt b = z(3) - z(0) * 2;
  const CycInt c = z(4) * 5 + z(2);
  CHECK(a * (b + c) == a * b + a * c);
  // galois conjugation is a ring involution
  CHECK(a.galois_conj().galois_conj() == a);
  CHECK((a * b).galois_conj() == a.galois_conj() * b.galois_conj());
}

TEST_CASE("integer extraction and exact division") {
  CHECK(CycInt::integer(3, 42).as_integer() == 42);
  CHECK(!CycInt::zeta_power(3, 1).as_integer().has_value());
  CHECK((CycInt::integer(3, 9).divided_exact(3)) == CycInt::integer(3, 3));
  CHECK_THROWS_AS(CycInt::integer(3, 10).divided_exact(3), CheckFailed);
}

TEST_CASE("additive character values") {
  const auto& ctx = ctx9();
  CHECK(charsum::psi(ctx, ctx.zero(), Subfield::Ft) == CycInt::integer(3, 1));
  CHECK(charsum::psi(ctx, ctx.one(), Subfield::Fp) == CycInt::zeta_power(3, 1));
  // multiplicative over addition
  for (Fe x : ctx.elements(Subfield::Ft))
    for (Fe y : ctx.elements(Subfield::Ft))
      CHECK(charsum::psi(ctx, ctx.add(x, y), Subfield::Ft) ==
            charsum::psi(ctx, x, Subfield::Ft) * charsum::psi(ctx, y, Subfield::Ft));
  // full-group sum vanishes for the nontrivial character
  CycInt sum(3);
  for (Fe x : ctx.elements(Subfield::Ft)) sum += charsum::psi(ctx, x, Subfield::Ft);
  CHECK(sum.is_zero());
  CHECK_THROWS_AS(charsum::psi(ctx, ctx.alpha(), Subfield::Ft), ArgumentError);
}

TEST_CASE("linear-form character sums") {
  const auto& ctx = ctx9();
  const std::vector<Fe> zero2{ctx.zero(), ctx.zero()};
  CHECK(charsum::char_sum_linear(ctx, zero2) == CycInt::integer(3, 9));
  const std::vector<Fe> e1{ctx.one(), ctx.zero()};
  CHECK(charsum::char_sum_linear(ctx, e1) == CycInt(3));
  const std::vector<Fe> one{ctx.one()};
  CHECK(charsum::char_sum_linear(ctx, one) == CycInt(3));
}

TEST_CASE("norm character sums") {
  CHECK(charsum::norm_char_sum(ctx9(), 2) == CycInt::integer(3, -3));
  CHECK(charsum::norm_char_sum(ctx9(), 1) == CycInt(3));
  CHECK(charsum::norm_char_sum(ctx81(), 2) == CycInt::integer(3, -9));
  CHECK_THROWS_AS(charsum::norm_char_sum(ctx9(), 3), ArgumentError);
}

TEST_CASE("counting through characters equals direct counting") {
  const auto& ctx = ctx9();
  const auto zero_map = [&](std::int64_t) { return ctx.zero(); };
  CHECK(charsum::count_via_characters(ctx, 9, zero_map, ctx.zero()) == 9);
  CHECK(charsum::count_via_characters(ctx, 9, zero_map, ctx.one()) == 0);

  const auto& ft2 = ctx.elements(Subfield::Ft2);
  const auto trace_norm = [&](std::int64_t i) {
    return ctx.trace(ctx.norm(ft2[i], Subfield::Ft2, Subfield::Ft), Subfield::Ft,
                     Subfield::Fs);
  };
  // direct enumeration of the norm fibers: x^4 = 1 has 4 solutions
  std::int64_t direct = 0;
  for (std::int64_t i = 0; i < 9; ++i)
    if (trace_norm(i) == ctx.one()) ++direct;
  CHECK(direct == 4);
  CHECK(charsum::count_via_characters(ctx, 9, trace_norm, ctx.one()) == 4);
}

TEST_CASE("character orthogonality over F_9 as the base of the characters") {
  const auto& ctx = ctx_s9();
  REQUIRE(ctx.s() == 9);
  const int p = 3;
  for (Fe c : ctx.elements(Subfield::Fs)) {
    for (Fe d : ctx.elements(Subfield::Fs)) {
      CycInt sum(p);
      for (Fe x : ctx.elements(Subfield::Fs))
        sum += charsum::psi(ctx, ctx.mul(c, x), Subfield::Fs) *
               charsum::psi(ctx, ctx.mul(d, x), Subfield::Fs).galois_conj();
      CHECK(sum == ((c == d) ? CycInt::integer(p, 9) : CycInt(p)));
    }
  }
}
