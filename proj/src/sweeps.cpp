#include "hermicode/sweeps.hpp"

#include <map>
#include <random>
#include <sstream>

namespace hermicode::sweeps {

using charsum::CycInt;
using counting::FormTable;
using gf::Fe;
using gf::FieldCtx;
using gf::PointDomain;
using gf::Subfield;
using hermitian::HermitianForm;
using hermitian::Subspace;
using la::Mat;
using quadform::QuadHermForm;

namespace {

Fe random_fe(const FieldCtx& ctx, std::mt19937_64& rng) {
  return Fe{static_cast<std::uint32_t>(rng() % ctx.t2())};
}

Mat random_invertible(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  while (true) {
    Mat p(n, n);
    for (auto& v : p.a) v = random_fe(ctx, rng);
    if (inverse(ctx, p)) return p;
  }
}

HermitianForm random_hermitian(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  Mat m(n, n);
  const auto& ft = ctx.elements(Subfield::Ft);
  for (int i = 0; i < n; ++i) m.at(i, i) = ft[rng() % ft.size()];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Fe v = random_fe(ctx, rng);
      m.at(i, j) = v;
      m.at(j, i) = ctx.conj(v);
    }
  return HermitianForm(ctx, std::move(m));
}

std::vector<HermitianForm> all_hermitian_forms(const FieldCtx& ctx, int n) {
  const auto& ft = ctx.elements(Subfield::Ft);
  const std::int64_t q = ctx.t2();
  const int offs = n * (n - 1) / 2;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::int64_t>(ft.size());
  for (int i = 0; i < offs; ++i) total *= q;

  std::vector<HermitianForm> out;
  out.reserve(total);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rem = idx;
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = ft[rem % ft.size()];
      rem /= static_cast<std::int64_t>(ft.size());
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Fe v{static_cast<std::uint32_t>(rem % q)};
        rem /= q;
        m.at(i, j) = v;
        m.at(j, i) = ctx.conj(v);
      }
    out.emplace_back(ctx, std::move(m));
  }
  return out;
}

std::string vec_str(std::span<const Fe> v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].code;
  }
  os << ")";
  return os.str();
}

void record(CheckResult& r, bool ok, const std::string& what) {
  r.instances++;
  if (!ok) {
    r.mismatches++;
    if (r.notes.size() < 5) r.notes.push_back(what);
  }
}

Subspace dot_perp(const FieldCtx& ctx, const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient());
  return Subspace::from_rows(ctx, s.ambient(), kernel_basis(ctx, s.basis()));
}

// All vectors of the subspace with coefficients drawn from `sub`; for a
// basis over F_t and sub = Ft this walks the F_t-span.
std::vector<std::vector<Fe>> enumerate_span(const FieldCtx& ctx, const Subspace& s,
                                            Subfield sub) {
  PointDomain coeffs(ctx, sub, s.dim());
  std::vector<std::vector<Fe>> out;
  out.reserve(coeffs.size());
  std::vector<Fe> c(s.dim());
  for (std::int64_t i = 0; i < coeffs.size(); ++i) {
    coeffs.decode(i, c);
    std::vector<Fe> v(s.ambient(), Fe{0});
    for (int row = 0; row < s.dim(); ++row) {
      if (c[row].code == 0) continue;
      for (int col = 0; col < s.ambient(); ++col)
        v[col] = ctx.add(v[col], ctx.mul(c[row], s.basis().at(row, col)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<QuadHermForm> rank_variants(const FieldCtx& ctx, int rho,
                                        int random_variants, std::uint64_t seed) {
  const int n = ctx.spec().N;
  std::vector<QuadHermForm> out;
  out.push_back(quadform::standard_form(ctx, n, rho));
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(rho) << 32));
  const HermitianForm base = out.front().hermitian_form();
  for (int i = 0; i < random_variants; ++i) {
    const Mat p = random_invertible(ctx, n, rng);
    out.emplace_back(ctx, change_basis(ctx, base, p));
  }
  return out;
}

CheckResult sweep_exponential_sum(const FieldCtx& ctx, int random_variants,
                                  std::uint64_t seed, int threads) {
  CheckResult r{"exponential-sum-closed-form", 0, 0, {}};
  const int n = ctx.spec().N;
  PointDomain vdom(ctx, Subfield::Ft, 2 * n);
  std::vector<Fe> v(2 * n);
  std::int64_t inside = 0, outside = 0;
  for (int rho = 1; rho <= n; ++rho) {
    for (const auto& q : rank_variants(ctx, rho, random_variants, seed)) {
      const FormTable table = FormTable::build(ctx, q);
      for (std::int64_t vi = 0; vi < vdom.size(); ++vi) {
        vdom.decode(vi, v);
        for (Fe a : ctx.elements(Subfield::Fs)) {
          if (a.code == 0) continue;
          const auto closed = counting::closed_sum(ctx, q, v, a);
          const auto brute = (threads > 1)
                                 ? counting::brute_sum_parallel(ctx, table, v, a, threads)
                                 : counting::brute_sum_serial(ctx, table, v, a);
          (closed.v_in_image ? inside : outside)++;
          record(r, closed.value == brute,
                 "rho=" + std::to_string(rho) + " v=" + vec_str(v) +
                     " a=" + std::to_string(a.code));
        }
      }
    }
  }
  r.notes.insert(r.notes.begin(), "branches: " + std::to_string(inside) + " in image, " +
                                      std::to_string(outside) + " outside");
  return r;
}

CheckResult sweep_trace_affine(const FieldCtx& ctx, int random_variants,
                               std::uint64_t seed, int threads) {
  CheckResult r{"trace-affine-count", 0, 0, {}};
  const int n = ctx.spec().N;
  PointDomain vdom(ctx, Subfield::Ft, 2 * n);
  std::vector<Fe> v(2 * n);
  for (int rho = 1; rho <= n; ++rho) {
    for (const auto& q : rank_variants(ctx, rho, random_variants, seed)) {
      for (std::int64_t vi = 0; vi < vdom.size(); ++vi) {
        vdom.decode(vi, v);
        const auto rep = counting::count_trace_affine(ctx, q, v, threads);
        record(r, rep.match,
               "rho=" + std::to_string(rho) + " v=" + vec_str(v) + " branch=" + rep.branch);
      }
    }
  }
  return r;
}

CheckResult sweep_trace_level(const FieldCtx& ctx, int random_variants,
                              std::uint64_t seed, int threads) {
  CheckResult r{"trace-level-count", 0, 0, {}};
  const int n = ctx.spec().N;
  for (int rho = 1; rho <= n; ++rho) {
    for (const auto& q : rank_variants(ctx, rho, random_variants, seed)) {
      for (Fe a : ctx.elements(Subfield::Fs)) {
        const auto rep = counting::count_trace_level(ctx, q, a, threads);
        record(r, rep.match,
               "rho=" + std::to_string(rho) + " a=" + std::to_string(a.code));
      }
    }
  }
  return r;
}

CheckResult sweep_linear_char_sum(const FieldCtx& ctx) {
  CheckResult r{"linear-character-sum", 0, 0, {}};
  const int p = static_cast<int>(ctx.p());
  for (int m = 1; m <= 2; ++m) {
    PointDomain ldom(ctx, Subfield::Ft, m);
    std::vector<Fe> l(m);
    for (std::int64_t li = 0; li < ldom.size(); ++li) {
      ldom.decode(li, l);
      const CycInt sum = charsum::char_sum_linear(ctx, l);
      const CycInt expect =
          (li == 0) ? CycInt::integer(p, gf::ipow(ctx.t(), m)) : CycInt(p);
      record(r, sum == expect, "m=" + std::to_string(m) + " l=" + vec_str(l));
    }
  }
  return r;
}

std::vector<CheckResult> structure_suite(const FieldCtx& ctx, bool exhaustive,
                                         int random_samples, std::uint64_t seed) {
  const int p = static_cast<int>(ctx.p());
  const std::int64_t s = ctx.s();
  const std::int64_t t = ctx.t();
  std::mt19937_64 rng(seed);

  std::vector<HermitianForm> forms;
  for (int n = 1; n <= 2; ++n) {
    if (exhaustive) {
      auto all = all_hermitian_forms(ctx, n);
      forms.insert(forms.end(), all.begin(), all.end());
    } else {
      for (int rho = 0; rho <= n; ++rho) {
        std::vector<Fe> d(n, Fe{0});
        for (int i = 0; i < rho; ++i) d[i] = Fe{1};
        forms.push_back(HermitianForm::diagonal(ctx, d));
      }
      for (int i = 0; i < random_samples; ++i) forms.push_back(random_hermitian(ctx, n, rng));
    }
  }

  CheckResult polarization{"polarization-roundtrip", 0, 0, {}};
  CheckResult ortho{"orthogonal-basis", 0, 0, {}};
  CheckResult descent{"rank-descent", 0, 0, {}};
  CheckResult endo{"t-endomorphism", 0, 0, {}};
  CheckResult fibers{"norm-fibers", 0, 0, {}};
  CheckResult normsum{"norm-character-sum", 0, 0, {}};
  CheckResult orth1{"character-orthogonality-1", 0, 0, {}};
  CheckResult orth2{"character-orthogonality-2", 0, 0, {}};
  CheckResult chcount{"counting-via-characters", 0, 0, {}};
  CheckResult welldef{"fiber-well-defined", 0, 0, {}};
  CheckResult scaling{"scaling-law", 0, 0, {}};
  CheckResult consistency{"affine-level-consistency", 0, 0, {}};
  CheckResult parseval{"parseval-vanishing", 0, 0, {}};

  for (const auto& h : forms) {
    const int n = h.dim();
    const std::string tag = "n=" + std::to_string(n);

    {  // polarization: rebuild H from x -> H(x,x)
      auto q = [&](std::span<const Fe> x) { return hermitian::eval(ctx, h, x, x); };
      bool ok = true;
      try {
        ok = (hermitian::polar_form(ctx, n, q) == h);
      } catch (const std::exception&) {
        ok = false;
      }
      record(polarization, ok, tag);
    }

    {  // orthogonal basis: P*MP = diag(1..1,0..0) with rank-many ones
      const auto og = orthogonalize(ctx, h);
      const auto [kernel, rk] = kernel_rank(ctx, h);
      bool ok = (og.rank == rk) && inverse(ctx, og.basis).has_value();
      const Mat d = mul(ctx, conj_transpose(ctx, og.basis), mul(ctx, h.matrix(), og.basis));
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          const Fe want = (i == j && i < og.rank) ? Fe{1} : Fe{0};
          if (d.at(i, j) != want) ok = false;
        }
      record(ortho, ok, tag);
    }

    std::optional<QuadHermForm> q_opt;
    try {
      q_opt.emplace(ctx, h);
    } catch (const std::exception&) {
      record(descent, false, tag + " construction");
      continue;
    }
    const QuadHermForm& q = *q_opt;

    {  // rank(B) = 2 rank(H) and iota(Ker B) = Ker H
      const auto [ker_h, rk] = kernel_rank(ctx, h);
      const Subspace ker_b = quadform::kernel_b(ctx, q);
      bool ok = (rank(ctx, q.b_matrix()) == 2 * rk) && (ker_b.dim() == 2 * ker_h.dim());
      if (ok) {
        for (const auto& u : enumerate_span(ctx, ker_b, Subfield::Ft)) {
          if (!ker_h.contains(ctx, quadform::iota(ctx, u))) {
            ok = false;
            break;
          }
        }
        for (const auto& w : ker_h.enumerate(ctx)) {
          if (!ok) break;
          if (!ker_b.contains(ctx, quadform::iota_inv(ctx, w))) ok = false;
        }
      }
      record(descent, ok, tag);
    }

    {  // Im T = (Ker B)-perp and Ker T inside f^{-1}(0)
      const Subspace ker_b = quadform::kernel_b(ctx, q);
      bool ok = (quadform::image_t(ctx, q) == dot_perp(ctx, ker_b));
      for (const auto& u : enumerate_span(ctx, ker_b, Subfield::Ft)) {
        if (!ok) break;
        if (quadform::eval(ctx, q, u).code != 0) ok = false;
      }
      record(endo, ok, tag);
    }

    {  // T-fibers carry a single f value
      PointDomain dom(ctx, Subfield::Ft, 2 * n);
      std::vector<Fe> x(2 * n);
      std::map<std::int64_t, Fe> value_at_image;
      bool ok = true;
      for (std::int64_t i = 0; i < dom.size(); ++i) {
        dom.decode(i, x);
        const auto tx = mat_vec(ctx, q.b_matrix(), x);
        const std::int64_t key = dom.index_of(ctx, tx);
        const Fe fx = quadform::eval(ctx, q, x);
        auto [it, inserted] = value_at_image.emplace(key, fx);
        if (!inserted && it->second != fx) ok = false;
      }
      record(welldef, ok, tag);
    }

    {  // T_a = a T for a in F_s*
      for (Fe a : ctx.elements(Subfield::Fs)) {
        if (a.code == 0) continue;
        const QuadHermForm qa(ctx, HermitianForm(ctx, scale(ctx, a, h.matrix())));
        record(scaling, qa.b_matrix() == scale(ctx, a, q.b_matrix()),
               tag + " a=" + std::to_string(a.code));
      }
    }

    if (q.rho() >= 1) {  // level theorem at a = 0 agrees with the affine theorem
      const std::vector<Fe> zero(2 * n, Fe{0});
      const auto affine = counting::count_trace_affine(ctx, q, zero);
      const auto level = counting::count_trace_level(ctx, q, Fe{0});
      record(consistency,
             affine.match && level.match && affine.closed_form == level.closed_form, tag);
    }

    {  // S(f,v) conj(S(f,0)) = 0 for v outside (Ker B)-perp, sampled
      const Subspace perp = dot_perp(ctx, quadform::kernel_b(ctx, q));
      PointDomain dom(ctx, Subfield::Ft, 2 * n);
      const FormTable table = FormTable::build(ctx, q);
      const std::vector<Fe> zero(2 * n, Fe{0});
      const CycInt s0 = counting::brute_sum_serial(ctx, table, zero, Fe{1});
      std::vector<Fe> v(2 * n);
      std::int64_t outside_seen = 0;
      for (std::int64_t i = 0; i < dom.size() && outside_seen < 12; ++i) {
        dom.decode(i, v);
        if (perp.contains(ctx, v)) continue;
        ++outside_seen;
        const CycInt sv = counting::brute_sum_serial(ctx, table, v, Fe{1});
        record(parseval, (sv * s0.galois_conj()).is_zero(), tag + " v=" + vec_str(v));
      }
    }
  }

  {  // norm fiber sizes over F_{t^2} -> F_t
    const std::int64_t expect = (t * t - 1) / (t - 1);
    for (Fe b : ctx.elements(Subfield::Ft)) {
      if (b.code == 0) continue;
      std::int64_t count = 0;
      for (Fe x : ctx.elements(Subfield::Ft2)) {
        if (x.code == 0) continue;
        if (ctx.norm(x, Subfield::Ft2, Subfield::Ft) == b) ++count;
      }
      record(fibers, count == expect, "b=" + std::to_string(b.code));
    }
  }

  for (int m = 1; m <= 2; ++m) {
    const CycInt sum = charsum::norm_char_sum(ctx, m);
    const CycInt expect = CycInt::integer(p, (t - gf::ipow(t, m)) / (t - 1));
    record(normsum, sum == expect, "m=" + std::to_string(m));
  }

  {  // orthogonality I over the characters x -> psi'(cx) of F_s
    for (Fe c : ctx.elements(Subfield::Fs)) {
      CycInt sum(p);
      for (Fe x : ctx.elements(Subfield::Fs))
        sum += charsum::psi(ctx, ctx.mul(c, x), Subfield::Fs);
      const CycInt expect = (c.code == 0) ? CycInt::integer(p, s) : CycInt(p);
      record(orth1, sum == expect, "char c=" + std::to_string(c.code));
    }
    for (Fe x : ctx.elements(Subfield::Fs)) {
      CycInt sum(p);
      for (Fe c : ctx.elements(Subfield::Fs))
        sum += charsum::psi(ctx, ctx.mul(c, x), Subfield::Fs);
      const CycInt expect = (x.code == 0) ? CycInt::integer(p, s) : CycInt(p);
      record(orth1, sum == expect, "point x=" + std::to_string(x.code));
    }
  }

  {  // orthogonality II, both dual forms
    for (Fe c : ctx.elements(Subfield::Fs)) {
      for (Fe d : ctx.elements(Subfield::Fs)) {
        CycInt sum(p);
        for (Fe x : ctx.elements(Subfield::Fs))
          sum += charsum::psi(ctx, ctx.mul(c, x), Subfield::Fs) *
                 charsum::psi(ctx, ctx.mul(d, x), Subfield::Fs).galois_conj();
        const CycInt expect = (c == d) ? CycInt::integer(p, s) : CycInt(p);
        record(orth2, sum == expect,
               "chars c=" + std::to_string(c.code) + " d=" + std::to_string(d.code));
      }
    }
    for (Fe x : ctx.elements(Subfield::Fs)) {
      for (Fe y : ctx.elements(Subfield::Fs)) {
        CycInt sum(p);
        for (Fe c : ctx.elements(Subfield::Fs))
          sum += charsum::psi(ctx, ctx.mul(c, x), Subfield::Fs) *
                 charsum::psi(ctx, ctx.mul(c, y), Subfield::Fs).galois_conj();
        const CycInt expect = (x == y) ? CycInt::integer(p, s) : CycInt(p);
        record(orth2, sum == expect,
               "points x=" + std::to_string(x.code) + " y=" + std::to_string(y.code));
      }
    }
  }

  {  // counting through the character group matches direct counting
    const auto& ft2 = ctx.elements(Subfield::Ft2);
    const auto trace_norm = [&](std::int64_t i) {
      return ctx.trace(ctx.norm(ft2[i], Subfield::Ft2, Subfield::Ft), Subfield::Ft,
                       Subfield::Fs);
    };
    for (Fe target : ctx.elements(Subfield::Fs)) {
      std::int64_t direct = 0;
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(ft2.size()); ++i)
        if (trace_norm(i) == target) ++direct;
      const std::int64_t via =
          charsum::count_via_characters(ctx, ft2.size(), trace_norm, target);
      record(chcount, via == direct, "trace-norm target=" + std::to_string(target.code));
    }
    const auto zero_map = [&](std::int64_t) { return Fe{0}; };
    record(chcount,
           charsum::count_via_characters(ctx, ft2.size(), zero_map, Fe{0}) ==
               static_cast<std::int64_t>(ft2.size()),
           "zero map target=0");
    bool all_zero_ok = true;
    for (Fe target : ctx.elements(Subfield::Fs)) {
      if (target.code == 0) continue;
      if (charsum::count_via_characters(ctx, ft2.size(), zero_map, target) != 0)
        all_zero_ok = false;
    }
    record(chcount, all_zero_ok, "zero map nonzero targets");
  }

  return {polarization, ortho,   descent,  endo,        fibers,      normsum, orth1,
          orth2,        chcount, welldef,  scaling,     consistency, parseval};
}

std::vector<CheckResult> run_all(const FieldCtx& ctx, int random_variants,
                                 std::uint64_t seed, int threads) {
  std::vector<CheckResult> out;
  out.push_back(sweep_exponential_sum(ctx, random_variants, seed, threads));
  out.push_back(sweep_trace_affine(ctx, random_variants, seed, threads));
  out.push_back(sweep_trace_level(ctx, random_variants, seed, threads));
  out.push_back(sweep_linear_char_sum(ctx));
  const bool exhaustive = ctx.t() <= 3;
  const auto structure = structure_suite(ctx, exhaustive, 6, seed);
  out.insert(out.end(), structure.begin(), structure.end());
  return out;
}

std::int64_t total_mismatches(const std::vector<CheckResult>& results) {
  std::int64_t total = 0;
  for (const auto& r : results) total += r.mismatches;
  return total;
}

}  // namespace hermicode::sweeps
