#include "hermicode/codes.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hermicode::codes {

using gf::Fe;
using gf::FieldCtx;
using gf::Subfield;
using la::Mat;

Rational Rational::make(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArgumentError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  return Rational{g ? n / g : n, g ? d / g : d};
}

Rational operator-(const Rational& x, const Rational& y) {
  return Rational::make(x.num * y.den - y.num * x.den, x.den * y.den);
}

const char* label_name(CodeLabel label) {
  return label == CodeLabel::Gamma ? "gamma" : "c";
}

std::vector<Mat> hermitian_basis(const FieldCtx& ctx, int n) {
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Mat m(n, n);
    m.at(i, i) = Fe{1};
    out.push_back(std::move(m));
  }
  const Fe alpha = ctx.alpha();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat sym(n, n);
      sym.at(i, j) = Fe{1};
      sym.at(j, i) = Fe{1};
      out.push_back(std::move(sym));
      Mat skew(n, n);
      skew.at(i, j) = alpha;
      skew.at(j, i) = ctx.conj(alpha);
      out.push_back(std::move(skew));
    }
  }
  return out;
}

std::vector<Fe> ft_over_fs_basis(const FieldCtx& ctx) {
  const int b = ctx.spec().b;
  std::vector<Fe> out(b);
  const Fe tau = ctx.subfield_generator(Subfield::Ft);
  Fe cur{1};
  for (int j = 0; j < b; ++j) {
    out[j] = cur;
    cur = ctx.mul(cur, tau);
  }
  return out;
}

namespace {

struct RowBuilder {
  const FieldCtx& ctx;
  gf::PointDomain domain;
  std::vector<std::uint32_t> trace_ts;

  explicit RowBuilder(const FieldCtx& c, int dims)
      : ctx(c), domain(c, Subfield::Ft, dims), trace_ts(c.t2(), 0) {
    for (Fe x : ctx.elements(Subfield::Ft))
      trace_ts[x.code] = ctx.trace(x, Subfield::Ft, Subfield::Fs).code;
  }

  void form_row(const quadform::QuadHermForm& q, std::span<Fe> out) const {
    std::vector<Fe> x(q.dim());
    for (std::int64_t i = 0; i < domain.size(); ++i) {
      domain.decode(i, x);
      out[i] = Fe{trace_ts[quadform::eval(ctx, q, x).code]};
    }
  }

  void point_row(Fe scale, int coord, std::span<Fe> out) const {
    std::vector<Fe> x(domain.dims());
    for (std::int64_t i = 0; i < domain.size(); ++i) {
      domain.decode(i, x);
      out[i] = Fe{trace_ts[ctx.mul(scale, x[coord]).code]};
    }
  }
};

void verify_basis_rank(const FieldCtx& ctx, const LinearCode& code) {
  if (rank(ctx, code.rows) != code.dimension)
    throw CheckFailed("generator rows are dependent; the defining map is not injective");
}

}  // namespace

LinearCode build_gamma(const FieldCtx& ctx) {
  const int n_dim = ctx.spec().N;
  const int b = ctx.spec().b;
  const std::int64_t length = gf::ipow(ctx.t(), 2 * n_dim);
  const int k = (n_dim * n_dim + 2 * n_dim) * b;

  LinearCode code{CodeLabel::Gamma, ctx.spec(), length, k, Mat(k, static_cast<int>(length))};
  RowBuilder rb(ctx, 2 * n_dim);
  const auto basis = hermitian_basis(ctx, n_dim);
  const auto taus = ft_over_fs_basis(ctx);

  int row = 0;
  std::vector<Fe> buf(length);
  for (const Mat& m : basis) {
    for (Fe tau : taus) {
      const quadform::QuadHermForm q(ctx, hermitian::HermitianForm(ctx, scale(ctx, tau, m)));
      rb.form_row(q, buf);
      for (std::int64_t i = 0; i < length; ++i) code.rows.at(row, static_cast<int>(i)) = buf[i];
      ++row;
    }
  }
  for (int coord = 0; coord < 2 * n_dim; ++coord) {
    for (Fe tau : taus) {
      rb.point_row(tau, coord, buf);
      for (std::int64_t i = 0; i < length; ++i) code.rows.at(row, static_cast<int>(i)) = buf[i];
      ++row;
    }
  }
  verify_basis_rank(ctx, code);
  return code;
}

LinearCode build_c(const FieldCtx& ctx) {
  const int n_dim = ctx.spec().N;
  const int b = ctx.spec().b;
  const std::int64_t length = gf::ipow(ctx.t(), 2 * n_dim);
  const int k = n_dim * n_dim * b + 1;

  LinearCode code{CodeLabel::C, ctx.spec(), length, k, Mat(k, static_cast<int>(length))};
  RowBuilder rb(ctx, 2 * n_dim);
  const auto basis = hermitian_basis(ctx, n_dim);
  const auto taus = ft_over_fs_basis(ctx);

  int row = 0;
  std::vector<Fe> buf(length);
  for (const Mat& m : basis) {
    for (Fe tau : taus) {
      const quadform::QuadHermForm q(ctx, hermitian::HermitianForm(ctx, scale(ctx, tau, m)));
      rb.form_row(q, buf);
      for (std::int64_t i = 0; i < length; ++i) code.rows.at(row, static_cast<int>(i)) = buf[i];
      ++row;
    }
  }
  for (std::int64_t i = 0; i < length; ++i) code.rows.at(row, static_cast<int>(i)) = Fe{1};
  verify_basis_rank(ctx, code);
  return code;
}

namespace {

struct Tally {
  const FieldCtx& ctx;
  const Mat& rows;
  const std::vector<Fe>& fs;
  std::int64_t n;
  int k;
  std::vector<std::vector<Fe>> buf;  // partial codewords per depth
  std::vector<std::int64_t> counts;

  Tally(const FieldCtx& c, const LinearCode& code)
      : ctx(c),
        rows(code.rows),
        fs(c.elements(Subfield::Fs)),
        n(code.length),
        k(code.dimension),
        buf(static_cast<std::size_t>(k) + 1, std::vector<Fe>(code.length, Fe{0})),
        counts(code.length + 1, 0) {}

  void child(int depth, Fe m) {
    const auto& parent = buf[depth];
    auto& out = buf[depth + 1];
    if (m.code == 0) {
      out = parent;
      return;
    }
    for (std::int64_t j = 0; j < n; ++j)
      out[j] = ctx.add(parent[j], ctx.mul(m, rows.at(depth, static_cast<int>(j))));
  }

  void run(int depth) {
    if (depth == k) {
      std::int64_t w = 0;
      for (Fe c : buf[depth])
        if (c.code != 0) ++w;
      counts[w]++;
      return;
    }
    for (Fe m : fs) {
      child(depth, m);
      run(depth + 1);
    }
  }
};

}  // namespace

std::vector<std::int64_t> weight_tally_serial(const FieldCtx& ctx, const LinearCode& code) {
  Tally t(ctx, code);
  t.run(0);
  return t.counts;
}

std::vector<std::int64_t> weight_tally_parallel(const FieldCtx& ctx, const LinearCode& code,
                                                int threads) {
#ifdef _OPENMP
  const std::int64_t s = ctx.s();
  int split = 0;
  std::int64_t blocks = 1;
  while (split < code.dimension && blocks < 4LL * threads) {
    blocks *= s;
    ++split;
  }
  std::vector<std::int64_t> counts(code.length + 1, 0);
  const auto& fs = ctx.elements(Subfield::Fs);
#pragma omp parallel num_threads(threads)
  {
    Tally t(ctx, code);
#pragma omp for schedule(static)
    for (std::int64_t block = 0; block < blocks; ++block) {
      std::int64_t rem = block;
      for (int depth = 0; depth < split; ++depth) {
        t.child(depth, fs[rem % s]);
        rem /= s;
      }
      t.run(split);
    }
#pragma omp critical
    for (std::size_t w = 0; w < counts.size(); ++w) counts[w] += t.counts[w];
  }
  return counts;
#else
  (void)threads;
  return weight_tally_serial(ctx, code);
#endif
}

CodeParams weight_distribution(const FieldCtx& ctx, const LinearCode& code,
                               std::int64_t budget, int threads) {
  const std::int64_t s = ctx.s();
  // s^K codewords of length n; refuse rather than sample.
  long double work = 1.0L;
  for (int i = 0; i < code.dimension; ++i) work *= static_cast<long double>(s);
  work *= static_cast<long double>(code.length);
  if (work > static_cast<long double>(budget)) {
    std::string amount = (work < 1e18L)
                             ? std::to_string(static_cast<std::int64_t>(work))
                             : "more than 1e18";
    throw BudgetExceeded("enumeration needs " + amount +
                         " codeword symbols, budget is " + std::to_string(budget));
  }

  const auto counts = (threads > 1) ? weight_tally_parallel(ctx, code, threads)
                                    : weight_tally_serial(ctx, code);

  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total != gf::ipow(s, code.dimension))
    throw CheckFailed("codeword census does not match s^K");
  if (counts[0] != 1)
    throw CheckFailed("zero codeword is not unique; the defining map is not injective");

  const int n_dim = ctx.spec().N;
  const std::int64_t t2n = gf::ipow(ctx.t(), 2 * n_dim);
  const std::int64_t tlow = gf::ipow(ctx.t(), 2 * n_dim - 1);
  if ((t2n + tlow) % s != 0 || (t2n - (s - 1) * tlow) % s != 0)
    throw CheckFailed("weight bound formulas are not integral");

  CodeParams out;
  out.label = label_name(code.label);
  out.n = code.length;
  out.k = code.dimension;
  out.bound_lower = t2n - (t2n + tlow) / s;
  out.bound_upper =
      (code.label == CodeLabel::Gamma) ? t2n - (t2n - (s - 1) * tlow) / s : t2n;

  std::int64_t dmin = -1, wmax = -1;
  for (std::int64_t w = 0; w <= code.length; ++w) {
    if (counts[w] == 0) continue;
    out.weight_distribution[w] = counts[w];
    if (w > 0) {
      if (dmin < 0) dmin = w;
      wmax = w;
      if (w < out.bound_lower || w > out.bound_upper)
        throw CheckFailed("codeword weight " + std::to_string(w) +
                          " escapes the theorem bounds");
    }
  }
  out.d_min = dmin;
  out.w_max = wmax;
  out.disparity = Rational::make(wmax, dmin);
  out.lambda = Rational::make(code.dimension + dmin, code.length);
  out.lower_attained = (dmin == out.bound_lower);
  out.upper_attained = (wmax == out.bound_upper);
  return out;
}

CodeParams rm_params(int n_dim, std::int64_t t) {
  if (t <= 2) throw ConfigError("order-2 Reed-Muller parameters need t > 2");
  const std::int64_t t2n = gf::ipow(t, 2 * n_dim);
  const std::int64_t k = 2LL * n_dim * n_dim + 3LL * n_dim + 1;
  const std::int64_t binom = (2LL * n_dim + 2) * (2LL * n_dim + 1) / 2;
  if (k != binom) throw CheckFailed("Reed-Muller dimension formulas disagree");
  CodeParams out;
  out.label = "reed_muller";
  out.n = t2n;
  out.k = static_cast<int>(k);
  out.d_min = t2n - 2 * gf::ipow(t, 2 * n_dim - 1);
  out.lambda = Rational::make(k + out.d_min, t2n);
  return out;
}

Comparison compare(const CodeParams& p, const CodeParams& q) {
  if (p.n != q.n) throw ArgumentError("comparison requires equal lengths");
  Comparison c;
  c.label_p = p.label;
  c.label_q = q.label;
  c.n = p.n;
  c.rate_p = Rational::make(p.k, p.n);
  c.rate_q = Rational::make(q.k, q.n);
  c.reliability_p = Rational::make(p.d_min, p.n);
  c.reliability_q = Rational::make(q.d_min, q.n);
  c.lambda_p = p.lambda;
  c.lambda_q = q.lambda;
  c.d_diff = p.d_min - q.d_min;
  c.rate_diff = c.rate_p - c.rate_q;
  c.lambda_diff = c.lambda_p - c.lambda_q;
  return c;
}

bool RmIdentities::all_ok() const {
  return applicable && d_gamma_ok && d_c_ok && rate_ok && lambda_ok && lambda_sign_ok;
}

RmIdentities check_rm_identities(const FieldCtx& ctx, const CodeParams& gamma,
                                 const CodeParams& c, const CodeParams& rm) {
  RmIdentities out;
  const std::int64_t t = ctx.t();
  if (ctx.s() != t) return out;
  out.applicable = true;
  const int n_dim = ctx.spec().N;
  const std::int64_t hi = gf::ipow(t, 2 * n_dim - 1);
  const std::int64_t lo = gf::ipow(t, 2 * n_dim - 2);

  out.d_gamma_ok = (gamma.d_min - rm.d_min) == hi - lo;
  out.d_c_ok = (c.d_min - rm.d_min) == lo * (t - 1);
  const Rational rate_gap = Rational::make(rm.k, rm.n) - Rational::make(gamma.k, gamma.n);
  out.rate_ok =
      rate_gap == Rational::make(static_cast<std::int64_t>(n_dim) * n_dim + n_dim + 1,
                                 gf::ipow(t, 2 * n_dim));
  const Rational lambda_gap = gamma.lambda - rm.lambda;
  out.lambda_ok = lambda_gap == Rational::make(
                                    hi - lo - (static_cast<std::int64_t>(n_dim) * n_dim +
                                               n_dim + 1),
                                    gf::ipow(t, 2 * n_dim));
  const bool nonneg = lambda_gap.num >= 0;
  out.lambda_sign_ok = (n_dim >= 2 || t >= 4) ? nonneg : true;
  return out;
}

}  // namespace hermicode::codes
