#include "hermicode/gf.hpp"

#include <algorithm>
#include <numeric>

namespace hermicode::gf {

namespace {

constexpr std::int64_t kMaxFieldSize = 1 << 20;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense little-endian polynomials over F_p, used only while the context
// is being built.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

bool poly_divides(const Poly& d, Poly f, int p) {
  const int dd = poly_deg(d);
  for (int i = poly_deg(f); i >= dd; --i) {
    if (f[i] == 0) continue;
    // divisor is monic
    const int c = f[i];
    for (int j = 0; j <= dd; ++j)
      f[i - dd + j] = ((f[i - dd + j] - c * d[j]) % p + p) % p;
  }
  return poly_deg(f) < 0;
}

bool poly_irreducible(const Poly& f, int p) {
  const int d = poly_deg(f);
  if (d < 1) return false;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int dd = 1; dd <= d / 2; ++dd) {
    std::int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::int64_t low = 0; low < count; ++low) {
      Poly div(dd + 1, 0);
      std::int64_t rem = low;
      for (int i = 0; i < dd; ++i) {
        div[i] = static_cast<int>(rem % p);
        rem /= p;
      }
      div[dd] = 1;
      if (poly_divides(div, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

const char* subfield_name(Subfield sub) {
  switch (sub) {
    case Subfield::Fp: return "Fp";
    case Subfield::Fs: return "Fs";
    case Subfield::Ft: return "Ft";
    case Subfield::Ft2: return "Ft2";
  }
  return "?";
}

void TowerSpec::validate() const {
  if (p < 3) throw ConfigError("characteristic must be an odd prime >= 3");
  if (p % 2 == 0 || !is_prime(p))
    throw ConfigError("characteristic " + std::to_string(p) + " is not an odd prime");
  if (a < 1 || b < 1) throw ConfigError("extension exponents a, b must be >= 1");
  if (N < 1) throw ConfigError("dimension N must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < 2 * a * b; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw ConfigError("tower too large: p^(2ab) exceeds " + std::to_string(kMaxFieldSize));
  }
}

std::int64_t TowerSpec::s() const { return ipow(p, a); }
std::int64_t TowerSpec::t() const { return ipow(p, a * b); }
std::int64_t TowerSpec::t2() const { return ipow(p, 2 * a * b); }
int TowerSpec::degree() const { return 2 * a * b; }

FieldCtx::FieldCtx(TowerSpec spec) : spec_(spec) {
  spec_.validate();
  deg_ = spec_.degree();
  q_ = spec_.t2();
  find_modulus();
  build_tables();
}

void FieldCtx::find_modulus() {
  const int p = spec_.p;
  // Deterministic choice: the monic irreducible of degree 2ab minimizing
  // the packed integer of its non-leading coefficients.
  const std::int64_t count = q_;
  for (std::int64_t low = 0; low < count; ++low) {
    Poly f(deg_ + 1, 0);
    std::int64_t rem = low;
    for (int i = 0; i < deg_; ++i) {
      f[i] = static_cast<int>(rem % p);
      rem /= p;
    }
    f[deg_] = 1;
    if (poly_irreducible(f, p)) {
      modulus_ = f;
      return;
    }
  }
  throw ConfigError("no irreducible modulus found");  // unreachable
}

Fe FieldCtx::mul_raw(Fe x, Fe y) const {
  const int p = spec_.p;
  int xd[32], yd[32];
  long long prod[64] = {};
  std::uint32_t xa = x.code, ya = y.code;
  for (int i = 0; i < deg_; ++i) {
    xd[i] = static_cast<int>(xa % p);
    yd[i] = static_cast<int>(ya % p);
    xa /= p;
    ya /= p;
  }
  for (int i = 0; i < deg_; ++i) {
    if (!xd[i]) continue;
    for (int j = 0; j < deg_; ++j) prod[i + j] += static_cast<long long>(xd[i]) * yd[j];
  }
  for (int i = 2 * deg_ - 2; i >= deg_; --i) {
    const long long c = ((prod[i] % p) + p) % p;
    if (!c) continue;
    for (int j = 0; j <= deg_; ++j) prod[i - deg_ + j] -= c * modulus_[j];
  }
  std::uint32_t r = 0, pw = 1;
  for (int i = 0; i < deg_; ++i) {
    r += static_cast<std::uint32_t>(((prod[i] % p) + p) % p) * pw;
    pw *= p;
  }
  return Fe{r};
}

Fe FieldCtx::pow_raw(Fe x, std::int64_t k) const {
  Fe r{1}, base = x;
  while (k > 0) {
    if (k & 1) r = mul_raw(r, base);
    base = mul_raw(base, base);
    k >>= 1;
  }
  return r;
}

void FieldCtx::build_tables() {
  const std::int64_t qm1 = q_ - 1;

  // Multiplicative generator: least encoding with full order.
  const auto factors = prime_factors(qm1);
  g_ = Fe{0};
  for (std::int64_t e = 2; e < q_; ++e) {
    Fe cand{static_cast<std::uint32_t>(e)};
    bool ok = true;
    for (auto r : factors) {
      if (pow_raw(cand, qm1 / r).code == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g_ = cand;
      break;
    }
  }
  if (g_.code == 0) throw ConfigError("no generator found");  // unreachable

  exp_.assign(qm1, 0);
  dlog_.assign(q_, 0);
  Fe cur{1};
  for (std::int64_t i = 0; i < qm1; ++i) {
    exp_[i] = cur.code;
    dlog_[cur.code] = static_cast<std::uint32_t>(i);
    cur = mul_raw(cur, g_);
  }
  if (cur.code != 1) throw ConfigError("generator order check failed");

  // Subfield layout: degrees over F_p and enumeration step in dlog space.
  degrees_[0] = 1;
  degrees_[1] = spec_.a;
  degrees_[2] = spec_.a * spec_.b;
  degrees_[3] = deg_;
  for (int i = 0; i < 4; ++i) {
    orders_[i] = ipow(spec_.p, degrees_[i]);
    steps_[i] = qm1 / (orders_[i] - 1);
  }

  inv_.assign(q_, 0);
  neg_.assign(q_, 0);
  conj_.assign(q_, 0);
  frob_.assign(q_, 0);
  const std::int64_t t = spec_.t();
  for (std::int64_t e = 1; e < q_; ++e) {
    const std::int64_t d = dlog_[e];
    inv_[e] = exp_[(qm1 - d) % qm1];
    conj_[e] = exp_[(d * (t % qm1)) % qm1];
    frob_[e] = exp_[(d * (spec_.p % qm1)) % qm1];
  }
  const Fe minus_one = from_int(-1);
  for (std::int64_t e = 0; e < q_; ++e)
    neg_[e] = mul(Fe{static_cast<std::uint32_t>(e)}, minus_one).code;

  // Zech logarithms: zech_[k] = dlog(1 + g^k), with a sentinel at the
  // exponent of -1 where the sum vanishes.
  minus_one_log_ = dlog_[minus_one.code];
  zech_.assign(qm1, 0);
  for (std::int64_t k = 0; k < qm1; ++k) {
    const Fe v = add_raw(Fe{1}, Fe{exp_[k]});
    zech_[k] = v.code ? dlog_[v.code] : 0;
  }

  // alpha: least encoding outside F_t.
  alpha_ = Fe{0};
  for (std::int64_t e = 1; e < q_; ++e) {
    if (dlog_[e] % steps_[2] != 0) {
      alpha_ = Fe{static_cast<std::uint32_t>(e)};
      break;
    }
  }
  if (alpha_.code == 0) throw ConfigError("no element outside F_t");  // unreachable

  for (int i = 0; i < 4; ++i) {
    elements_[i].clear();
    elements_[i].reserve(orders_[i]);
    elements_[i].push_back(Fe{0});
    index_[i].assign(q_, -1);
    index_[i][0] = 0;
    const Fe gen{exp_[steps_[i] % qm1]};
    Fe x{1};
    for (std::int64_t k = 0; k < orders_[i] - 1; ++k) {
      index_[i][x.code] = static_cast<std::int32_t>(elements_[i].size());
      elements_[i].push_back(x);
      x = mul(x, gen);
    }
  }

  for (int i = 0; i < 4; ++i) {
    trace_p_[i].assign(q_, -1);
    const auto sub = static_cast<Subfield>(i);
    for (Fe x : elements_[i]) {
      Fe tr = trace(x, sub, Subfield::Fp);
      trace_p_[i][x.code] = static_cast<std::int32_t>(tr.code);
    }
  }

  split_.assign(q_, {0, 0});
  for (Fe u : elements_[2]) {
    for (Fe v : elements_[2]) {
      const Fe x = add(u, mul(v, alpha_));
      split_[x.code] = {u.code, v.code};
    }
  }
}

Fe FieldCtx::from_code(std::int64_t code) const {
  if (code < 0 || code >= q_)
    throw ArgumentError("element encoding " + std::to_string(code) + " out of range");
  return Fe{static_cast<std::uint32_t>(code)};
}

Fe FieldCtx::from_int(std::int64_t n) const {
  const std::int64_t p = spec_.p;
  return Fe{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::vector<int> FieldCtx::coeffs(Fe x) const {
  std::vector<int> out(deg_);
  std::uint32_t e = x.code;
  for (int i = 0; i < deg_; ++i) {
    out[i] = static_cast<int>(e % spec_.p);
    e /= spec_.p;
  }
  return out;
}

Fe FieldCtx::add_raw(Fe x, Fe y) const {
  const std::uint32_t p = static_cast<std::uint32_t>(spec_.p);
  std::uint32_t xa = x.code, ya = y.code, r = 0, pw = 1;
  for (int i = 0; i < deg_; ++i) {
    std::uint32_t d = xa % p + ya % p;
    if (d >= p) d -= p;
    r += d * pw;
    xa /= p;
    ya /= p;
    pw *= p;
  }
  return Fe{r};
}

Fe FieldCtx::add(Fe x, Fe y) const {
  if (x.code == 0) return y;
  if (y.code == 0) return x;
  const std::int64_t qm1 = q_ - 1;
  const std::int64_t dx = dlog_[x.code], dy = dlog_[y.code];
  std::int64_t k = dy - dx;
  if (k < 0) k += qm1;
  if (k == minus_one_log_) return Fe{0};  // y = -x
  std::int64_t e = dx + zech_[k];
  if (e >= qm1) e -= qm1;
  return Fe{exp_[e]};
}

Fe FieldCtx::sub(Fe x, Fe y) const { return add(x, neg(y)); }

Fe FieldCtx::mul(Fe x, Fe y) const {
  if (x.code == 0 || y.code == 0) return Fe{0};
  std::uint64_t e = static_cast<std::uint64_t>(dlog_[x.code]) + dlog_[y.code];
  const std::uint64_t qm1 = static_cast<std::uint64_t>(q_ - 1);
  if (e >= qm1) e -= qm1;
  return Fe{exp_[e]};
}

Fe FieldCtx::inv(Fe x) const {
  if (x.code == 0) throw ZeroDivide("inverse of zero");
  return Fe{inv_[x.code]};
}

Fe FieldCtx::pow(Fe x, std::int64_t k) const {
  const std::int64_t qm1 = q_ - 1;
  if (x.code == 0) {
    if (k > 0) return Fe{0};
    if (k == 0) return Fe{1};
    throw ZeroDivide("negative power of zero");
  }
  std::int64_t e = ((k % qm1) + qm1) % qm1;
  return Fe{exp_[(static_cast<std::int64_t>(dlog_[x.code]) * e) % qm1]};
}

std::int64_t FieldCtx::order(Subfield sub) const { return orders_[tag_index(sub)]; }
int FieldCtx::subfield_degree(Subfield sub) const { return degrees_[tag_index(sub)]; }

bool FieldCtx::contains(Subfield sub, Fe x) const {
  if (x.code == 0) return true;
  return dlog_[x.code] % steps_[tag_index(sub)] == 0;
}

Fe FieldCtx::trace(Fe x, Subfield from, Subfield to) const {
  const int df = subfield_degree(from), dt = subfield_degree(to);
  if (df % dt != 0)
    throw ArgumentError(std::string("trace target ") + subfield_name(to) +
                        " is not a subfield of " + subfield_name(from));
  if (!contains(from, x))
    throw ArgumentError(std::string("element not in ") + subfield_name(from));
  Fe acc = x, y = x;
  for (int i = 1; i < df / dt; ++i) {
    for (int j = 0; j < dt; ++j) y = frobenius(y);
    acc = add(acc, y);
  }
  return acc;
}

Fe FieldCtx::norm(Fe x, Subfield from, Subfield to) const {
  const int df = subfield_degree(from), dt = subfield_degree(to);
  if (df % dt != 0)
    throw ArgumentError(std::string("norm target ") + subfield_name(to) +
                        " is not a subfield of " + subfield_name(from));
  if (!contains(from, x))
    throw ArgumentError(std::string("element not in ") + subfield_name(from));
  if (x.code == 0) return Fe{0};
  const std::int64_t e = (ipow(spec_.p, df) - 1) / (ipow(spec_.p, dt) - 1);
  return pow(x, e);
}

int FieldCtx::trace_to_prime(Fe x, Subfield from) const {
  const std::int32_t v = trace_p_[tag_index(from)][x.code];
  if (v < 0) throw ArgumentError(std::string("element not in ") + subfield_name(from));
  return static_cast<int>(v);
}

Fe FieldCtx::norm_preimage(Fe b) const {
  if (b.code == 0) throw ArgumentError("norm preimage of zero");
  if (!contains(Subfield::Ft, b)) throw ArgumentError("norm preimage target not in F_t");
  const std::int64_t qm1 = q_ - 1;
  const std::int64_t e = (spec_.t() + 1) % qm1;
  const std::int64_t target = dlog_[b.code];
  for (std::int64_t cand = 1; cand < q_; ++cand) {
    if ((static_cast<std::int64_t>(dlog_[cand]) * e) % qm1 == target)
      return Fe{static_cast<std::uint32_t>(cand)};
  }
  throw CheckFailed("norm is not surjective");  // unreachable by Lemma on fibers
}

const std::vector<Fe>& FieldCtx::elements(Subfield sub) const {
  return elements_[tag_index(sub)];
}

std::int64_t FieldCtx::index_of(Fe x, Subfield sub) const {
  const std::int32_t i = index_[tag_index(sub)][x.code];
  if (i < 0) throw ArgumentError(std::string("element not in ") + subfield_name(sub));
  return i;
}

Fe FieldCtx::subfield_generator(Subfield sub) const {
  return Fe{exp_[steps_[tag_index(sub)] % (q_ - 1)]};
}

std::pair<Fe, Fe> FieldCtx::split(Fe x) const {
  const auto& [u, v] = split_[x.code];
  return {Fe{u}, Fe{v}};
}

Fe FieldCtx::combine(Fe u, Fe v) const {
  if (!contains(Subfield::Ft, u) || !contains(Subfield::Ft, v))
    throw ArgumentError("combine parts must lie in F_t");
  return add(u, mul(v, alpha_));
}

PointDomain::PointDomain(const FieldCtx& ctx, Subfield sub, int dims)
    : elems_(&ctx.elements(sub)), sub_(sub), dims_(dims) {
  if (dims < 0) throw ArgumentError("negative dimension");
  radix_ = static_cast<std::int64_t>(elems_->size());
  size_ = 1;
  for (int i = 0; i < dims; ++i) size_ *= radix_;
}

void PointDomain::decode(std::int64_t index, std::span<Fe> out) const {
  for (int k = 0; k < dims_; ++k) {
    out[k] = (*elems_)[index % radix_];
    index /= radix_;
  }
}

std::vector<Fe> PointDomain::point(std::int64_t index) const {
  std::vector<Fe> out(dims_);
  decode(index, out);
  return out;
}

std::int64_t PointDomain::index_of(const FieldCtx& ctx, std::span<const Fe> x) const {
  std::int64_t idx = 0;
  for (int k = dims_ - 1; k >= 0; --k) idx = idx * radix_ + ctx.index_of(x[k], sub_);
  return idx;
}

}  // namespace hermicode::gf
