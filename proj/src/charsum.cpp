#include "hermicode/charsum.hpp"

#include <sstream>

namespace hermicode::charsum {

using gf::Fe;
using gf::FieldCtx;
using gf::Subfield;

CycInt CycInt::integer(int p, std::int64_t n) {
  CycInt r(p);
  r.c_[0] = n;
  return r;
}

CycInt CycInt::zeta_power(int p, std::int64_t k) {
  CycInt r(p);
  std::int64_t e = ((k % p) + p) % p;
  if (e < p - 1) {
    r.c_[e] = 1;
  } else {
    for (auto& c : r.c_) c = -1;  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  }
  return r;
}

CycInt CycInt::from_histogram(int p, std::span<const std::int64_t> counts) {
  if (static_cast<int>(counts.size()) != p)
    throw ArgumentError("histogram must have p buckets");
  CycInt r(p);
  for (int k = 0; k < p - 1; ++k) r.c_[k] = counts[k];
  const std::int64_t top = counts[p - 1];
  if (top != 0)
    for (auto& c : r.c_) c -= top;
  return r;
}

bool CycInt::is_zero() const {
  for (auto c : c_)
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return std::nullopt;
  return c_[0];
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (p_ != o.p_) throw ArgumentError("cyclotomic orders differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (p_ != o.p_) throw ArgumentError("cyclotomic orders differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t k) {
  for (auto& c : c_) c *= k;
  return *this;
}

CycInt operator*(const CycInt& x, const CycInt& y) {
  if (x.p_ != y.p_) throw ArgumentError("cyclotomic orders differ");
  const int p = x.p_;
  std::vector<std::int64_t> acc(p, 0);  // exponents mod p
  for (int i = 0; i < p - 1; ++i) {
    if (x.c_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (y.c_[j] == 0) continue;
      acc[(i + j) % p] += x.c_[i] * y.c_[j];
    }
  }
  return CycInt::from_histogram(p, acc);
}

CycInt CycInt::galois_conj() const {
  std::vector<std::int64_t> acc(p_, 0);
  for (int k = 0; k < p_ - 1; ++k) acc[(p_ - k) % p_] += c_[k];
  return from_histogram(p_, acc);
}

CycInt CycInt::divided_exact(std::int64_t d) const {
  CycInt r(p_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] % d != 0)
      throw CheckFailed("inexact division of cyclotomic integer by " + std::to_string(d));
    r.c_[k] = c_[k] / d;
  }
  return r;
}

std::string CycInt::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) os << ",";
    os << c_[k];
  }
  os << "]";
  return os.str();
}

CycInt psi(const FieldCtx& ctx, Fe x, Subfield field) {
  return CycInt::zeta_power(static_cast<int>(ctx.p()), ctx.trace_to_prime(x, field));
}

CycInt char_sum_linear(const FieldCtx& ctx, std::span<const Fe> l) {
  const int m = static_cast<int>(l.size());
  for (Fe c : l)
    if (!ctx.contains(Subfield::Ft, c)) throw ArgumentError("linear form not over F_t");
  gf::PointDomain dom(ctx, Subfield::Ft, m);
  std::vector<std::int64_t> hist(ctx.p(), 0);
  std::vector<Fe> y(m);
  for (std::int64_t i = 0; i < dom.size(); ++i) {
    dom.decode(i, y);
    Fe v = ctx.zero();
    for (int k = 0; k < m; ++k) v = ctx.add(v, ctx.mul(l[k], y[k]));
    hist[ctx.trace_to_prime(v, Subfield::Ft)]++;
  }
  return CycInt::from_histogram(static_cast<int>(ctx.p()), hist);
}

CycInt norm_char_sum(const FieldCtx& ctx, int m) {
  if (m != 1 && m != 2) throw ArgumentError("norm character sum supports m in {1,2}");
  const Subfield dom = (m == 1) ? Subfield::Ft : Subfield::Ft2;
  std::vector<std::int64_t> hist(ctx.p(), 0);
  for (Fe x : ctx.elements(dom)) {
    const Fe n = ctx.norm(x, dom, Subfield::Ft);
    hist[ctx.trace_to_prime(n, Subfield::Ft)]++;
  }
  return CycInt::from_histogram(static_cast<int>(ctx.p()), hist);
}

std::int64_t count_via_characters(const FieldCtx& ctx, std::int64_t domain_size,
                                  const std::function<gf::Fe(std::int64_t)>& eval,
                                  Fe target) {
  if (!ctx.contains(Subfield::Fs, target)) throw ArgumentError("target not in F_s");
  const int p = static_cast<int>(ctx.p());
  CycInt total(p);
  std::vector<Fe> values(domain_size);
  for (std::int64_t i = 0; i < domain_size; ++i) {
    values[i] = eval(i);
    if (!ctx.contains(Subfield::Fs, values[i]))
      throw ArgumentError("map value not in F_s");
  }
  for (Fe c : ctx.elements(Subfield::Fs)) {
    std::vector<std::int64_t> hist(p, 0);
    for (std::int64_t i = 0; i < domain_size; ++i) {
      const Fe z = ctx.mul(c, ctx.sub(values[i], target));
      hist[ctx.trace_to_prime(z, Subfield::Fs)]++;
    }
    total += CycInt::from_histogram(p, hist);
  }
  const auto n = total.divided_exact(ctx.s()).as_integer();
  if (!n) throw CheckFailed("character count is not an integer");
  return *n;
}

}  // namespace hermicode::charsum
