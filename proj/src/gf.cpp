#include "sdcyc/gf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sdcyc {

namespace {

std::uint64_t f2_mod(std::uint64_t a, std::uint64_t b) {
  const int db = f2_degree(b);
  for (int da = f2_degree(a); da >= db; da = f2_degree(a)) a ^= b << (da - db);
  return a;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

int f2_degree(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

bool is_irreducible_f2(std::uint64_t poly) {
  const int d = f2_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t g = 2; f2_degree(g) <= d / 2; ++g) {
    if (f2_mod(poly, g) == 0) return false;
  }
  return true;
}

std::uint64_t FieldCtx::default_modulus(unsigned m) {
  switch (m) {
    case 1: return 0x3;
    case 2: return 0x7;
    case 3: return 0xB;
    case 4: return 0x13;
    default: break;
  }
  if (m == 0 || m > kMaxM) fail(ErrorKind::OutOfRange, "field degree m must be in 1.." + std::to_string(kMaxM));
  for (std::uint64_t p = (1ull << m) | 1; p < (2ull << m); p += 2) {
    if (is_irreducible_f2(p)) return p;
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FieldCtx::FieldCtx(unsigned m) : FieldCtx(m, default_modulus(m)) {}

FieldCtx::FieldCtx(unsigned m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
  if (m == 0 || m > kMaxM) fail(ErrorKind::OutOfRange, "field degree m must be in 1.." + std::to_string(kMaxM));
  if (f2_degree(modulus) != static_cast<int>(m)) fail(ErrorKind::InvalidArgument, "modulus degree differs from m");
  if (!is_irreducible_f2(modulus)) fail(ErrorKind::InvalidArgument, "modulus is not irreducible over F_2");

  const std::uint32_t order = (1u << m) - 1;
  std::vector<std::uint64_t> primes = prime_factors(order);
  auto pow_clmul = [this](Fq a, std::uint64_t e) {
    Fq r = 1;
    while (e) {
      if (e & 1) r = mul_clmul(r, a);
      a = mul_clmul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Fq g = 1; g <= order; ++g) {
    bool ok = true;
    for (std::uint64_t p : primes) ok = ok && pow_clmul(g, order / p) != 1;
    if (ok) {
      generator_ = g;
      break;
    }
  }

  auto t = std::make_shared<Tables>();
  t->log.assign(size(), 0);
  t->exp.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  Fq acc = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    t->exp[i] = acc;
    t->exp[i + order] = acc;
    t->log[acc] = i;
    acc = mul_clmul(acc, generator_);
  }
  t->exp[2 * static_cast<std::size_t>(order)] = 1;
  tables_ = std::move(t);
}

Fq FieldCtx::mul_clmul(Fq a, Fq b) const {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if ((b >> i) & 1u) r ^= static_cast<std::uint64_t>(a) << i;
  }
  for (int d = f2_degree(r); d >= static_cast<int>(m_); d = f2_degree(r)) r ^= modulus_ << (d - m_);
  return static_cast<Fq>(r);
}

Fq FieldCtx::mul(Fq a, Fq b) const {
  if (a == 0 || b == 0) return 0;
  return tables_->exp[tables_->log[a] + tables_->log[b]];
}

Fq FieldCtx::inv(Fq a) const {
  if (a == 0) fail(ErrorKind::ZeroInverse, "inverse of zero in F_{2^m}");
  const std::uint32_t order = size() - 1;
  return tables_->exp[(order - tables_->log[a]) % order];
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size() - 1;
  return tables_->exp[(tables_->log[a] * (e % order)) % order];
}

Poly Poly::monomial(std::size_t deg, Fq a) {
  std::vector<Fq> c(deg + 1, 0);
  c[deg] = a;
  return Poly(std::move(c));
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Fq> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] ^= a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] ^= b.c[i];
  return Poly(std::move(c));
}

Poly poly_scale(const FieldCtx& ctx, const Poly& a, Fq s) {
  std::vector<Fq> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ctx.mul(a.c[i], s);
  return Poly(std::move(c));
}

Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Fq> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] ^= ctx.mul(a.c[i], b.c[j]);
  }
  return Poly(std::move(c));
}

void poly_divmod(const FieldCtx& ctx, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) fail(ErrorKind::ZeroInverse, "polynomial division by zero");
  std::vector<Fq> rem = a.c;
  const int db = b.degree();
  const Fq lead_inv = ctx.inv(b.lead());
  std::vector<Fq> quo(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    const Fq f = ctx.mul(rem[i], lead_inv);
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] ^= ctx.mul(f, b.c[j]);
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly poly_div(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(ctx, a, b, q, r);
  return q;
}

Poly poly_mod(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.degree() < b.degree()) return a;
  Poly q, r;
  poly_divmod(ctx, a, b, q, r);
  return r;
}

Poly poly_mulmod(const FieldCtx& ctx, const Poly& a, const Poly& b, const Poly& mod) {
  return poly_mod(ctx, poly_mul(ctx, a, b), mod);
}

Poly poly_powmod(const FieldCtx& ctx, const Poly& a, const Count& e, const Poly& mod) {
  Poly result = poly_mod(ctx, Poly::constant(1), mod);
  if (e == 0) return result;
  Poly base = poly_mod(ctx, a, mod);
  const std::size_t top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = poly_mulmod(ctx, result, result, mod);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = poly_mulmod(ctx, result, base, mod);
  }
  return result;
}

Poly poly_monic(const FieldCtx& ctx, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(ctx, a, ctx.inv(a.lead()));
}

Fq poly_eval(const FieldCtx& ctx, const Poly& p, Fq x) {
  Fq acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = ctx.mul(acc, x) ^ p.c[i];
  return acc;
}

Poly poly_shift_cyclic(const Poly& a, std::size_t e, std::size_t len) {
  std::vector<Fq> c(len, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[(i + e) % len] ^= a.c[i];
  return Poly(std::move(c));
}

ExtGcd poly_ext_gcd(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (f == g || g.is_zero()) {
    const Fq s = ctx.inv(f.lead());
    return {poly_scale(ctx, f, s), Poly::constant(s), Poly{}};
  }
  if (f.is_zero()) {
    const Fq s = ctx.inv(g.lead());
    return {poly_scale(ctx, g, s), Poly{}, Poly::constant(s)};
  }
  Poly old_r = f, r = g;
  Poly old_s = Poly::constant(1), s;
  Poly old_t, t = Poly::constant(1);
  while (!r.is_zero()) {
    Poly q, rem;
    poly_divmod(ctx, old_r, r, q, rem);
    old_r = std::exchange(r, rem);
    old_s = std::exchange(s, poly_add(old_s, poly_mul(ctx, q, s)));
    old_t = std::exchange(t, poly_add(old_t, poly_mul(ctx, q, t)));
  }
  const Fq inv_lead = ctx.inv(old_r.lead());
  ExtGcd out{poly_scale(ctx, old_r, inv_lead), poly_scale(ctx, old_s, inv_lead), poly_scale(ctx, old_t, inv_lead)};
#ifndef NDEBUG
  if (poly_add(poly_mul(ctx, out.a, f), poly_mul(ctx, out.b, g)) != out.gcd) {
    throw std::logic_error("poly_ext_gcd: Bezout identity violated");
  }
#endif
  return out;
}

Poly reciprocal(const Poly& f) {
  if (f.degree() < 1) fail(ErrorKind::DegreeZero, "reciprocal needs deg f >= 1");
  std::vector<Fq> c(f.c.rbegin(), f.c.rend());
  return Poly(std::move(c));
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

std::uint64_t pack(const Poly& p, unsigned m) {
  if (p.c.size() * m > 64) fail(ErrorKind::TooLarge, "polynomial does not fit a 64-bit word");
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < p.c.size(); ++i) w |= static_cast<std::uint64_t>(p.c[i]) << (i * m);
  return w;
}

Poly unpack(std::uint64_t w, unsigned m) {
  std::vector<Fq> c;
  const std::uint64_t mask = (m >= 64) ? ~0ull : ((1ull << m) - 1);
  while (w) {
    c.push_back(static_cast<Fq>(w & mask));
    w = (m >= 64) ? 0 : (w >> m);
  }
  return Poly(std::move(c));
}

std::string poly_to_hex(const Poly& p, unsigned m) {
  if (p.is_zero()) return "0x0";
  std::vector<bool> bits(p.c.size() * m, false);
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    for (unsigned b = 0; b < m; ++b) bits[i * m + b] = (p.c[i] >> b) & 1u;
  }
  while (!bits.empty() && !bits.back()) bits.pop_back();
  std::string digits;
  for (std::size_t base = 0; base < bits.size(); base += 4) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4 && base + b < bits.size(); ++b) v |= static_cast<unsigned>(bits[base + b]) << b;
    digits.push_back("0123456789abcdef"[v]);
  }
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

Poly poly_from_hex(const std::string& hex, unsigned m) {
  std::string s = hex;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty()) fail(ErrorKind::InvalidArgument, "empty hex string");
  std::vector<bool> bits;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    unsigned v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = 10 + (ch - 'a');
    else fail(ErrorKind::InvalidArgument, "bad hex digit in '" + hex + "'");
    for (unsigned b = 0; b < 4; ++b) bits.push_back((v >> b) & 1u);
  }
  std::vector<Fq> c((bits.size() + m - 1) / m, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) c[i / m] |= 1u << (i % m);
  }
  return Poly(std::move(c));
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string coef;
    if (p.c[i] != 1 || i == 0) {
      coef = (p.c[i] < 10) ? std::to_string(p.c[i]) : ("[" + poly_to_hex(Poly::constant(p.c[i]), 32) + "]");
    }
    if (i == 0) out += coef;
    else out += coef + (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out;
}

bool is_irreducible(const FieldCtx& ctx, const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Count q = Count(1) << ctx.m();
  const Poly x = Poly::monomial(1);
  // x^{q^i} mod f for i = 0..d
  std::vector<Poly> frob{poly_mod(ctx, x, f)};
  for (int i = 1; i <= d; ++i) frob.push_back(poly_powmod(ctx, frob.back(), q, f));
  if (frob[d] != poly_mod(ctx, x, f)) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(d))) {
    const Poly h = poly_add(frob[d / p], x);
    if (!poly_ext_gcd(ctx, h, f).gcd.is_one()) return false;
  }
  return true;
}

Poly find_primitive(const Poly& f, const FieldCtx& ctx) {
  const unsigned bits = ctx.m() * static_cast<unsigned>(f.degree());
  if (f.degree() < 1) fail(ErrorKind::DegreeZero, "find_primitive needs deg f >= 1");
  if (bits > 63) fail(ErrorKind::TooLarge, "residue field too large for primitive search");
  const std::uint64_t order = (1ull << bits) - 1;
  const std::vector<std::uint64_t> primes = prime_factors(order);
  for (std::uint64_t v = 1; v <= order; ++v) {
    const Poly a = unpack(v, ctx.m());
    bool ok = true;
    for (std::uint64_t p : primes) {
      if (poly_powmod(ctx, a, Count(order / p), f).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  throw std::logic_error("find_primitive: no primitive element (modulus not irreducible?)");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t mul_order_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) fail(ErrorKind::InvalidArgument, "element not invertible modulo n");
  std::uint64_t e = 1, v = a % n;
  while (v != 1) {
    v = mulmod_u64(v, a, n);
    ++e;
  }
  return e;
}

}  // namespace sdcyc
