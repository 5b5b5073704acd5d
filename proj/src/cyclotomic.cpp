#include "sdcyc/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace sdcyc {

namespace {

void require_odd(std::int64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n % 2 == 0) fail(ErrorKind::EvenN, "n must be odd, got " + std::to_string(n));
}

// Polynomials in X whose coefficients live in E = F_{2^m}[z]/<h>.
using EPoly = std::vector<Poly>;

Poly find_irreducible(const FieldCtx& ctx, int degree) {
  if (degree == 1) return Poly::monomial(1);
  const std::uint64_t limit = 1ull << (ctx.m() * static_cast<unsigned>(degree));
  for (std::uint64_t v = 1; v < limit; ++v) {
    Poly low = unpack(v, ctx.m());
    Poly h = poly_add(low, Poly::monomial(static_cast<std::size_t>(degree)));
    if (is_irreducible(ctx, h)) return h;
  }
  throw std::logic_error("no irreducible polynomial of the requested degree");
}

}  // namespace

std::vector<Coset> cyclotomic_cosets(std::uint64_t n, unsigned m) {
  require_odd(static_cast<std::int64_t>(n));
  const std::uint64_t q = (1ull << m) % n;
  std::vector<bool> seen(n, false);
  std::vector<Coset> out;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    Coset c;
    std::uint64_t v = a;
    while (!seen[v]) {
      seen[v] = true;
      c.push_back(v);
      v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * q) % n);
    }
    out.push_back(std::move(c));
  }
  return out;
}

FactorData factor_xn_minus_1(int n, const FieldCtx& ctx) {
  require_odd(n);
  const auto un = static_cast<std::uint64_t>(n);
  const std::vector<Coset> cosets = cyclotomic_cosets(un, ctx.m());

  const std::uint64_t q_mod_n = (1ull << ctx.m()) % un;
  const int ext_degree = n == 1 ? 1 : static_cast<int>(mul_order_mod(q_mod_n, un));
  if (static_cast<unsigned>(ext_degree) * ctx.m() > 4096) fail(ErrorKind::TooLarge, "splitting field too large");
  const Poly h = find_irreducible(ctx, ext_degree);

  // Primitive n-th root of unity gamma in E.
  Poly gamma = Poly::constant(1);
  if (n > 1) {
    const Count group = (Count(1) << (ctx.m() * static_cast<unsigned>(ext_degree))) - 1;
    const Count cofactor = group / n;
    const std::vector<std::uint64_t> primes = prime_factors(un);
    bool found = false;
    for (std::uint64_t v = 2; !found; ++v) {
      const Poly beta = poly_powmod(ctx, unpack(v, ctx.m()), cofactor, h);
      if (beta.is_zero()) continue;
      bool ok = true;
      for (std::uint64_t p : primes) ok = ok && !poly_powmod(ctx, beta, Count(un / p), h).is_one();
      if (ok) {
        gamma = beta;
        found = true;
      }
    }
  }
  std::vector<Poly> gamma_pow(un);
  gamma_pow[0] = Poly::constant(1);
  for (std::uint64_t i = 1; i < un; ++i) gamma_pow[i] = poly_mulmod(ctx, gamma_pow[i - 1], gamma, h);

  struct Raw {
    Poly f;
    Coset coset;
  };
  std::vector<Raw> raw;
  for (const Coset& c : cosets) {
    EPoly prod{Poly::constant(1)};
    for (std::uint64_t i : c) {
      // multiply by (X + gamma^i)
      EPoly next(prod.size() + 1);
      for (std::size_t t = 0; t < prod.size(); ++t) {
        next[t + 1] = poly_add(next[t + 1], prod[t]);
        next[t] = poly_add(next[t], poly_mulmod(ctx, prod[t], gamma_pow[i], h));
      }
      prod = std::move(next);
    }
    std::vector<Fq> coeffs;
    for (const Poly& e : prod) {
      if (e.degree() > 0) throw std::logic_error("minimal polynomial coefficient outside base field");
      coeffs.push_back(e.coeff(0));
    }
    raw.push_back({Poly(std::move(coeffs)), c});
  }

  // Classify under the reciprocal map.
  const std::size_t r = raw.size();
  std::vector<std::size_t> mate(r);
  for (std::size_t a = 0; a < r; ++a) {
    const Poly rec = poly_monic(ctx, reciprocal(raw[a].f));
    auto it = std::find_if(raw.begin(), raw.end(), [&](const Raw& x) { return x.f == rec; });
    if (it == raw.end()) throw std::logic_error("reciprocal of a factor is not a factor");
    mate[a] = static_cast<std::size_t>(it - raw.begin());
  }
  auto less = [&](std::size_t a, std::size_t b) { return canonical_less(raw[a].f, raw[b].f); };

  std::vector<std::size_t> self_rec, firsts;
  for (std::size_t a = 0; a < r; ++a) {
    if (raw[a].coset.front() == 0) continue;  // x - 1 goes first
    if (mate[a] == a) self_rec.push_back(a);
    else if (less(a, mate[a])) firsts.push_back(a);
  }
  std::sort(self_rec.begin(), self_rec.end(), less);
  std::sort(firsts.begin(), firsts.end(), less);

  std::vector<std::size_t> order{0};
  order.insert(order.end(), self_rec.begin(), self_rec.end());
  order.insert(order.end(), firsts.begin(), firsts.end());
  for (std::size_t a : firsts) order.push_back(mate[a]);

  FactorData fd;
  fd.n = n;
  fd.field = ctx;
  fd.lambda = 1 + static_cast<int>(self_rec.size());
  fd.epsilon = static_cast<int>(firsts.size());
  for (std::size_t a : order) {
    fd.factors.push_back(raw[a].f);
    fd.degrees.push_back(raw[a].f.degree());
    fd.cosets.push_back(raw[a].coset);
  }
  for (int j = 0; j < fd.r(); ++j) {
    const Poly rec = reciprocal(fd.factors[j]);
    const Fq d = rec.lead();
    if (poly_scale(ctx, fd.factors[fd.rho(j)], d) != rec) throw std::logic_error("reciprocal pairing mismatch");
    if (j < fd.lambda && d != 1) throw std::logic_error("self-reciprocal factor with delta != 1");
    if (j >= 1 && j < fd.lambda && fd.degrees[j] % 2 != 0) throw std::logic_error("odd-degree self-reciprocal factor");
    fd.delta.push_back(d);
  }
  return fd;
}

Idempotents compute_idempotents(const FactorData& fd) {
  const FieldCtx& ctx = fd.field;
  const Poly big = fd.ambient_modulus();
  Idempotents out;
  for (int j = 0; j < fd.r(); ++j) {
    const Poly f2 = poly_mul(ctx, fd.factor(j), fd.factor(j));
    Poly cofactor, rem;
    poly_divmod(ctx, big, f2, cofactor, rem);
    if (!rem.is_zero()) throw std::logic_error("f_j^2 does not divide x^{2n}-1");
    const ExtGcd g = poly_ext_gcd(ctx, cofactor, f2);
    if (!g.gcd.is_one()) throw std::logic_error("cofactor not coprime to f_j^2");
    out.eps.push_back(poly_mulmod(ctx, g.a, cofactor, big));
  }
  return out;
}

}  // namespace sdcyc
