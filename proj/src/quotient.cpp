#include "sdcyc/quotient.hpp"

namespace sdcyc {

ResidueRing::ResidueRing(FieldCtx ctx, Poly modulus) : ctx_(std::move(ctx)), mod_(std::move(modulus)) {
  if (mod_.degree() < 1) fail(ErrorKind::DegreeZero, "residue ring modulus must have positive degree");
  mod_ = poly_monic(ctx_, mod_);
}

Poly ResidueRing::inv(const Poly& a) const {
  const ExtGcd g = poly_ext_gcd(ctx_, reduce(a), mod_);
  if (!g.gcd.is_one()) fail(ErrorKind::ZeroInverse, "element is not a unit of the residue ring");
  return reduce(g.a);
}

ResidueField::ResidueField(FieldCtx ctx, Poly f) : ring_(std::move(ctx), std::move(f)) {
  bits_ = ring_.field().m() * static_cast<unsigned>(ring_.degree());
  if (bits_ > 64) fail(ErrorKind::TooLarge, "residue field elements exceed 64 bits");
}

std::uint64_t ResidueField::mul(std::uint64_t a, std::uint64_t b) const {
  return pack(ring_.mul(to_poly(a), to_poly(b)), base().m());
}

std::uint64_t ResidueField::pow(std::uint64_t a, const Count& e) const {
  return pack(ring_.pow(to_poly(a), e), base().m());
}

std::uint64_t ResidueField::inv(std::uint64_t a) const {
  if (a == 0) fail(ErrorKind::ZeroInverse, "inverse of zero in residue field");
  return pack(ring_.inv(to_poly(a)), base().m());
}

UElem::UElem(std::shared_ptr<const ResidueRing> base, std::vector<Poly> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  for (Poly& c : coeffs_) c = base_->reduce(c);
}

namespace {
void require_compatible(const UElem& a, const UElem& b) {
  if (!(a.base() == b.base()) || a.s() != b.s()) fail(ErrorKind::BaseMismatch, "u-elements over different rings");
}
}  // namespace

UElem u_add(const UElem& a, const UElem& b) {
  require_compatible(a, b);
  std::vector<Poly> c(a.s());
  for (std::size_t i = 0; i < a.s(); ++i) c[i] = poly_add(a.coeffs()[i], b.coeffs()[i]);
  return UElem(a.base_ptr(), std::move(c));
}

UElem u_mul(const UElem& a, const UElem& b) {
  require_compatible(a, b);
  const std::size_t s = a.s();
  std::vector<Poly> c(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t l = 0; i + l < s; ++l) c[i + l] = poly_add(c[i + l], a.base().mul(a.coeffs()[i], b.coeffs()[l]));
  }
  return UElem(a.base_ptr(), std::move(c));
}

std::pair<Poly, Poly> kj_split(const FieldCtx& ctx, const Poly& a, const Poly& f) {
  Poly q, r;
  poly_divmod(ctx, poly_mod(ctx, a, poly_mul(ctx, f, f)), f, q, r);
  return {r, q};
}

Poly x_inverse_mod(const ResidueRing& ring, int n) {
  return ring.pow(Poly::monomial(1), Count(2 * n - 1));
}

Components::Components(const FactorData& fd) : n_(fd.n) {
  for (int j = 0; j < fd.r(); ++j) {
    fields_.emplace_back(fd.field, fd.factor(j));
    rho_.push_back(fd.rho(j));
    delta_.push_back(fd.delta.at(static_cast<std::size_t>(j)));
  }
  for (int j = 0; j < fd.r(); ++j) xinv_.push_back(fields_[j].pow(fields_[j].x(), Count(n_ - 1)));
  for (int j = 0; j < fd.r(); ++j) {
    const int t = rho(j);
    xinv_d_.push_back(fields_[t].pow(xinv_[t], Count(degree(j))));
  }
}

std::uint64_t Components::x_inverse_frobenius(int j) const {
  const int d = degree(j);
  if (rho(j) != j || d % 2 != 0) fail(ErrorKind::OutOfRange, "Frobenius form of x^{-1} needs an even-degree self-reciprocal component");
  const ResidueField& F = field(j);
  return F.pow(F.x(), Count(1) << (F.base().m() * static_cast<unsigned>(d) / 2));
}

std::uint64_t Components::hat(int j, std::uint64_t a) const {
  const ResidueField& src = field(j);
  const int t = rho(j);
  const ResidueField& dst = field(t);
  const Poly p = src.to_poly(a);
  // Horner in dst with x -> x^{-1}; coefficients are F_{2^m} scalars.
  std::uint64_t acc = 0;
  const std::uint64_t y = xinv_[static_cast<std::size_t>(t)];
  for (std::size_t i = p.c.size(); i-- > 0;) acc = dst.mul(acc, y) ^ static_cast<std::uint64_t>(p.c[i]);
  return acc;
}

std::uint64_t Components::omega_prime(int j, std::uint64_t a) const {
  const ResidueField& dst = field(rho(j));
  const std::uint64_t scaled = dst.mul(hat(j, a), xinv_d_[static_cast<std::size_t>(j)]);
  return dst.mul(scaled, static_cast<std::uint64_t>(delta_[static_cast<std::size_t>(j)]));
}

std::vector<std::uint64_t> Components::hat(int j, const std::vector<std::uint64_t>& w) const {
  std::vector<std::uint64_t> out;
  out.reserve(w.size());
  for (std::uint64_t a : w) out.push_back(hat(j, a));
  return out;
}

std::vector<std::uint64_t> Components::omega_prime(int j, const std::vector<std::uint64_t>& w) const {
  std::vector<std::uint64_t> out;
  out.reserve(w.size());
  for (std::uint64_t a : w) out.push_back(omega_prime(j, a));
  return out;
}

namespace {
template <typename Fn>
UElem map_coeffs(const UElem& w, const Components& comps, int j, Fn fn) {
  if (!(w.base() == comps.field(j).ring())) fail(ErrorKind::BaseMismatch, "u-element is not over F_j");
  const ResidueField& dst = comps.field(comps.rho(j));
  std::vector<Poly> c;
  for (const Poly& a : w.coeffs()) c.push_back(dst.to_poly(fn(comps.field(j).from_poly(a))));
  return UElem(std::make_shared<ResidueRing>(dst.ring()), std::move(c));
}
}  // namespace

UElem hat(const UElem& w, const Components& comps, int j) {
  return map_coeffs(w, comps, j, [&](std::uint64_t a) { return comps.hat(j, a); });
}

UElem omega_prime(const UElem& w, const Components& comps, int j) {
  return map_coeffs(w, comps, j, [&](std::uint64_t a) { return comps.omega_prime(j, a); });
}

}  // namespace sdcyc
