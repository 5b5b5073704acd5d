#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sdcyc/instance.hpp"
#include "sdcyc/oracle.hpp"

namespace sdcyc {

// Ideal shapes of K_j[u]/<u^k>, writing f for f_j:
//   UPow         <u^i>                        0 <= i <= k
//   UsF          <u^s f>                      0 <= s <= k-1
//   MixedOne     <u^i + u^t f w>              t >= 2i-k, w unit mod u^{i-t}
//   MixedTwo     <u^i + u^t f w>              t <  2i-k, w unit mod u^{k-i}
//   TwoGen       <u^i, u^s f>                 0 <= s < i <= k-1
//   TwoGenOmega  <u^i + u^t f w, u^s f>       i+s <= k+t-1, w unit mod u^{s-t}
enum class Shape { UPow, UsF, MixedOne, MixedTwo, TwoGen, TwoGenOmega };

const char* shape_name(Shape s);
Shape shape_from_name(const std::string& name);

struct IdealLabel {
  int j = 0;
  Shape shape = Shape::UPow;
  int i = 0;
  int t = 0;
  int s = 0;
  // u-coefficients of w, each a packed element of F_j
  std::vector<std::uint64_t> omega;

  auto operator<=>(const IdealLabel&) const = default;
};

IdealLabel make_upow(int j, int i);
IdealLabel make_usf(int j, int s);
IdealLabel make_mixed(int j, int i, int t, std::vector<std::uint64_t> omega, int k);
IdealLabel make_two_gen(int j, int i, int s, int k);
IdealLabel make_two_gen_omega(int j, int i, int t, int s, std::vector<std::uint64_t> omega, int k);

// Required length of omega for a shape, 0 if it carries none.
int omega_length(Shape shape, int i, int t, int s, int k);
// Throws OutOfRange unless the label satisfies the table ranges (bits = m d_j).
void validate_label(const IdealLabel& label, int k, unsigned bits);
// |C_j| = q^e with q = 2^{m d_j}; returns e.
int ideal_log_q_size(const IdealLabel& label, int k);
std::string label_to_string(const IdealLabel& label, const FieldCtx& ctx);

// Counting.
Count gamma(const Count& q, int rho);
Count omega1(const Count& q, int k);
Count omega2(const Count& q, int k);
Count count_ideals_sum(const Count& q, int k);       // summation form
Count count_ideals_closed(const Count& q, int k);    // rational closed form
Count count_ideals_by_shape(const Count& q, int k);  // 1 + k(k+3)/2 + Omega1 + Omega2 + (q-1) Gamma
Count count_ideals_small_k(const Count& q, int k);   // k = 2..5 polynomials in q
// All forms cross-asserted; returns the common value.
Count count_ideals(const Count& q, int k);

// Lazy, indexable list of every ideal of K_j[u]/<u^k> in table order.
class IdealCatalog {
 public:
  IdealCatalog(int j, unsigned bits, int k);

  const Count& size() const { return total_; }
  IdealLabel at(const Count& index) const;
  Count shape_count(Shape shape) const;
  void for_each(const std::function<void(const IdealLabel&)>& fn) const;

 private:
  struct Family {
    Shape shape;
    int i, t, s;
    int omega_len;
    Count size;
  };
  int j_;
  unsigned bits_;
  int k_;
  std::vector<Family> families_;
  Count total_;
};

// Unit of F_j[u]/<u^len> at a lexicographic index in (a_0, ..., a_{len-1}).
std::vector<std::uint64_t> unit_at(const Count& index, unsigned bits, int len);
Count unit_count(unsigned bits, int len);

std::vector<IdealLabel> enumerate_ideals(int j, int k, const Instance& inst);

// Listed generators of a label as elements of K_j[u]/<u^k> (k u-coefficients mod f_j^2).
std::vector<std::vector<Poly>> label_generators(const IdealLabel& label, int k, const FieldCtx& ctx, const Poly& f);

std::shared_ptr<const RingSpace> component_space(const Instance& inst, int j);
DenseCode ideal_span(const IdealLabel& label, const Instance& inst);
// Explicit member set (encoded in component_space); ring size <= 2^24.
std::vector<Word> ideal_members(const IdealLabel& label, const Instance& inst);

// A code over R of length 2n as per-component ideals (CRT coordinates).
struct CyclicCode {
  int n = 1;
  unsigned m = 1;
  int k = 2;
  std::uint64_t modulus = 0x3;
  std::vector<IdealLabel> components;

  auto operator<=>(const CyclicCode&) const = default;
};

CyclicCode make_code(const Instance& inst, std::vector<IdealLabel> components);
void validate_code(const CyclicCode& code, const Instance& inst);
std::string code_to_string(const CyclicCode& code, const FieldCtx& ctx);

// Generators eps_j * g in the cyclic ambient, for every listed generator g of every C_j.
std::vector<std::vector<Poly>> code_generators(const CyclicCode& code, const Instance& inst);
DenseCode code_span(const CyclicCode& code, const Instance& inst);
// log2 |C| = sum_j m d_j e_j
unsigned code_log2_size(const CyclicCode& code, const Instance& inst);

// Product over components of IdealCatalog.
class CyclicCodeSpace {
 public:
  explicit CyclicCodeSpace(const Instance& inst);
  const Count& size() const { return total_; }
  CyclicCode at(const Count& index) const;

 private:
  const Instance* inst_;
  std::vector<IdealCatalog> catalogs_;
  Count total_;
};

}  // namespace sdcyc
