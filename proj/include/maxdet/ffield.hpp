#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <string>
#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

/// GF(p^k) on dense indices 0..q-1; index = sum c_i p^i of the polynomial
/// coefficients modulo the chosen irreducible.
class FiniteField {
 public:
  FiniteField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Index of the primitive element used for logs.
  int gamma() const { return gamma_; }
  /// Monic irreducible modulus, coefficients low degree first (size k+1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int x, int y) const;
  int neg(int x) const;
  int sub(int x, int y) const { return add(x, neg(y)); }
  int mul(int x, int y) const;
  int inv(int x) const;
  int pow(int x, long long e) const;
  /// gamma^m
  int exp(long long m) const;
  /// m in [0, q-1) with gamma^m = x; x must be nonzero.
  int log(int x) const;
  /// Absolute trace into GF(p), as an integer in [0, p).
  int trace(int x) const;

  std::string name(int x) const;

 private:
  int poly_add(int x, int y) const;
  int poly_mul(int x, int y) const;

  int p_, k_, q_;
  int gamma_ = 1;
  std::vector<int> modulus_;
  std::vector<int> exp_;   // size q-1
  std::vector<int> log_;   // size q, log_[0] unused
  std::vector<int> zech_;  // zech_[m] = log(1 + gamma^m), -1 if that sum is 0
  std::vector<int> neg_;
};

/// Cyclotomic classes and numbers of order ell in GF(q).
struct CyclotomyData {
  int q = 0, ell = 0, f = 0;
  /// classes[i] = H_i = {gamma^(ell a + i)}, sorted by index.
  std::vector<std::vector<int>> classes;
  /// class_of[x] for x != 0; -1 for x == 0.
  std::vector<int> class_of;
  /// numbers[i][j] = #{x in H_i : x + 1 in H_j}.
  std::vector<std::vector<long>> numbers;
  /// Class containing -1.
  int r = 0;
};

CyclotomyData cyclotomic_classes(const FiniteField& field, int ell);

/// Closed-form cubic data, with the (c, d) that matched brute force.
struct CubicCyclotomy {
  int q = 0;
  long c = 0, d = 0;  // d >= 0; sign chosen by brute force
  int d_sign = 1;     // the sign of d that reproduces B and C
  long A = 0, B = 0, C = 0, D = 0;
  /// Every c with 4q = c^2 + 27 d^2, c = 1 mod 3 (several for some prime powers).
  std::vector<std::pair<long, long>> solutions;
};

/// All (c, d >= 0) with 4q = c^2 + 27 d^2 and c = 1 (mod 3).
std::vector<std::pair<long, long>> cubic_cd_solutions(int q);

/// Closed forms for a given (c, signed d); throws if they are not integral.
void cubic_closed_forms(int q, long c, long d, long& A, long& B, long& C, long& D);

/// Cubic cyclotomic numbers, cross-checked against the brute-force table.
CubicCyclotomy cubic_cyclotomic_numbers(int q);

/// N = #{(x0,x1,x2) in H0 x H1 x H2 : 1 + x0 + x1 + x2 = 0}, closed form,
/// verified by enumeration when q <= 1024.
long triple_sum_count(int q);

/// Brute-force N.
long triple_sum_brute(const FiniteField& field, const CyclotomyData& data);

using HighComplex = boost::multiprecision::cpp_complex_100;

/// eta_i = sum over H_i of zeta_p^Tr(x). bits must not exceed ~330.
std::vector<HighComplex> gaussian_periods(const FiniteField& field, const CyclotomyData& data,
                                          int bits = 200);

/// Decompose q = p^k; throws UsageError when q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace maxdet
