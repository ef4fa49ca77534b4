#pragma once

#include <complex>
#include <string>

#include "maxdet/bigint.hpp"

namespace maxdet {

/// Orders whose cyclotomic ring is handled exactly (rank <= 2 over Z).
bool is_exact_order(int ell);

/// A root of unity zeta_ell^exp, exponent kept in [0, ell).
class RootScalar {
 public:
  RootScalar(int ell, int exp);

  int ell() const { return ell_; }
  int exp() const { return exp_; }

  RootScalar operator*(const RootScalar& o) const;
  RootScalar conj() const { return RootScalar(ell_, -exp_); }
  bool operator==(const RootScalar&) const = default;

 private:
  int ell_;
  int exp_;
};

/// Exact element a + b*g of Z[zeta_ell] for ell in {2,3,4,6}.
///
/// g is omega = e^{2 pi i/3} when ell is 3 or 6 (zeta_6 = 1 + omega),
/// i when ell is 4; for ell = 2 the ring is Z and b stays 0.
class CycInt {
 public:
  explicit CycInt(int ell, BigInt a = 0, BigInt b = 0);

  static CycInt root(const RootScalar& z);
  static CycInt root(int ell, int exp) { return root(RootScalar(ell, exp)); }

  int ell() const { return ell_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  CycInt conj() const;
  /// |x|^2, always a nonnegative integer.
  BigInt norm_squared() const;
  /// 2 * Re(x).
  BigInt two_re() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt operator*(const BigInt& k) const;

  /// Quotient x / y; throws InternalError if y does not divide x.
  CycInt exact_div(const CycInt& y) const;
  CycInt exact_div(const BigInt& k) const;
  bool divisible_by(const CycInt& y) const;

  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }
  /// Total order on (a, b); no algebraic meaning.
  bool operator<(const CycInt& o) const;

  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_ld() const;

  /// Exponent e with x == zeta^e, or -1 when x is not a root of unity.
  int root_exponent() const;

  /// Human form such as "3-2w" or "1+i".
  std::string to_string() const;
  /// "w" for the omega basis, "i" for Gaussian, "z" for plain integers.
  std::string ring_tag() const;

 private:
  void check_same(const CycInt& o) const;
  bool omega_basis() const { return ell_ == 3 || ell_ == 6; }

  int ell_;
  BigInt a_;
  BigInt b_;
};

/// Ring-compatibility for mixing: 3 and 6 share Z[omega].
bool same_ring(int ell1, int ell2);

}  // namespace maxdet
