#include "maxdet/cycint.hpp"

#include <cmath>
#include <sstream>

#include "maxdet/errors.hpp"

namespace maxdet {

bool is_exact_order(int ell) { return ell == 2 || ell == 3 || ell == 4 || ell == 6; }

bool same_ring(int ell1, int ell2) {
  // Z[zeta_6] = Z[omega], but the exponent conventions differ, so we keep
  // the two tags apart and make callers convert explicitly.
  return ell1 == ell2;
}

RootScalar::RootScalar(int ell, int exp) : ell_(ell) {
  if (ell < 1) throw UsageError("root order must be positive");
  exp_ = ((exp % ell) + ell) % ell;
}

RootScalar RootScalar::operator*(const RootScalar& o) const {
  if (o.ell_ != ell_) throw UsageError("root scalars of different order");
  return RootScalar(ell_, exp_ + o.exp_);
}

CycInt::CycInt(int ell, BigInt a, BigInt b) : ell_(ell), a_(std::move(a)), b_(std::move(b)) {
  if (!is_exact_order(ell)) {
    throw UsageError("exact cyclotomic arithmetic needs ell in {2,3,4,6}, got " + std::to_string(ell));
  }
  if (ell == 2 && b_ != 0) throw UsageError("Z has no second coordinate");
}

CycInt CycInt::root(const RootScalar& z) {
  const int e = z.exp();
  switch (z.ell()) {
    case 2:
      return CycInt(2, e == 0 ? 1 : -1);
    case 3: {
      static const int tab[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
      return CycInt(3, tab[e][0], tab[e][1]);
    }
    case 4: {
      static const int tab[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      return CycInt(4, tab[e][0], tab[e][1]);
    }
    case 6: {
      static const int tab[6][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
      return CycInt(6, tab[e][0], tab[e][1]);
    }
    default:
      throw UsageError("no exact ring for ell = " + std::to_string(z.ell()));
  }
}

void CycInt::check_same(const CycInt& o) const {
  if (!same_ring(ell_, o.ell_)) {
    throw UsageError("mixing cyclotomic rings ell=" + std::to_string(ell_) + " and ell=" +
                     std::to_string(o.ell_));
  }
}

CycInt CycInt::conj() const {
  if (omega_basis()) return CycInt(ell_, a_ - b_, -b_);
  return CycInt(ell_, a_, -b_);
}

BigInt CycInt::norm_squared() const {
  if (omega_basis()) return a_ * a_ - a_ * b_ + b_ * b_;
  return a_ * a_ + b_ * b_;
}

BigInt CycInt::two_re() const {
  if (omega_basis()) return 2 * a_ - b_;
  return 2 * a_;
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_same(o);
  return CycInt(ell_, a_ + o.a_, b_ + o.b_);
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same(o);
  return CycInt(ell_, a_ - o.a_, b_ - o.b_);
}

CycInt CycInt::operator-() const { return CycInt(ell_, -a_, -b_); }

CycInt CycInt::operator*(const CycInt& o) const {
  check_same(o);
  if (omega_basis()) {
    // omega^2 = -1 - omega
    BigInt bd = b_ * o.b_;
    return CycInt(ell_, a_ * o.a_ - bd, a_ * o.b_ + b_ * o.a_ - bd);
  }
  return CycInt(ell_, a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

CycInt CycInt::operator*(const BigInt& k) const { return CycInt(ell_, a_ * k, b_ * k); }

CycInt& CycInt::operator+=(const CycInt& o) { return *this = *this + o; }
CycInt& CycInt::operator-=(const CycInt& o) { return *this = *this - o; }
CycInt& CycInt::operator*=(const CycInt& o) { return *this = *this * o; }

bool CycInt::divisible_by(const CycInt& y) const {
  check_same(y);
  if (y.is_zero()) return is_zero();
  CycInt num = *this * y.conj();
  BigInt n = y.norm_squared();
  return num.a_ % n == 0 && num.b_ % n == 0;
}

CycInt CycInt::exact_div(const CycInt& y) const {
  check_same(y);
  if (y.is_zero()) throw InternalError("division by zero in Z[zeta]");
  CycInt num = *this * y.conj();
  BigInt n = y.norm_squared();
  if (num.a_ % n != 0 || num.b_ % n != 0) {
    throw InternalError("inexact division " + to_string() + " / " + y.to_string());
  }
  return CycInt(ell_, num.a_ / n, num.b_ / n);
}

CycInt CycInt::exact_div(const BigInt& k) const {
  if (k == 0) throw InternalError("division by zero");
  if (a_ % k != 0 || b_ % k != 0) throw InternalError("inexact division by integer");
  return CycInt(ell_, a_ / k, b_ / k);
}

bool CycInt::operator==(const CycInt& o) const {
  return same_ring(ell_, o.ell_) && a_ == o.a_ && b_ == o.b_;
}

bool CycInt::operator<(const CycInt& o) const {
  check_same(o);
  if (a_ != o.a_) return a_ < o.a_;
  return b_ < o.b_;
}

std::complex<long double> CycInt::to_complex_ld() const {
  const long double a = static_cast<long double>(a_);
  const long double b = static_cast<long double>(b_);
  if (omega_basis()) {
    const long double h = std::sqrt(3.0L) / 2.0L;
    return {a - b / 2.0L, b * h};
  }
  return {a, b};
}

std::complex<double> CycInt::to_complex() const {
  auto z = to_complex_ld();
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

int CycInt::root_exponent() const {
  if (norm_squared() != 1) return -1;
  for (int e = 0; e < ell_; ++e) {
    if (root(ell_, e) == *this) return e;
  }
  return -1;
}

std::string CycInt::ring_tag() const {
  if (omega_basis()) return "w";
  if (ell_ == 4) return "i";
  return "z";
}

std::string CycInt::to_string() const {
  if (b_ == 0) return a_.str();
  const std::string g = omega_basis() ? "w" : "i";
  std::ostringstream os;
  if (a_ != 0) os << a_.str();
  if (b_ == 1) {
    os << (a_ != 0 ? "+" : "") << g;
  } else if (b_ == -1) {
    os << "-" << g;
  } else {
    if (b_ > 0 && a_ != 0) os << "+";
    os << b_.str() << g;
  }
  return os.str();
}

}  // namespace maxdet
