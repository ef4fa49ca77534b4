#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxdet/cycint.hpp"

namespace maxdet {

/// n x n matrix over mu_ell stored by exponents ("logarithmic form").
/// ZLogMatrix below additionally admits zero entries.
class LogMatrix {
 public:
  LogMatrix(int n, int ell);
  LogMatrix(int ell, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int ell() const { return ell_; }
  int operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  /// Stores e mod ell.
  void set(int i, int j, int e);

  bool operator==(const LogMatrix&) const = default;

 private:
  int n_, ell_;
  std::vector<int> e_;
};

/// Exponent matrix whose entries may also be zero (kZero).
class ZLogMatrix {
 public:
  static constexpr int kZero = -1;

  ZLogMatrix(int n, int ell);
  ZLogMatrix(int ell, const std::vector<std::vector<int>>& rows);
  explicit ZLogMatrix(const LogMatrix& m);

  int n() const { return n_; }
  int ell() const { return ell_; }
  int operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, int e);
  bool has_zero() const;
  /// Throws UsageError if any entry is zero.
  LogMatrix to_log() const;

  bool operator==(const ZLogMatrix&) const = default;

 private:
  int n_, ell_;
  std::vector<int> e_;
};

/// Square matrix over Z[zeta_ell], ell in {2,3,4,6}.
class CycMatrix {
 public:
  CycMatrix(int n, int ell);

  int n() const { return n_; }
  int ell() const { return ell_; }
  const CycInt& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  CycInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

  static CycMatrix identity(int n, int ell, const BigInt& scale = 1);
  static CycMatrix from_log(const LogMatrix& m);
  static CycMatrix from_log(const ZLogMatrix& m);

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix conj_transpose() const;
  bool is_hermitian() const;
  /// Leading r x r block.
  CycMatrix leading(int r) const;

  bool operator==(const CycMatrix& o) const;

 private:
  int n_, ell_;
  std::vector<CycInt> a_;
};

using GramMatrix = CycMatrix;

/// Exact M M^*.
GramMatrix gram(const LogMatrix& m);
GramMatrix gram(const ZLogMatrix& m);

/// Fraction-free (Bareiss) determinant over Z[zeta_ell].
CycInt det_exact(const CycMatrix& a);

/// |det M|^2, plus det M itself when ell has an exact ring.
struct DetValue {
  BigInt squared_modulus;
  std::optional<CycInt> det;
};

DetValue det_exact(const LogMatrix& m);
DetValue det_exact(const ZLogMatrix& m);
/// Determinant of a Gram matrix: a nonnegative rational integer.
BigInt det_gram(const GramMatrix& g);

/// MM^* = nI. Any ell (cancellation tested by cyclotomic divisibility).
bool verify_bh(const LogMatrix& m);
/// MM^* = wI, zeros allowed.
bool verify_weighing(const ZLogMatrix& m, int w);
/// MM^* = (n-1)I + J.
bool verify_barba(const LogMatrix& m);

/// N = (D1 P) M (D2 Q)^*: N_ij = zeta^(d1_i - d2_j) M_{p(i), q(j)}.
LogMatrix monomial_apply(const LogMatrix& m, const std::vector<int>& p, const std::vector<int>& q,
                         const std::vector<int>& d1, const std::vector<int>& d2);
/// First row and column all exponent 0.
LogMatrix dephase(const LogMatrix& m);
LogMatrix transpose(const LogMatrix& m);
/// Entrywise conjugate of the transpose.
LogMatrix conj_transpose(const LogMatrix& m);

// Text format: "n ell" header, then n rows of n exponents; '#' lines are
// comments; '.' marks a zero entry (ZLogMatrix only).
LogMatrix parse_log_matrix(const std::string& text);
ZLogMatrix parse_zlog_matrix(const std::string& text);
std::string to_text(const LogMatrix& m);
std::string to_text(const ZLogMatrix& m);
LogMatrix read_log_matrix(const std::string& path);
ZLogMatrix read_zlog_matrix(const std::string& path);

}  // namespace maxdet
