#pragma once

#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

/// Minimum modulus of a sum of n elements of mu_ell.
struct SigmaValue {
  int ell = 0;
  int n = 0;
  /// True for ell in {2,3,4,6}; then `squared` is the exact minimum of |s|^2.
  bool exact = false;
  BigInt squared = 0;
  /// Cancellation detected exactly (polynomial divisibility), valid for every ell.
  bool zero = false;
  /// Numeric |s|, and an absolute bound on its error.
  HighReal value = 0;
  HighReal error = 0;
  /// A minimizing profile (a_0, ..., a_{ell-1}).
  std::vector<int> profile;
};

SigmaValue sigma_min(int ell, int n);

/// Coefficients of the cyclotomic polynomial Phi_m, low degree first.
std::vector<long long> cyclotomic_polynomial(int m);

/// True when sum a_i zeta_ell^i == 0 exactly.
bool profile_cancels(const std::vector<int>& profile);

}  // namespace maxdet
