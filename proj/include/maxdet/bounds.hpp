#pragma once

#include <vector>

#include "maxdet/bigint.hpp"
#include "maxdet/matrix.hpp"
#include "maxdet/sigma.hpp"

namespace maxdet {

BigInt hadamard_bound_sq(int n);

/// Squared generalized Barba bound (n + (n-1)s)(n - s)^(n-1), s = sigma_ell(n).
/// Exact when s is 0 or 1 (s = 0 is the Hadamard bound).
struct BarbaBound {
  bool exact = false;
  BigInt value = 0;     // valid when exact
  HighReal approx = 0;  // always set
  SigmaValue sigma;
};

BarbaBound barba_bound_sq(int n, int ell);

struct BoundReport {
  int n = 0, ell = 0;
  BigInt hadamard_sq;
  BarbaBound barba;
};

BoundReport bound_report(int n, int ell);

/// Upper bound on |det|^2 for orders where the record is compared: Hadamard
/// when sigma = 0, Barba otherwise.
HighReal record_ratio(const BigInt& det2, int n, int ell);

/// Inputs of the Moyssiadis-Kounias style bound.
struct MKContext {
  int n = 0;        // diagonal value
  BigInt c = 1;     // lower bound on |entry|^2 ... entries satisfy |x| >= c, with c integral here
  int r = 0;        // order of D
  BigInt det_d = 0;
  BigInt d_hat = 0;
};

/// max over gamma in phi^r of det [[D, gamma], [gamma^*, c]] = c det D - gamma^* adj(D) gamma.
/// D must be positive definite.
BigInt d_hat(const GramMatrix& D, const std::vector<CycInt>& phi, const BigInt& c);

/// Exact adjugate.
CycMatrix adjugate(const CycMatrix& a);

MKContext make_mk_context(const GramMatrix& D, const std::vector<CycInt>& phi, int n, const BigInt& c = 1);

/// (n-c)^(m-r-1) [(n-c) det D + (m-r) max(0, d_hat)]
BigInt mk_bound(const MKContext& ctx, int m);
BigInt mk_bound(int n, const BigInt& c, const BigInt& det_d, const BigInt& dhat, int r, int m);

/// S_k = 2(n-1)^k - 2(n-2)^k - k(n-2)^(k-1)
BigInt s_series(int n, int k);

/// (n-1)^(n-r) det D + max(0, d_hat) S_(n-r); needs n = 2 (mod 3).
BigInt mk_bound_2mod3(const MKContext& ctx);
BigInt mk_bound_2mod3(int n, const BigInt& det_d, const BigInt& dhat, int r);

/// Leading principal minors all positive.
bool is_positive_definite(const CycMatrix& a);

}  // namespace maxdet
