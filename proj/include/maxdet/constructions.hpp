#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxdet/bigint.hpp"
#include "maxdet/cycint.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

/// F_n: exponent i*j mod n.
LogMatrix fourier(int n);
/// Kronecker product, index (i1*nB + i2, j1*nB + j2).
LogMatrix tensor(const LogMatrix& a, const LogMatrix& b);

/// Block-circulant [E_(J-I mod n)] with E_i = r_i^* r_i, from a dephased BH.
LogMatrix bush_type(const LogMatrix& h);

/// Exact common row sum of M, if every row sums to the same value.
std::optional<CycInt> constant_row_sum(const LogMatrix& m);

struct Bordered {
  LogMatrix matrix;
  RootScalar unit;
  CycInt row_sum;  // of unit * H
  BigInt det2;     // (n + 1 - 2 re(unit s)) n^n
};

/// [[1, 1^T], [1, unit H]]; det2 is checked against det_exact.
Bordered bordered_rowsum(const LogMatrix& h, const RootScalar& unit);
/// The unit minimizing re(unit * s).
RootScalar best_border_unit(const LogMatrix& h);

/// (Q)_ij = chi(i - j) on GF(q) indices, chi(gamma^m) = zeta_ell^m, chi(0) = 0.
ZLogMatrix paley_core(int q, int ell);
/// [[0, 1^T], [1, Q]].
ZLogMatrix weighing_border(const ZLogMatrix& q);
/// W_q + alpha I, entries in mu_ell.
LogMatrix paley_plus_unit(int q, const RootScalar& alpha);

struct PaleyDet {
  int q = 0;
  long c = 0;
  BigInt bracket;  // (q+2)^3 - 3(q+2)^2 - 3(q-1)(q+2) + (3+c)q - 1
  BigInt det2;     // (q^2+q+1) bracket^((q-1)/3)
};

PaleyDet paley_det_formula(int q);

struct DesignParams {
  int t = 0;
  int v = 0, k = 0, lambda = 0;
  bool mirror = false;      // v = t^2 + (t-1)^2, lambda = C(t+1, 2)
  bool degenerate = false;  // lambda == 0 or v <= k
};

/// Symmetric design parameters with (v-1) lambda = k(k-1) and k = t^2.
DesignParams barba_design_parameters(int t, bool mirror = false);

/// J + (zeta_ell - 1) D for a symmetric design incidence D, ell in {2,3,4}.
/// Requires |zeta - 1|^2 (k - lambda) = v - 1 so that the result is Barba.
LogMatrix barba_from_design(const std::vector<std::vector<int>>& d, int ell);
/// Incidence of the Fano plane developed from {1,2,4} mod 7.
std::vector<std::vector<int>> fano_incidence();

/// N = B diag(d) with N N^* = N^* N = (n-1)I + J; constant row and column sum.
LogMatrix normalize_barba(const LogMatrix& b);

/// mu_4 -> mu_2, each entry replaced by its 2 x 2 block.
LogMatrix turyn_morphism(const LogMatrix& m);
/// [[A, B], [-B, A]] for M = A + iB, as an integer matrix (ell = 2 ring).
CycMatrix realify(const LogMatrix& m);

struct Seed {
  std::string name;
  LogMatrix matrix;
  std::string note;
};

/// b4 b7 b10 b13 m5 m8 m11 w11.
const std::vector<Seed>& seed_catalog();
const Seed& seed(const std::string& name);
/// Names of seeds failing their check (empty when all pass).
std::vector<std::string> seed_self_test();

}  // namespace maxdet
