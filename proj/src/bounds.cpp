#include "maxdet/bounds.hpp"

#include "maxdet/errors.hpp"
#include "maxdet/quadform.hpp"

namespace maxdet {

BigInt hadamard_bound_sq(int n) {
  if (n < 1) throw UsageError("order must be positive");
  return ipow(BigInt(n), static_cast<unsigned>(n));
}

BarbaBound barba_bound_sq(int n, int ell) {
  if (n < 1) throw UsageError("order must be positive");
  BarbaBound b;
  b.sigma = sigma_min(ell, n);
  if (b.sigma.exact && b.sigma.squared <= 1) {
    b.exact = true;
    if (b.sigma.squared == 0) {
      b.value = hadamard_bound_sq(n);
    } else {
      b.value = BigInt(2 * n - 1) * ipow(BigInt(n - 1), static_cast<unsigned>(n - 1));
    }
    b.approx = HighReal(b.value);
    return b;
  }
  const HighReal s = b.sigma.value;
  b.exact = false;
  b.approx = (HighReal(n) + HighReal(n - 1) * s) * boost::multiprecision::pow(HighReal(n) - s, n - 1);
  if (b.sigma.exact) {
    // |s|^2 > 1 only happens for larger sigma; keep an exact integer when s is integral
    BigInt root = isqrt(b.sigma.squared);
    if (root * root == b.sigma.squared) {
      b.exact = true;
      b.value = (BigInt(n) + BigInt(n - 1) * root) * ipow(BigInt(n) - root, static_cast<unsigned>(n - 1));
    }
  }
  return b;
}

BoundReport bound_report(int n, int ell) {
  BoundReport r;
  r.n = n;
  r.ell = ell;
  r.hadamard_sq = hadamard_bound_sq(n);
  r.barba = barba_bound_sq(n, ell);
  return r;
}

HighReal record_ratio(const BigInt& det2, int n, int ell) {
  const BarbaBound b = barba_bound_sq(n, ell);
  return boost::multiprecision::sqrt(HighReal(det2) / b.approx);
}

CycMatrix adjugate(const CycMatrix& a) {
  const int n = a.n();
  CycMatrix adj(n, a.ell());
  if (n == 1) {
    adj(0, 0) = CycInt(a.ell(), 1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // cofactor C_ji goes to adj(i, j)
      CycMatrix minor(n - 1, a.ell());
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      CycInt d = det_exact(minor);
      adj(i, j) = (i + j) % 2 ? -d : d;
    }
  return adj;
}

bool is_positive_definite(const CycMatrix& a) {
  for (int k = 1; k <= a.n(); ++k) {
    CycInt d = det_exact(a.leading(k));
    if (!d.is_rational() || d.a() <= 0) return false;
  }
  return true;
}

namespace {

// conj(g)^T A g, a rational integer for Hermitian A.
BigInt form_value(const CycMatrix& A, const std::vector<const CycInt*>& g) {
  const int k = A.n();
  CycInt s(A.ell());
  for (int i = 0; i < k; ++i) {
    CycInt row(A.ell());
    for (int j = 0; j < k; ++j) row += A(i, j) * *g[j];
    s += g[i]->conj() * row;
  }
  if (!s.is_rational()) throw InternalError("Hermitian form produced a non-real value");
  return s.a();
}

}  // namespace

BigInt d_hat(const GramMatrix& D, const std::vector<CycInt>& phi, const BigInt& c) {
  if (phi.empty()) throw UsageError("d_hat needs a nonempty admissible set");
  if (!D.is_hermitian()) throw UsageError("d_hat needs a Hermitian matrix");
  const int r = D.n();
  for (const auto& x : phi)
    if (!same_ring(x.ell(), D.ell())) throw UsageError("admissible set and matrix use different rings");
  const BigInt det_d = det_gram(D);
  if (!is_positive_definite(D)) throw UsageError("d_hat needs a positive-definite matrix");
  const CycMatrix A = adjugate(D);
  bool have = false;
  BigInt best_q = 0;
  std::vector<const CycInt*> g(r);

  if (r <= 3) {
    // direct enumeration
    std::vector<int> idx(r, 0);
    for (;;) {
      for (int i = 0; i < r; ++i) g[i] = &phi[idx[i]];
      BigInt q = form_value(A, g);
      if (!have || q < best_q) {
        have = true;
        best_q = q;
      }
      int pos = 0;
      while (pos < r && ++idx[pos] == static_cast<int>(phi.size())) idx[pos++] = 0;
      if (pos == r) break;
    }
  } else {
    std::vector<FormEnumerator::C> af(static_cast<size_t>(r) * r), alph;
    const long double scale = static_cast<long double>(det_d);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) af[i * r + j] = A(i, j).to_complex_ld() / scale;
    for (const auto& x : phi) alph.push_back(x.to_complex_ld());
    FormEnumerator en(af, r, alph);
    if (!en.ok()) throw InternalError("Cholesky failed on a positive-definite adjugate");
    // any vector gives a starting radius
    for (int i = 0; i < r; ++i) g[i] = &phi[0];
    best_q = form_value(A, g);
    have = true;
    en.run(static_cast<long double>(best_q) / scale, [&](const std::vector<int>& idx, long double& radius) {
      for (int i = 0; i < r; ++i) g[i] = &phi[idx[i]];
      BigInt q = form_value(A, g);
      if (q < best_q) {
        best_q = q;
        radius = static_cast<long double>(best_q) / scale;
      }
      return true;
    });
  }
  return c * det_d - best_q;
}

MKContext make_mk_context(const GramMatrix& D, const std::vector<CycInt>& phi, int n, const BigInt& c) {
  MKContext ctx;
  ctx.n = n;
  ctx.c = c;
  ctx.r = D.n();
  ctx.det_d = det_gram(D);
  ctx.d_hat = d_hat(D, phi, c);
  return ctx;
}

BigInt mk_bound(int n, const BigInt& c, const BigInt& det_d, const BigInt& dhat, int r, int m) {
  if (r >= m) throw UsageError("mk_bound needs r < m");
  if (det_d <= 0) throw UsageError("mk_bound needs det D > 0");
  const BigInt nc = BigInt(n) - c;
  const BigInt dh = dhat > 0 ? dhat : BigInt(0);
  return ipow(nc, static_cast<unsigned>(m - r - 1)) * (nc * det_d + BigInt(m - r) * dh);
}

BigInt mk_bound(const MKContext& ctx, int m) { return mk_bound(ctx.n, ctx.c, ctx.det_d, ctx.d_hat, ctx.r, m); }

BigInt s_series(int n, int k) {
  if (k < 1) throw UsageError("S_k needs k >= 1");
  return 2 * ipow(BigInt(n - 1), k) - 2 * ipow(BigInt(n - 2), k) - BigInt(k) * ipow(BigInt(n - 2), k - 1);
}

BigInt mk_bound_2mod3(int n, const BigInt& det_d, const BigInt& dhat, int r) {
  if (n % 3 != 2) throw UsageError("the sharpened bound needs n = 2 (mod 3)");
  if (r >= n) throw UsageError("mk_bound_2mod3 needs r < n");
  if (det_d <= 0) throw UsageError("mk_bound_2mod3 needs det D > 0");
  const BigInt dh = dhat > 0 ? dhat : BigInt(0);
  return ipow(BigInt(n - 1), static_cast<unsigned>(n - r)) * det_d + dh * s_series(n, n - r);
}

BigInt mk_bound_2mod3(const MKContext& ctx) { return mk_bound_2mod3(ctx.n, ctx.det_d, ctx.d_hat, ctx.r); }

}  // namespace maxdet
