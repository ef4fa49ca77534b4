#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace maxdet {

/// Walks index vectors x in {0..m-1}^k whose Hermitian form
///   Q(x) = sum_ij conj(a[x_i]) A_ij a[x_j]
/// may lie below a radius. Pruning uses a long-double Cholesky factor with
/// an absolute slack, so every vector with exact Q <= radius is visited;
/// some with Q slightly above may be visited too and the visitor must test
/// exactly.
class FormEnumerator {
 public:
  using C = std::complex<long double>;

  /// A is k x k row-major Hermitian positive definite.
  FormEnumerator(const std::vector<C>& A, int k, const std::vector<C>& alphabet) : k_(k), alpha_(alphabet) {
    long double amax = 0, trace = 0;
    for (const auto& z : alpha_) amax = std::max(amax, std::norm(z));
    for (int i = 0; i < k; ++i) trace += std::abs(A[i * k + i]);
    slack_ = 1e-9L * (1.0L + trace * amax * k);
    R_.assign(static_cast<size_t>(k) * k, C(0));
    for (int i = 0; i < k; ++i) {
      long double d = A[i * k + i].real();
      for (int t = 0; t < i; ++t) d -= std::norm(R_[t * k + i]);
      if (!(d > 0)) {
        ok_ = false;
        return;
      }
      const long double rii = std::sqrt(d);
      R_[i * k + i] = rii;
      for (int j = i + 1; j < k; ++j) {
        C s = A[i * k + j];
        for (int t = 0; t < i; ++t) s -= std::conj(R_[t * k + i]) * R_[t * k + j];
        R_[i * k + j] = s / rii;
      }
    }
  }

  bool ok() const { return ok_; }
  long double slack() const { return slack_; }

  /// visit(const std::vector<int>& idx, long double& radius) -> bool (false stops).
  /// The visitor may lower radius to tighten the remaining walk.
  template <class Visit>
  void run(long double radius, Visit&& visit) const {
    if (k_ == 0) {
      std::vector<int> none;
      visit(none, radius);
      return;
    }
    const int k = k_, m = static_cast<int>(alpha_.size());
    std::vector<int> idx(k, 0);
    std::vector<long double> partial(k + 1, 0);
    std::vector<C> tail(k, C(0));
    // level i fixes x_i, going from k-1 down to 0
    int i = k - 1;
    tail[i] = compute_tail(idx, i);
    idx[i] = -1;
    for (;;) {
      bool descended = false;
      while (++idx[i] < m) {
        const C s = R_[i * k + i] * alpha_[idx[i]] + tail[i];
        const long double p = partial[i + 1] + std::norm(s);
        if (p > radius + slack_) continue;
        if (i == 0) {
          if (!visit(idx, radius)) return;
          continue;
        }
        partial[i] = p;
        --i;
        tail[i] = compute_tail(idx, i);
        idx[i] = -1;
        descended = true;
        break;
      }
      if (descended) continue;
      if (++i == k) return;
    }
  }

 private:
  C compute_tail(const std::vector<int>& idx, int i) const {
    C s(0);
    for (int j = i + 1; j < k_; ++j) s += R_[i * k_ + j] * alpha_[idx[j]];
    return s;
  }

  int k_;
  std::vector<C> alpha_;
  std::vector<C> R_;
  long double slack_ = 0;
  bool ok_ = true;
};

}  // namespace maxdet
