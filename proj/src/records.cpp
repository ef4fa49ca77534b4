#include "maxdet/records.hpp"

#include "maxdet/bounds.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/norms.hpp"

namespace maxdet {

namespace {

BigInt p(long long b, unsigned e) { return ipow(BigInt(b), e); }

std::vector<Record> mu3() {
  // |det|^2 / 3^(n-1) as printed; n >= 14 except 18 have no maximality proof
  struct Row {
    int n;
    BigInt shown;
    bool proven;
  };
  const std::vector<Row> rows = {
      {1, 1, true},
      {2, 1, true},
      {3, 3, true},
      {4, 7, true},
      {5, 3 * 7, true},
      {6, p(2, 6) * 3, true},
      {7, p(2, 6) * 13, true},
      {8, p(2, 12), true},
      {9, p(3, 10), true},
      {10, p(3, 9) * 19, true},
      {11, p(3, 9) * 7 * 19, true},
      {12, p(2, 24) * 3, true},
      {13, p(2, 24) * 25, true},
      {14, p(2, 24) * 223, false},
      {15, p(2, 22) * p(3, 6) * 19, false},
      {16, p(2, 24) * p(3, 8) * 7, false},
      {17, p(13, 5) * p(67, 4), false},
      {18, p(2, 18) * p(3, 19), true},
      {19, BigInt(13) * p(37, 2) * p(342037, 2), false},
      {20, p(7, 6) * p(37, 6) * 127, false},
  };
  std::vector<Record> out;
  for (const auto& r : rows)
    out.push_back({r.n, 3, r.shown * p(3, r.n - 1), r.proven, r.proven ? "" : "unproven, source: thesis appendix"});
  return out;
}

std::vector<Record> mu4() {
  // even n: BH(n,4), |det|^2 = n^n; odd n: printed value times 2^(n-1)
  struct Row {
    int n;
    BigInt shown;
    bool proven;
  };
  const std::vector<Row> odd = {
      {1, 1, true},
      {3, 5, true},
      {5, p(2, 4) * 9, true},
      {7, p(3, 6) * 13, true},
      {9, p(4, 8) * 17, true},
      {11, BigInt(4) * p(5, 11), false},
      {13, p(6, 12) * 25, true},
      {15, p(7, 14) * 29, true},
      {17, BigInt(13) * p(137, 4) * p(1327, 2), false},
      {19, p(3, 36) * 37, true},
      {21, p(10, 20) * 41, true},
      {23, BigInt(45) * p(11, 22), true},
      {25, p(2, 48) * p(3, 24) * 49, true},
      {27, p(13, 26) * 53, true},
  };
  std::vector<Record> out;
  for (int n = 1; n <= 27; ++n) {
    if (n % 2 == 0) {
      out.push_back({n, 4, p(n, n), true, ""});
      continue;
    }
    for (const auto& r : odd)
      if (r.n == n) out.push_back({n, 4, r.shown * p(2, n - 1), r.proven, r.proven ? "" : "unproven"});
  }
  return out;
}

}  // namespace

const std::vector<Record>& record_table(int ell) {
  static const std::vector<Record> t3 = mu3(), t4 = mu4();
  if (ell == 3) return t3;
  if (ell == 4) return t4;
  throw UsageError("record tables exist for ell = 3 and ell = 4");
}

std::vector<RecordRow> record_rows(int ell) {
  std::vector<RecordRow> out;
  for (const auto& r : record_table(ell)) {
    RecordRow row{r, r.det2, "", 0};
    if (ell == 3 || r.n % 2 == 1) row.shown = r.det2 / p(ell == 3 ? 3 : 2, r.n - 1);
    row.factors = row.shown == 1 ? "1" : factorization_string(factorize(row.shown));
    row.ratio = static_cast<double>(record_ratio(r.det2, r.n, ell));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace maxdet
