#pragma once

#include <string>
#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

/// A record |det|^2 at order n over mu_ell.
struct Record {
  int n = 0;
  int ell = 0;
  BigInt det2;
  bool proven = false;
  std::string note;
};

/// mu_3 for n = 1..20, mu_4 for n = 1..27.
const std::vector<Record>& record_table(int ell);

struct RecordRow {
  Record rec;
  BigInt shown;        // det2 / ell^(n-1) for mu_3; odd n over mu_4 divide by 2^(n-1)
  std::string factors; // of `shown`
  double ratio = 0;    // |det| over the Hadamard or Barba bound
};

std::vector<RecordRow> record_rows(int ell);

}  // namespace maxdet
