#include "maxdet/bigint.hpp"

#include <limits>

#include "maxdet/errors.hpp"

namespace maxdet {

BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigInt ipow(long long base, unsigned exp) { return ipow(BigInt(base), exp); }

std::string to_string(const BigInt& v) { return v.str(); }

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw UsageError("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

bool is_perfect_square(const BigInt& v) {
  if (v < 0) return false;
  BigInt r = isqrt(v);
  return r * r == v;
}

}  // namespace maxdet
