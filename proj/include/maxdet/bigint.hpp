#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace maxdet {

using BigInt = boost::multiprecision::cpp_int;
using HighReal = boost::multiprecision::cpp_bin_float_50;

BigInt ipow(const BigInt& base, unsigned exp);
BigInt ipow(long long base, unsigned exp);

std::string to_string(const BigInt& v);

/// Value as int64 if it fits.
std::optional<std::int64_t> to_int64(const BigInt& v);

/// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);

bool is_perfect_square(const BigInt& v);

}  // namespace maxdet
