#pragma once

#include <utility>
#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

using Factorization = std::vector<std::pair<BigInt, unsigned>>;

/// Prime factorization of m >= 1, primes ascending.
Factorization factorize(const BigInt& m);

bool is_probable_prime(const BigInt& m);

/// True iff m = N(alpha) for some alpha in Z[omega] (ell = 3) or Z[i] (ell = 4).
bool is_norm_integer(const BigInt& m, int ell);

/// Primes dividing m to odd multiplicity that violate the norm condition for ell.
std::vector<BigInt> norm_obstructions(const BigInt& m, int ell);

/// e.g. "2^6*3^9*5*13".
std::string factorization_string(const Factorization& f);

}  // namespace maxdet
