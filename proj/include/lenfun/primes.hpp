#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "lenfun/gamma.hpp"

namespace lenfun {

/// Deterministic Miller-Rabin primality test. Valid (and checked) for
/// n < 3317044064679887385961981; inputs in this project stay far below.
bool is_prime(const Int& n);

/// Complete factorization via trial division and Pollard-Brent rho.
/// Returns prime -> exponent in increasing prime order; 1 maps to {}.
std::map<Int, int> factorize(const Int& n);

/// p-adic valuation of n (n != 0).
int p_adic_valuation(const Int& n, const Int& p);

/// The i-th prime, 1-based: nth_prime(1) == 2.
Int nth_prime(int index);

/// 1-based position of a prime in the sequence of all primes.
int prime_index(const Int& p);

}  // namespace lenfun
