#pragma once

#include "splitq/polycore.hpp"

namespace splitq {

/// [n]_q = 1 + q + ... + q^{n-1}; zero for n <= 0.
UniPoly q_integer(int n);

/// Gaussian binomial coefficient as a polynomial in q. Zero when k < 0 or
/// k > n; degree (n-k)k otherwise. Built by the q-Pascal recurrence
/// qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k).
UniPoly gaussian_binomial(int n, int k);

/// C(x,2) = x(x-1)/2 on all integers, negative x included.
long long binom2(long long x);

/// Ordinary binomial coefficient; zero when k < 0 or k > n.
Int binomial(int n, int k);

/// Checks the q-binomial theorem
///   sum_j qbin(n,j) q^{C(j,2)} x^j = prod_{j=0}^{n-1} (1 + q^j x)
/// with x instantiated as sign * q^{x_exponent} (sign in {+1,-1},
/// x_exponent any integer; both sides compared as Laurent polynomials).
bool q_binomial_theorem_check(int n, int x_exponent, int sign);

} // namespace splitq
