#pragma once

#include "splitq/polycore.hpp"
#include "splitq/typesys.hpp"

namespace splitq {

/// Generating function f_lambda(q;t) for the invariant subspaces of the
/// nilpotent matrix with Jordan block sizes lambda, computed by the
/// recurrence
///   (t-1) f_lambda(q;t) = t^{lambda_1+1} q^{|lambda|-lambda_1}
///                          f_tail(q; t/q) - f_tail(q; t q),
/// base case f_{}(q;t) = 1. The right side transits through Laurent
/// exponents in q; the quotient is always a true polynomial.
BivarPoly ramare_f(const Partition& lambda);

/// f_tau(q;t) = prod over pairs (d,lambda) of f_lambda(q^d; t^d).
BivarPoly f_tau(const SimilarityClassType& tau);

/// f together with the coefficient slices X[j] = X_j^tau(q), 0 <= j <= n.
struct InvariantProfile {
    SimilarityClassType tau;
    int n = 0;
    BivarPoly f;
    std::vector<UniPoly> X;
};

InvariantProfile x_polys(const SimilarityClassType& tau);

} // namespace splitq
