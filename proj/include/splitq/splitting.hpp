#pragma once

#include <map>

#include "splitq/invariants.hpp"
#include "splitq/polycore.hpp"
#include "splitq/typesys.hpp"

namespace splitq {

/// sigma^tau(q) = q^{C(m,2)} sum_{j=0}^{2m} (-1)^j X_j^tau(q) q^{C(m-j+1,2)}
/// for a type of size 2m. Throws OddSize on odd sizes.
UniPoly sigma_main(const SimilarityClassType& tau);

/// Same alternating sum applied to an explicit X-vector of length 2m+1.
UniPoly sigma_from_x(const std::vector<UniPoly>& x, int m);

/// Closed form q^{C(m,2)} (q^{C(m+1,2)} + q^{C(m,2)}) for the simple type
/// of size 2m.
UniPoly sigma_simple_closed(int m);

/// Counts |(a,b)_T| as polynomials in q, for T of a fixed type: the number
/// of a-dimensional subspaces W with dim(W intersect T^{-1}W) = b.
class IntersectionCountTable {
public:
    explicit IntersectionCountTable(const SimilarityClassType& tau);

    int n() const { return n_; }
    const UniPoly& at(int a, int b) const;  // RangeError outside n>=a>=b>=0

private:
    int n_;
    std::map<std::pair<int, int>, UniPoly> entries_;
};

/// |(a,b)_T| via the intersection-count recurrence, seeded by
/// count_ab(tau,a,a) = X_a^tau.
UniPoly count_ab(const SimilarityClassType& tau, int a, int b);

/// count_ab(tau, m, 0): the splitting count by the recurrence route. Must
/// agree with sigma_main on every type.
UniPoly sigma_via_recurrence(const SimilarityClassType& tau);

/// sum_{j=0}^{2m} (-1)^j qbin(m+i, j-k) q^{C(m-j+1,2)} == 0
/// for 1 <= i <= m, 0 <= k <= m-i.
bool vanishing_check(int m, int i, int k);

/// X-vector of tau_i straight from X_j = qbin(m+i,j) + qbin(m+i,j-m+i),
/// j = 0..2m. Covers the i = m edge where the type itself degenerates.
std::vector<UniPoly> tau_i_xvector(int m, int i);

/// True iff sigma applied to the tau_i X-vector is the zero polynomial.
bool tau_i_zero_check(int m, int i);

/// Determinant of the (m+1)x(m+1) matrix (X_j^{tau_i}(q)), i,j in [0,m],
/// row 0 taken from the simple type. Non-zero of degree m^2(m+1)/2.
UniPoly xmatrix_determinant(int m);

} // namespace splitq
