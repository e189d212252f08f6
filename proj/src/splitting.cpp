#include "splitq/splitting.hpp"

#include "splitq/qcomb.hpp"

namespace splitq {

UniPoly sigma_from_x(const std::vector<UniPoly>& x, int m) {
    if (static_cast<int>(x.size()) != 2 * m + 1)
        throw RangeError("sigma_from_x: X-vector must have length 2m+1");
    UniPoly sum;
    for (int j = 0; j <= 2 * m; ++j) {
        int e = static_cast<int>(binom2(m - j + 1));
        UniPoly term = x[static_cast<size_t>(j)] * UniPoly::monomial(1, e);
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return UniPoly::monomial(1, static_cast<int>(binom2(m))) * sum;
}

UniPoly sigma_main(const SimilarityClassType& tau) {
    int n = tau.size();
    if (n % 2 != 0) throw OddSize("sigma_main: type size must be even");
    return sigma_from_x(x_polys(tau).X, n / 2);
}

UniPoly sigma_simple_closed(int m) {
    if (m < 1) throw RangeError("sigma_simple_closed: m must be >= 1");
    int b = static_cast<int>(binom2(m));
    UniPoly inner = UniPoly::monomial(1, static_cast<int>(binom2(m + 1))) +
                    UniPoly::monomial(1, b);
    return UniPoly::monomial(1, b) * inner;
}

IntersectionCountTable::IntersectionCountTable(const SimilarityClassType& tau)
    : n_(tau.size()) {
    const auto X = x_polys(tau).X;
    // Fill a ascending, b descending; the recurrence for (a,b) consults
    // (b,j) with j < b <= a and (a,k) with b < k <= a, all already present.
    for (int a = 0; a <= n_; ++a) {
        entries_[{a, a}] = X[static_cast<size_t>(a)];
        for (int b = a - 1; b >= 0; --b) {
            UniPoly v = X[static_cast<size_t>(b)] * gaussian_binomial(n_ - b, a - b) -
                        X[static_cast<size_t>(a)] * gaussian_binomial(a, b);
            for (int j = 0; j <= b - 1; ++j)
                v = v + entries_.at({b, j}) *
                            gaussian_binomial(n_ - 2 * b + j, a - 2 * b + j);
            for (int k = b + 1; k <= a - 1; ++k)
                v = v - entries_.at({a, k}) * gaussian_binomial(k, b);
            entries_[{a, b}] = v;
        }
    }
}

const UniPoly& IntersectionCountTable::at(int a, int b) const {
    if (!(n_ >= a && a >= b && b >= 0))
        throw RangeError("IntersectionCountTable: need n >= a >= b >= 0");
    return entries_.at({a, b});
}

UniPoly count_ab(const SimilarityClassType& tau, int a, int b) {
    return IntersectionCountTable(tau).at(a, b);
}

UniPoly sigma_via_recurrence(const SimilarityClassType& tau) {
    int n = tau.size();
    if (n % 2 != 0) throw OddSize("sigma_via_recurrence: type size must be even");
    return count_ab(tau, n / 2, 0);
}

bool vanishing_check(int m, int i, int k) {
    if (m < 1 || i < 1 || i > m || k < 0 || k > m - i)
        throw RangeError("vanishing_check: need 1 <= i <= m, 0 <= k <= m-i");
    UniPoly sum;
    for (int j = 0; j <= 2 * m; ++j) {
        UniPoly term = gaussian_binomial(m + i, j - k) *
                       UniPoly::monomial(1, static_cast<int>(binom2(m - j + 1)));
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum.is_zero();
}

std::vector<UniPoly> tau_i_xvector(int m, int i) {
    if (m < 1 || i < 1 || i > m) throw RangeError("tau_i_xvector: need 1 <= i <= m");
    std::vector<UniPoly> x;
    x.reserve(static_cast<size_t>(2 * m) + 1);
    for (int j = 0; j <= 2 * m; ++j)
        x.push_back(gaussian_binomial(m + i, j) +
                    gaussian_binomial(m + i, j - m + i));
    return x;
}

bool tau_i_zero_check(int m, int i) {
    return sigma_from_x(tau_i_xvector(m, i), m).is_zero();
}

namespace {

UniPoly det_cofactor(const std::vector<std::vector<UniPoly>>& a,
                     std::vector<int>& cols, int row) {
    int n = static_cast<int>(a.size());
    if (row == n) return UniPoly::constant(1);
    UniPoly det;
    for (size_t pos = 0; pos < cols.size(); ++pos) {
        int c = cols[pos];
        if (a[static_cast<size_t>(row)][static_cast<size_t>(c)].is_zero()) continue;
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(pos));
        UniPoly sub = a[static_cast<size_t>(row)][static_cast<size_t>(c)] *
                      det_cofactor(a, rest, row + 1);
        det = (pos % 2 == 0) ? det + sub : det - sub;
    }
    return det;
}

} // namespace

UniPoly xmatrix_determinant(int m) {
    if (m < 1) throw RangeError("xmatrix_determinant: m must be >= 1");
    std::vector<std::vector<UniPoly>> a(static_cast<size_t>(m) + 1);
    // Row 0: the simple type, X = (1, 0, ..., 0) on columns 0..m.
    a[0].assign(static_cast<size_t>(m) + 1, UniPoly());
    a[0][0] = UniPoly::constant(1);
    for (int i = 1; i <= m; ++i) {
        auto x = tau_i_xvector(m, i);
        a[static_cast<size_t>(i)].assign(x.begin(), x.begin() + m + 1);
    }
    std::vector<int> cols(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) cols[static_cast<size_t>(j)] = j;
    return det_cofactor(a, cols, 0);
}

} // namespace splitq
