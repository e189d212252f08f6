#include "splitq/qcomb.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace splitq {

UniPoly q_integer(int n) {
    if (n <= 0) return UniPoly();
    return UniPoly(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

namespace {

std::mutex qbin_mutex;
std::map<std::pair<int, int>, UniPoly> qbin_memo;

UniPoly qbin_compute(int n, int k) {
    // Row-by-row q-Pascal fill; no division involved.
    std::vector<UniPoly> row{UniPoly::constant(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<UniPoly> next(static_cast<size_t>(std::min(i, k)) + 1);
        next[0] = UniPoly::constant(1);
        for (int j = 1; j < static_cast<int>(next.size()); ++j) {
            UniPoly upper = (j < static_cast<int>(row.size()))
                                ? UniPoly::monomial(1, j) * row[static_cast<size_t>(j)]
                                : UniPoly();
            next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + upper;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

} // namespace

UniPoly gaussian_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return UniPoly();
    if (k == 0 || k == n) return UniPoly::constant(1);
    std::lock_guard<std::mutex> lock(qbin_mutex);
    auto it = qbin_memo.find({n, k});
    if (it != qbin_memo.end()) return it->second;
    UniPoly r = qbin_compute(n, k);
    qbin_memo.emplace(std::make_pair(n, k), r);
    return r;
}

long long binom2(long long x) { return x * (x - 1) / 2; }

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool q_binomial_theorem_check(int n, int x_exponent, int sign) {
    if (sign != 1 && sign != -1)
        throw RangeError("q_binomial_theorem_check: sign must be +1 or -1");
    if (n < 0) throw RangeError("q_binomial_theorem_check: n must be >= 0");

    // x = sign * q^{x_exponent}; everything lives in Laurent polynomials
    // in q, represented as BivarPoly with t-exponent 0.
    BivarPoly lhs;
    for (int j = 0; j <= n; ++j) {
        Int s = (j % 2 == 0 || sign == 1) ? 1 : -1;
        UniPoly qb = gaussian_binomial(n, j);
        int shift = static_cast<int>(binom2(j)) + j * x_exponent;
        for (int i = 0; i <= qb.degree(); ++i)
            lhs.add_term(i + shift, 0, s * qb.coeff(i));
    }
    BivarPoly rhs = BivarPoly::constant(1);
    for (int j = 0; j < n; ++j) {
        BivarPoly factor = BivarPoly::constant(1);
        factor.add_term(j + x_exponent, 0, Int(sign));
        rhs = rhs * factor;
    }
    return lhs == rhs;
}

} // namespace splitq
