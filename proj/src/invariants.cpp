#include "splitq/invariants.hpp"

#include <map>
#include <mutex>

namespace splitq {

namespace {

std::mutex f_mutex;
std::map<Partition, BivarPoly> f_memo;

BivarPoly ramare_f_impl(const Partition& lambda) {
    if (lambda.empty()) return BivarPoly::constant(1);
    {
        std::lock_guard<std::mutex> lock(f_mutex);
        auto it = f_memo.find(lambda);
        if (it != f_memo.end()) return it->second;
    }
    BivarPoly f_tail = ramare_f_impl(lambda.tail());
    BivarPoly lhs = BivarPoly::monomial(1, lambda.sum_tail(), lambda.first() + 1) *
                        f_tail.subst_t_shift_q(-1) -
                    f_tail.subst_t_shift_q(1);
    BivarPoly f = lhs.divide_exact_t_minus_1();
    if (!f.is_polynomial())
        throw LaurentLeak("ramare_f: quotient is not a polynomial");
    std::lock_guard<std::mutex> lock(f_mutex);
    f_memo.emplace(lambda, f);
    return f;
}

} // namespace

BivarPoly ramare_f(const Partition& lambda) { return ramare_f_impl(lambda); }

BivarPoly f_tau(const SimilarityClassType& tau) {
    BivarPoly prod = BivarPoly::constant(1);
    for (const auto& [d, lambda] : tau.pairs())
        prod = prod * ramare_f(lambda).subst_powers(d);
    return prod;
}

InvariantProfile x_polys(const SimilarityClassType& tau) {
    InvariantProfile prof;
    prof.tau = tau;
    prof.n = tau.size();
    prof.f = f_tau(tau);
    prof.X.reserve(static_cast<size_t>(prof.n) + 1);
    for (int j = 0; j <= prof.n; ++j)
        prof.X.push_back(prof.f.coefficient_in_t(j));
    return prof;
}

} // namespace splitq
