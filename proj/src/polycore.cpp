#include "splitq/polycore.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace splitq {

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(Int c) {
    UniPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(Int c, int exponent) {
    UniPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(exponent) + 1, Int(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

UniPoly UniPoly::var() { return monomial(1, 1); }

Int UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

Int UniPoly::eval(const Int& q0) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(int e) const {
    UniPoly acc = constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Int& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// --------------------------------------------------------------- BivarPoly

BivarPoly BivarPoly::constant(Int c) { return monomial(std::move(c), 0, 0); }

BivarPoly BivarPoly::monomial(Int c, int eq, int et) {
    BivarPoly p;
    if (c != 0) p.terms_.emplace(Key{et, eq}, std::move(c));
    return p;
}

BivarPoly BivarPoly::from_uni(const UniPoly& p) {
    BivarPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(i, 0, p.coeff(i));
    return r;
}

bool BivarPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.eq >= 0; });
}

int BivarPoly::degree_t() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.et;
}

void BivarPoly::add_term(int eq, int et, const Int& c) {
    if (c == 0) return;
    Key k{et, eq};
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.eq, k.et, c);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.eq, k.et, -c);
    return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.eq + kb.eq, ka.et + kb.et, ca * cb);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BivarPoly BivarPoly::subst_t_shift_q(int k) const {
    BivarPoly r;
    for (const auto& [key, c] : terms_) r.add_term(key.eq + k * key.et, key.et, c);
    return r;
}

BivarPoly BivarPoly::subst_powers(int d) const {
    if (d < 1) throw RangeError("subst_powers: d must be >= 1");
    BivarPoly r;
    for (const auto& [key, c] : terms_) r.add_term(key.eq * d, key.et * d, c);
    return r;
}

BivarPoly BivarPoly::subst_t_value(const Int& c) const {
    BivarPoly r;
    for (const auto& [key, coef] : terms_) {
        Int scale = 1;
        for (int i = 0; i < key.et; ++i) scale *= c;
        r.add_term(key.eq, 0, coef * scale);
    }
    return r;
}

BivarPoly BivarPoly::divide_exact_t_minus_1() const {
    // Synthetic division in t; coefficients are Laurent polynomials in q.
    // With p = sum a_j t^j of t-degree d, the quotient b satisfies
    // b_{d-1} = a_d and b_{j-1} = a_j + b_j; remainder a_0 + b_0.
    if (is_zero()) return BivarPoly();
    int d = degree_t();
    std::vector<std::map<int, Int>> a(static_cast<size_t>(d) + 1);
    for (const auto& [key, c] : terms_) a[static_cast<size_t>(key.et)][key.eq] = c;

    auto add_into = [](std::map<int, Int>& dst, const std::map<int, Int>& src) {
        for (const auto& [eq, c] : src) {
            auto [it, ins] = dst.try_emplace(eq, c);
            if (!ins) {
                it->second += c;
                if (it->second == 0) dst.erase(it);
            }
        }
    };

    BivarPoly quotient;
    std::map<int, Int> carry;  // b_j while walking j = d-1 .. 0
    for (int j = d - 1; j >= 0; --j) {
        add_into(carry, a[static_cast<size_t>(j) + 1]);
        for (const auto& [eq, c] : carry) quotient.add_term(eq, j, c);
    }
    add_into(carry, a[0]);
    if (!carry.empty())
        throw NonZeroRemainder("division by (t - 1) left a non-zero remainder");
    return quotient;
}

UniPoly BivarPoly::coefficient_in_t(int j) const {
    if (j < 0) throw RangeError("coefficient_in_t: j must be >= 0");
    std::vector<Int> coeffs;
    auto lo = terms_.lower_bound(Key{j, std::numeric_limits<int>::min()});
    auto hi = terms_.upper_bound(Key{j, std::numeric_limits<int>::max()});
    for (auto it = lo; it != hi; ++it) {
        if (it->first.eq < 0)
            throw LaurentLeak("coefficient_in_t: negative q-exponent in slice");
        if (static_cast<int>(coeffs.size()) <= it->first.eq)
            coeffs.resize(static_cast<size_t>(it->first.eq) + 1, Int(0));
        coeffs[static_cast<size_t>(it->first.eq)] = it->second;
    }
    return UniPoly(std::move(coeffs));
}

std::string BivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool need_coeff = (a != 1) || (k.eq == 0 && k.et == 0);
        if (need_coeff) os << a.str();
        bool prev = need_coeff;
        if (k.eq != 0) {
            if (prev) os << "*";
            os << "q";
            if (k.eq != 1) os << "^" << k.eq;
            prev = true;
        }
        if (k.et != 0) {
            if (prev) os << "*";
            os << "t";
            if (k.et != 1) os << "^" << k.et;
        }
    }
    return os.str();
}

// --------------------------------------------------------- free functions

BivarPoly divide_exact(const BivarPoly& p, const BivarPoly& divisor) {
    BivarPoly t_minus_1 = BivarPoly::var_t() - BivarPoly::constant(1);
    if (!(divisor == t_minus_1))
        throw RangeError("divide_exact: only division by (t - 1) is supported");
    return p.divide_exact_t_minus_1();
}

Int eval_q(const UniPoly& p, const Int& q0) { return p.eval(q0); }

UniPoly coefficient_in_t(const BivarPoly& p, int j) { return p.coefficient_in_t(j); }

} // namespace splitq
