#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "splitq/errors.hpp"

namespace splitq {

using Int = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i; the last stored
/// coefficient is non-zero unless the polynomial is zero (empty vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Int c);
    static UniPoly monomial(Int c, int exponent);
    static UniPoly var();  // q

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Int coeff(int i) const;

    Int eval(const Int& q0) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly pow(int e) const;

    bool operator==(const UniPoly& o) const = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Int> c_;
};

/// Exact bivariate polynomial in (q, t). The t-exponent is always
/// non-negative; the q-exponent may go negative in intermediate values
/// (Laurent), which the Ramare recurrence relies on. Zero coefficients
/// are never stored, so equality is structural.
class BivarPoly {
public:
    struct Key {
        int et;
        int eq;
        auto operator<=>(const Key&) const = default;
    };
    using TermMap = std::map<Key, Int>;

    BivarPoly() = default;

    static BivarPoly constant(Int c);
    static BivarPoly monomial(Int c, int eq, int et);
    static BivarPoly var_q() { return monomial(1, 1, 0); }
    static BivarPoly var_t() { return monomial(1, 0, 1); }
    static BivarPoly from_uni(const UniPoly& p);  // polynomial in q

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;  // no negative q-exponents
    int degree_t() const;        // -1 for zero

    void add_term(int eq, int et, const Int& c);

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator-() const;

    bool operator==(const BivarPoly& o) const = default;

    /// t -> t * q^k (k may be negative).
    BivarPoly subst_t_shift_q(int k) const;
    /// q -> q^d, t -> t^d with d >= 1.
    BivarPoly subst_powers(int d) const;
    /// t -> integer constant c.
    BivarPoly subst_t_value(const Int& c) const;

    /// Exact division by (t - 1). Throws NonZeroRemainder if not divisible.
    BivarPoly divide_exact_t_minus_1() const;

    /// Coefficient of t^j as a polynomial in q. Throws LaurentLeak if the
    /// slice contains a negative q-exponent.
    UniPoly coefficient_in_t(int j) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Division restricted to the one divisor the recurrence needs.
BivarPoly divide_exact(const BivarPoly& p, const BivarPoly& divisor);

Int eval_q(const UniPoly& p, const Int& q0);
UniPoly coefficient_in_t(const BivarPoly& p, int j);

} // namespace splitq
