#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "splitq/polycore.hpp"
#include "splitq/typesys.hpp"

namespace splitq {

inline constexpr long long kDefaultSubspaceBudget = 1'000'000;
inline constexpr int kMaxFieldOrder = 64;

/// Small finite field F_q with q = p^e <= 64. Elements are encoded as
/// integers in [0, q): the residue itself when e = 1, otherwise the
/// polynomial residue sum c_i x^i encoded as sum c_i p^i, reduced modulo
/// the lexicographically smallest monic irreducible of degree e over F_p
/// (coefficients compared low-to-high). Cheap to copy: the arithmetic
/// tables sit behind a shared pointer.
class FqField {
public:
    int p() const;
    int e() const;
    int q() const;
    /// Modulus coefficients c_0..c_{e-1} (the leading 1 is implicit).
    const std::vector<int>& modulus() const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // RangeError on 0

    std::vector<int> element_coeffs(int a) const;       // base-p digits
    int element_from_coeffs(const std::vector<int>& c) const;

    bool operator==(const FqField& o) const;

private:
    friend FqField make_field(int p, int e);
    struct Tables;
    std::shared_ptr<const Tables> t_;
};

/// Throws NotPrime if p is composite, BudgetExceeded if p^e > 64.
FqField make_field(int p, int e);

/// All monic irreducible polynomials of degree d over F_q, as coefficient
/// vectors c_0..c_d (c_d = 1), in lexicographic order of (c_0,...,c_{d-1})
/// under the element encoding. Throws BudgetExceeded if q^d exceeds the
/// budget.
std::vector<std::vector<int>> irreducibles(const FqField& field, int d,
                                           long long budget = kDefaultSubspaceBudget);

/// Dense matrix over F_q, row-major, entries in the element encoding.
class FqMatrix {
public:
    FqMatrix(FqField field, int rows, int cols);

    const FqField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

    static FqMatrix identity(const FqField& field, int n);
    /// Companion matrix of a monic polynomial given as c_0..c_d (c_d = 1).
    static FqMatrix companion(const FqField& field, const std::vector<int>& poly);
    /// Block-diagonal stack of the given square blocks.
    static FqMatrix block_diagonal(const FqField& field,
                                   const std::vector<FqMatrix>& blocks);

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix transpose() const;
    FqMatrix pow(int e) const;  // square matrices

    int rank() const;
    int kernel_dimension() const;  // square or not: cols - rank
    bool is_invertible() const;
    FqMatrix inverse() const;  // RangeError if singular

    /// Evaluates a monic polynomial (coeffs c_0..c_d over F_q) at this
    /// square matrix.
    FqMatrix poly_eval(const std::vector<int>& poly) const;

    bool operator==(const FqMatrix& o) const;

private:
    FqField field_;
    int rows_, cols_;
    std::vector<int> data_;
};

/// k-dimensional subspace of F_q^n via its unique RREF basis.
struct Subspace {
    FqMatrix basis;          // k x n, reduced row echelon form
    std::vector<int> pivots; // 1-based pivot columns, strictly increasing

    int dim() const { return basis.rows(); }
    int ambient() const { return basis.cols(); }
};

/// Visits every k-dimensional subspace of F_q^n exactly once, enumerating
/// pivot sets and then free entries. Throws BudgetExceeded if the subspace
/// count exceeds the budget.
void for_each_subspace(const FqField& field, int n, int k,
                       const std::function<void(const Subspace&)>& fn,
                       long long budget = kDefaultSubspaceBudget);

std::vector<Subspace> subspaces(const FqField& field, int n, int k,
                                long long budget = kDefaultSubspaceBudget);

/// Block-diagonal matrix of companion matrices of p(t)^{lambda_i}, with
/// distinct irreducibles of each degree assigned in enumeration order.
/// Throws NotRealizable when F_q lacks enough irreducibles of some degree.
FqMatrix matrix_from_type(const SimilarityClassType& tau, const FqField& field,
                          long long budget = kDefaultSubspaceBudget);

/// Recovers the similarity class type of T from nullity jumps of powers of
/// irreducible factors: the number of parts of c_T(p) that are >= k equals
/// (dim ker p(T)^k - dim ker p(T)^{k-1}) / deg p.
SimilarityClassType classify_matrix(const FqMatrix& T,
                                    long long budget = kDefaultSubspaceBudget);

/// Exhaustive counts over the Grassmannian.
long long count_invariant(const FqMatrix& T, int k,
                          long long budget = kDefaultSubspaceBudget);
long long count_splitting(const FqMatrix& T, int m, int d = 2,
                          long long budget = kDefaultSubspaceBudget);
long long count_ab_oracle(const FqMatrix& T, int a, int b,
                          long long budget = kDefaultSubspaceBudget);

/// Number of non-singular Y in M_m(F_q) with Y_{ij} = 0 whenever
/// j < c_i - (i-1), by brute force over all free entries (c is the 1-based
/// pivot sequence). The closed form is (q-1)^m q^{C(m,2)} prod_j
/// [r_j - (j-1)]_q.
long long count_pattern_nonsingular(const FqField& field, const std::vector<int>& c,
                                    long long budget = kDefaultSubspaceBudget);
UniPoly pattern_closed_form(const std::vector<int>& c);

} // namespace splitq
