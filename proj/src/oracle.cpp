#include "splitq/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "splitq/chords.hpp"
#include "splitq/qcomb.hpp"

namespace splitq {

// ----------------------------------------------------------------- FqField

struct FqField::Tables {
    int p = 0, e = 0, q = 0;
    std::vector<int> modulus;  // c_0..c_{e-1}
    std::vector<int> add, mul, neg, inv;  // q*q (inv: q)
};

int FqField::p() const { return t_->p; }
int FqField::e() const { return t_->e; }
int FqField::q() const { return t_->q; }
const std::vector<int>& FqField::modulus() const { return t_->modulus; }

int FqField::add(int a, int b) const { return t_->add[static_cast<size_t>(a) * t_->q + b]; }
int FqField::sub(int a, int b) const { return add(a, neg(b)); }
int FqField::neg(int a) const { return t_->neg[static_cast<size_t>(a)]; }
int FqField::mul(int a, int b) const { return t_->mul[static_cast<size_t>(a) * t_->q + b]; }

int FqField::inv(int a) const {
    if (a == 0) throw RangeError("FqField::inv: zero has no inverse");
    return t_->inv[static_cast<size_t>(a)];
}

std::vector<int> FqField::element_coeffs(int a) const {
    std::vector<int> c(static_cast<size_t>(t_->e));
    for (int i = 0; i < t_->e; ++i) {
        c[static_cast<size_t>(i)] = a % t_->p;
        a /= t_->p;
    }
    return c;
}

int FqField::element_from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > t_->e)
        throw RangeError("element_from_coeffs: too many coefficients");
    int a = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (*it < 0 || *it >= t_->p)
            throw RangeError("element_from_coeffs: coefficient out of range");
        a = a * t_->p + *it;
    }
    return a;
}

bool FqField::operator==(const FqField& o) const {
    return t_->p == o.t_->p && t_->e == o.t_->e && t_->modulus == o.t_->modulus;
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ------------------- polynomials over F_q as coefficient vectors c_0..c_d

using Poly = std::vector<int>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const FqField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return r;
}

// Remainder of a by a monic divisor.
Poly poly_mod(const FqField& f, Poly a, const Poly& monic) {
    poly_trim(a);
    size_t d = monic.size() - 1;
    while (a.size() > d) {
        int lead = a.back();
        if (lead != 0) {
            size_t shift = a.size() - 1 - d;
            for (size_t i = 0; i < d; ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, monic[i]));
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= d) break;
    }
    return a;
}

Poly poly_pow(const FqField& f, const Poly& a, int e) {
    Poly r{1};
    for (int i = 0; i < e; ++i) r = poly_mul(f, r, a);
    return r;
}

// Visits monic degree-d polynomials in lexicographic order of
// (c_0, ..., c_{d-1}); returns false from fn to stop early.
void for_each_monic(const FqField& f, int d,
                    const std::function<bool(const Poly&)>& fn) {
    Poly c(static_cast<size_t>(d) + 1, 0);
    c.back() = 1;
    while (true) {
        if (!fn(c)) return;
        int i = d - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == f.q() - 1) {
            c[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++c[static_cast<size_t>(i)];
    }
}

std::vector<Poly> irreducibles_impl(const FqField& f, int d, long long budget) {
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= f.q();
        if (total > budget)
            throw BudgetExceeded("irreducibles: q^d exceeds budget");
    }
    // Build degree by degree; trial division by lower-degree irreducibles.
    std::vector<std::vector<Poly>> by_degree(static_cast<size_t>(d) + 1);
    for (int deg = 1; deg <= d; ++deg) {
        for_each_monic(f, deg, [&](const Poly& c) {
            bool irreducible = true;
            for (int dd = 1; irreducible && 2 * dd <= deg; ++dd)
                for (const Poly& p : by_degree[static_cast<size_t>(dd)]) {
                    if (poly_mod(f, c, p).empty()) {
                        irreducible = false;
                        break;
                    }
                }
            // Degree-1 factors double as the root test.
            if (irreducible && deg > 1) {
                for (const Poly& p : by_degree[1])
                    if (poly_mod(f, c, p).empty()) {
                        irreducible = false;
                        break;
                    }
            }
            if (irreducible) by_degree[static_cast<size_t>(deg)].push_back(c);
            return true;
        });
    }
    return by_degree[static_cast<size_t>(d)];
}

} // namespace

FqField make_field(int p, int e) {
    if (!is_prime(p)) throw NotPrime("make_field: p is not prime");
    if (e < 1) throw RangeError("make_field: e must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw BudgetExceeded("make_field: p^e exceeds the q <= 64 bound");
    }

    auto tables = std::make_shared<FqField::Tables>();
    tables->p = p;
    tables->e = e;
    tables->q = static_cast<int>(q);

    if (e == 1) {
        tables->modulus = {};
    } else {
        FqField fp = make_field(p, 1);
        auto irr = irreducibles_impl(fp, e, kDefaultSubspaceBudget);
        // for_each_monic emits candidates in lexicographic coefficient
        // order, so the first irreducible is the canonical modulus.
        Poly m = irr.front();
        tables->modulus.assign(m.begin(), m.end() - 1);
    }

    int qi = tables->q;
    tables->add.resize(static_cast<size_t>(qi) * qi);
    tables->mul.resize(static_cast<size_t>(qi) * qi);
    tables->neg.resize(static_cast<size_t>(qi));
    tables->inv.assign(static_cast<size_t>(qi), 0);

    auto digits = [&](int a) {
        std::vector<int> c(static_cast<size_t>(e));
        for (int i = 0; i < e; ++i) {
            c[static_cast<size_t>(i)] = a % p;
            a /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (int i = e - 1; i >= 0; --i) a = a * p + c[static_cast<size_t>(i)];
        return a;
    };

    for (int a = 0; a < qi; ++a) {
        auto da = digits(a);
        auto dn = da;
        for (auto& x : dn) x = (p - x) % p;
        tables->neg[static_cast<size_t>(a)] = encode(dn);
        for (int b = 0; b < qi; ++b) {
            auto db = digits(b);
            std::vector<int> s(static_cast<size_t>(e));
            for (int i = 0; i < e; ++i)
                s[static_cast<size_t>(i)] =
                    (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
            tables->add[static_cast<size_t>(a) * qi + b] = encode(s);

            // Product of residues modulo the field modulus, all over F_p.
            std::vector<int> prod(static_cast<size_t>(2 * e) - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[static_cast<size_t>(i + j)] =
                        (prod[static_cast<size_t>(i + j)] +
                         da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p;
            if (e > 1) {
                for (int k = 2 * e - 2; k >= e; --k) {
                    int lead = prod[static_cast<size_t>(k)];
                    if (lead == 0) continue;
                    prod[static_cast<size_t>(k)] = 0;
                    for (int i = 0; i < e; ++i) {
                        int& slot = prod[static_cast<size_t>(k - e + i)];
                        slot = ((slot - lead * tables->modulus[static_cast<size_t>(i)]) % p + p) % p;
                    }
                }
            }
            prod.resize(static_cast<size_t>(e));
            tables->mul[static_cast<size_t>(a) * qi + b] = encode(prod);
        }
    }
    for (int a = 1; a < qi; ++a)
        for (int b = 1; b < qi; ++b)
            if (tables->mul[static_cast<size_t>(a) * qi + b] == 1) {
                tables->inv[static_cast<size_t>(a)] = b;
                break;
            }

    FqField f;
    f.t_ = std::move(tables);
    return f;
}

std::vector<std::vector<int>> irreducibles(const FqField& field, int d,
                                           long long budget) {
    if (d < 1) throw RangeError("irreducibles: d must be >= 1");
    return irreducibles_impl(field, d, budget);
}

// ---------------------------------------------------------------- FqMatrix

FqMatrix::FqMatrix(FqField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw RangeError("FqMatrix: negative dimension");
}

FqMatrix FqMatrix::identity(const FqField& field, int n) {
    FqMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::companion(const FqField& field, const std::vector<int>& poly) {
    int d = static_cast<int>(poly.size()) - 1;
    if (d < 1 || poly.back() != 1)
        throw RangeError("companion: polynomial must be monic of degree >= 1");
    FqMatrix m(field, d, d);
    for (int i = 1; i < d; ++i) m.set(i, i - 1, 1);
    for (int i = 0; i < d; ++i)
        m.set(i, d - 1, field.neg(poly[static_cast<size_t>(i)]));
    return m;
}

FqMatrix FqMatrix::block_diagonal(const FqField& field,
                                  const std::vector<FqMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw DimensionMismatch("block must be square");
        n += b.rows();
    }
    FqMatrix m(field, n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.set(off + i, off + j, b.at(i, j));
        off += b.rows();
    }
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    FqMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                int prod = field_.mul(a, o.at(k, j));
                r.set(i, j, field_.add(r.at(i, j), prod));
            }
        }
    return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    FqMatrix r(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, field_.add(at(i, j), o.at(i, j)));
    return r;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

FqMatrix FqMatrix::pow(int e) const {
    if (rows_ != cols_) throw DimensionMismatch("pow: matrix must be square");
    FqMatrix r = identity(field_, rows_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int FqMatrix::rank() const {
    FqMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) {
                int tmp = m.at(rank, j);
                m.set(rank, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        int inv = field_.inv(m.at(rank, col));
        for (int j = col; j < cols_; ++j) m.set(rank, j, field_.mul(inv, m.at(rank, j)));
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            int factor = m.at(r, col);
            if (factor == 0) continue;
            for (int j = col; j < cols_; ++j)
                m.set(r, j, field_.sub(m.at(r, j), field_.mul(factor, m.at(rank, j))));
        }
        ++rank;
    }
    return rank;
}

int FqMatrix::kernel_dimension() const { return cols_ - rank(); }

bool FqMatrix::is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
}

FqMatrix FqMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse: matrix must be square");
    int n = rows_;
    FqMatrix m = *this;
    FqMatrix inv = identity(field_, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw RangeError("inverse: singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(m.data_[static_cast<size_t>(col) * n + j],
                      m.data_[static_cast<size_t>(pivot) * n + j]);
            std::swap(inv.data_[static_cast<size_t>(col) * n + j],
                      inv.data_[static_cast<size_t>(pivot) * n + j]);
        }
        int scale = field_.inv(m.at(col, col));
        for (int j = 0; j < n; ++j) {
            m.set(col, j, field_.mul(scale, m.at(col, j)));
            inv.set(col, j, field_.mul(scale, inv.at(col, j)));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int factor = m.at(r, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                m.set(r, j, field_.sub(m.at(r, j), field_.mul(factor, m.at(col, j))));
                inv.set(r, j, field_.sub(inv.at(r, j), field_.mul(factor, inv.at(col, j))));
            }
        }
    }
    return inv;
}

FqMatrix FqMatrix::poly_eval(const std::vector<int>& poly) const {
    if (rows_ != cols_) throw DimensionMismatch("poly_eval: matrix must be square");
    FqMatrix acc(field_, rows_, rows_);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * *this;
        for (int i = 0; i < rows_; ++i) acc.set(i, i, field_.add(acc.at(i, i), *it));
    }
    return acc;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
}

// ------------------------------------------------------ subspace streaming

namespace {

void enum_free_entries(const FqField& field, FqMatrix& basis,
                       const std::vector<std::pair<int, int>>& free_pos, size_t idx,
                       const std::vector<int>& pivots,
                       const std::function<void(const Subspace&)>& fn) {
    if (idx == free_pos.size()) {
        fn(Subspace{basis, pivots});
        return;
    }
    auto [r, c] = free_pos[idx];
    for (int v = 0; v < field.q(); ++v) {
        basis.set(r, c, v);
        enum_free_entries(field, basis, free_pos, idx + 1, pivots, fn);
    }
    basis.set(r, c, 0);
}

void enum_pivot_sets(const FqField& field, int n, int k, std::vector<int>& pivots,
                     int next, const std::function<void(const Subspace&)>& fn) {
    if (static_cast<int>(pivots.size()) == k) {
        FqMatrix basis(field, k, n);
        std::vector<bool> is_pivot(static_cast<size_t>(n) + 1, false);
        for (int i = 0; i < k; ++i) {
            basis.set(i, pivots[static_cast<size_t>(i)] - 1, 1);
            is_pivot[static_cast<size_t>(pivots[static_cast<size_t>(i)])] = true;
        }
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[static_cast<size_t>(i)] + 1; j <= n; ++j)
                if (!is_pivot[static_cast<size_t>(j)]) free_pos.emplace_back(i, j - 1);
        enum_free_entries(field, basis, free_pos, 0, pivots, fn);
        return;
    }
    int placed = static_cast<int>(pivots.size());
    for (int c = next; c <= n - (k - placed) + 1; ++c) {
        pivots.push_back(c);
        enum_pivot_sets(field, n, k, pivots, c + 1, fn);
        pivots.pop_back();
    }
}

} // namespace

void for_each_subspace(const FqField& field, int n, int k,
                       const std::function<void(const Subspace&)>& fn,
                       long long budget) {
    if (k < 0 || k > n) throw RangeError("for_each_subspace: need 0 <= k <= n");
    Int total = gaussian_binomial(n, k).eval(field.q());
    if (total > budget)
        throw BudgetExceeded("for_each_subspace: subspace count exceeds budget");
    std::vector<int> pivots;
    enum_pivot_sets(field, n, k, pivots, 1, fn);
}

std::vector<Subspace> subspaces(const FqField& field, int n, int k,
                                long long budget) {
    std::vector<Subspace> out;
    for_each_subspace(field, n, k, [&](const Subspace& s) { out.push_back(s); },
                      budget);
    return out;
}

// --------------------------------------------------------- type <-> matrix

FqMatrix matrix_from_type(const SimilarityClassType& tau, const FqField& field,
                          long long budget) {
    // Distinct irreducibles per degree, assigned in enumeration order; the
    // canonical pair order of tau makes the result deterministic.
    std::map<int, std::vector<Poly>> irr_by_degree;
    std::map<int, size_t> next_index;
    std::vector<FqMatrix> blocks;
    for (const auto& [d, lambda] : tau.pairs()) {
        auto it = irr_by_degree.find(d);
        if (it == irr_by_degree.end())
            it = irr_by_degree.emplace(d, irreducibles_impl(field, d, budget)).first;
        size_t& idx = next_index[d];
        if (idx >= it->second.size())
            throw NotRealizable("matrix_from_type: not enough irreducibles of degree " +
                                std::to_string(d) + " over F_" +
                                std::to_string(field.q()));
        const Poly& p = it->second[idx++];
        for (int part : lambda.parts())
            blocks.push_back(FqMatrix::companion(field, poly_pow(field, p, part)));
    }
    return FqMatrix::block_diagonal(field, blocks);
}

SimilarityClassType classify_matrix(const FqMatrix& T, long long budget) {
    if (T.rows() != T.cols())
        throw DimensionMismatch("classify_matrix: matrix must be square");
    const FqField& field = T.field();
    int n = T.rows();
    int remaining = n;
    std::vector<SimilarityClassType::Pair> pairs;
    for (int d = 1; d <= n && remaining > 0; ++d) {
        if (d > remaining) break;
        for (const Poly& p : irreducibles_impl(field, d, budget)) {
            FqMatrix pt = T.poly_eval(p);
            int prev_nullity = 0;
            FqMatrix power = FqMatrix::identity(field, n);
            std::vector<int> parts_ge;  // parts_ge[k-1] = #parts >= k
            for (int k = 1; k <= n; ++k) {
                power = power * pt;
                int nullity = power.kernel_dimension();
                int jump = (nullity - prev_nullity) / d;
                if (jump == 0) break;
                parts_ge.push_back(jump);
                prev_nullity = nullity;
            }
            if (parts_ge.empty()) continue;
            std::vector<int> parts;
            for (int idx = 0; idx < parts_ge[0]; ++idx) {
                int part = 0;
                for (size_t k = 0; k < parts_ge.size(); ++k)
                    if (parts_ge[k] > idx) part = static_cast<int>(k) + 1;
                parts.push_back(part);
            }
            Partition lambda(parts);
            remaining -= d * lambda.size();
            pairs.emplace_back(d, std::move(lambda));
            if (remaining == 0) break;
        }
    }
    return SimilarityClassType(std::move(pairs));
}

// --------------------------------------------------------------- counting

namespace {

// Rows of B followed by the images B T^t, ..., B (T^{d-1})^t, stacked.
FqMatrix stack_images(const FqMatrix& basis, const FqMatrix& T, int d) {
    const FqField& field = basis.field();
    int k = basis.rows(), n = basis.cols();
    FqMatrix tt = T.transpose();
    FqMatrix stacked(field, k * d, n);
    FqMatrix cur = basis;
    for (int block = 0; block < d; ++block) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) stacked.set(block * k + i, j, cur.at(i, j));
        if (block + 1 < d) cur = cur * tt;
    }
    return stacked;
}

} // namespace

long long count_invariant(const FqMatrix& T, int k, long long budget) {
    if (T.rows() != T.cols())
        throw DimensionMismatch("count_invariant: matrix must be square");
    int n = T.rows();
    if (k < 0 || k > n) throw RangeError("count_invariant: need 0 <= k <= n");
    long long count = 0;
    for_each_subspace(T.field(), n, k, [&](const Subspace& s) {
        // W invariant iff dim(W + TW) = dim W.
        if (stack_images(s.basis, T, 2).rank() == k) ++count;
    }, budget);
    return count;
}

long long count_splitting(const FqMatrix& T, int m, int d, long long budget) {
    if (T.rows() != T.cols())
        throw DimensionMismatch("count_splitting: matrix must be square");
    int n = T.rows();
    if (d < 1 || m < 0 || n != d * m)
        throw DimensionMismatch("count_splitting: need n = d*m");
    long long count = 0;
    for_each_subspace(T.field(), n, m, [&](const Subspace& s) {
        if (stack_images(s.basis, T, d).rank() == n) ++count;
    }, budget);
    return count;
}

long long count_ab_oracle(const FqMatrix& T, int a, int b, long long budget) {
    if (T.rows() != T.cols())
        throw DimensionMismatch("count_ab_oracle: matrix must be square");
    int n = T.rows();
    if (!(n >= a && a >= b && b >= 0))
        throw RangeError("count_ab_oracle: need n >= a >= b >= 0");
    long long count = 0;
    for_each_subspace(T.field(), n, a, [&](const Subspace& s) {
        // dim(W intersect T^{-1}W) = 2 dim W - dim(W + TW).
        int inter = 2 * a - stack_images(s.basis, T, 2).rank();
        if (inter == b) ++count;
    }, budget);
    return count;
}

// ----------------------------------------------------------- pattern lemma

long long count_pattern_nonsingular(const FqField& field, const std::vector<int>& c,
                                    long long budget) {
    int m = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        if (c[static_cast<size_t>(i)] < 1 || c[static_cast<size_t>(i)] > 2 * m)
            throw RangeError("count_pattern_nonsingular: pivot out of range");
        if (i > 0 && c[static_cast<size_t>(i)] <= c[static_cast<size_t>(i) - 1])
            throw RangeError("count_pattern_nonsingular: pivots must increase");
    }
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (j >= c[static_cast<size_t>(i) - 1] - (i - 1))
                free_pos.emplace_back(i - 1, j - 1);
    long long total = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) {
        total *= field.q();
        if (total > budget)
            throw BudgetExceeded("count_pattern_nonsingular: sweep exceeds budget");
    }
    FqMatrix y(field, m, m);
    long long count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == free_pos.size()) {
            if (y.is_invertible()) ++count;
            return;
        }
        auto [r, cc] = free_pos[idx];
        for (int v = 0; v < field.q(); ++v) {
            y.set(r, cc, v);
            rec(idx + 1);
        }
        y.set(r, cc, 0);
    };
    rec(0);
    return count;
}

UniPoly pattern_closed_form(const std::vector<int>& c) {
    int m = static_cast<int>(c.size());
    UniPoly qm1 = UniPoly::var() - UniPoly::constant(1);
    UniPoly result = qm1.pow(m) * UniPoly::monomial(1, static_cast<int>(binom2(m)));
    auto r = r_values(c, m);
    for (int j = 1; j <= m; ++j)
        result = result * q_integer(r[static_cast<size_t>(j) - 1] - (j - 1));
    return result;
}

} // namespace splitq
