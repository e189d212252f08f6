#pragma once

#include <string>
#include <utility>
#include <vector>

#include "splitq/errors.hpp"

namespace splitq {

/// Integer partition: weakly decreasing sequence of positive parts. The
/// empty sequence is the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.front(); }
    Partition tail() const;          // drop the largest part
    int sum_tail() const;            // sum of parts_[1..]

    bool operator==(const Partition& o) const = default;
    /// Canonical (reverse-lexicographic) order: (4) before (3,1) before
    /// (2,2) etc. Enables use as a map key.
    bool operator<(const Partition& o) const;

    std::string to_string() const;   // "2,1,1"

private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Similarity class type: a multiset of (degree, partition) pairs with
/// every partition non-empty. Stored canonically, sorted by (d, partition),
/// repeats adjacent, so multiset equality is structural equality.
class SimilarityClassType {
public:
    using Pair = std::pair<int, Partition>;

    SimilarityClassType() = default;
    explicit SimilarityClassType(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const { return pairs_; }
    int size() const;                // sum of d * |lambda|

    bool operator==(const SimilarityClassType& o) const = default;
    bool operator<(const SimilarityClassType& o) const;

private:
    std::vector<Pair> pairs_;
};

/// Every similarity class type of size n, each exactly once, in canonical
/// order.
std::vector<SimilarityClassType> types_of_size(int n);

/// Grammar: entries separated by ";", each entry "d:p1,p2,...". Repeated
/// entries accumulate multiplicity.
SimilarityClassType parse_type(const std::string& s);
std::string format_type(const SimilarityClassType& tau);

// Named families that recur throughout.
SimilarityClassType scalar_type(int n);              // {(1,(1^n))}
SimilarityClassType regular_split_semisimple(int n); // {(1,(1))} x n
SimilarityClassType regular_nilpotent(int n);        // {(1,(n))}
SimilarityClassType simple_type(int n);              // {(n,(1))}

/// tau_i = {(1,(1^{m+i})), (m-i,(1))} for 1 <= i < m. At i = m the second
/// pair would have degree zero; the zero-degree factor is dropped and the
/// type degenerates to the scalar type of size 2m.
SimilarityClassType tau_i_type(int m, int i);

} // namespace splitq
