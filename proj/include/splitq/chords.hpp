#pragma once

#include <functional>
#include <vector>

#include "splitq/polycore.hpp"

namespace splitq {

/// Fixed-point-free involution on [2m], stored as a 1-based pairing array:
/// pairing()[i-1] == j iff nodes i and j are joined by an arc.
class ChordDiagram {
public:
    explicit ChordDiagram(std::vector<int> pairing);

    const std::vector<int>& pairing() const { return pairing_; }
    int arcs() const { return static_cast<int>(pairing_.size()) / 2; }

    /// Arcs as (opening, closing) pairs, ordered by opening node.
    std::vector<std::pair<int, int>> arc_list() const;
    /// Opening nodes in increasing order.
    std::vector<int> opening_nodes() const;

private:
    std::vector<int> pairing_;
};

/// Number of crossing arc pairs (i,j),(k,l) with i < k < j < l.
int crossings(const ChordDiagram& d);

/// Visits every fixed-point-free involution of [2m] exactly once, in the
/// canonical order that joins the smallest unpaired node to each larger
/// unpaired node in turn.
void for_each_diagram(int m, const std::function<void(const ChordDiagram&)>& fn);

inline constexpr long long kDefaultEnumBudget = 8;  // max m for brute force

/// T_m(q) = sum over diagrams of q^{crossings}. Throws BudgetExceeded when
/// m exceeds the budget ((2m-1)!! diagrams get enumerated).
UniPoly touchard_enum(int m, long long max_m = kDefaultEnumBudget);

/// Strictly increasing opening-node positions c_1 < ... < c_m in [1,2m],
/// validated on construction: c_j <= 2j-1 so at least one diagram exists.
class OpeningSet {
public:
    explicit OpeningSet(std::vector<int> c, int m);

    const std::vector<int>& positions() const { return c_; }
    int m() const { return m_; }

private:
    std::vector<int> c_;
    int m_;
};

/// r_j = #{i : c_i <= j + i - 1}, the number of openings left of the j-th
/// closing node, for j = 1..m. Works for any strictly increasing c.
std::vector<int> r_values(const std::vector<int>& c, int m);
std::vector<int> r_values(const OpeningSet& c);

/// prod_j [r_j - (j-1)]_q: the total q^{crossings} weight of diagrams with
/// the given opening set.
UniPoly refinement_contribution(const OpeningSet& c);

/// T_m(q) as the sum of refinement contributions over all m-subsets of
/// [2m]; invalid opening sets contribute a zero factor [n<=0]_q = 0.
UniPoly touchard_refine(int m);

/// sum_{j=0}^{2m} (-1)^j C(2m,j) q^{C(m-j+1,2)} = (q-1)^m T_m(q).
UniPoly touchard_riordan_rhs(int m);

} // namespace splitq
