#include "splitq/chords.hpp"

#include <algorithm>

#include "splitq/qcomb.hpp"

namespace splitq {

ChordDiagram::ChordDiagram(std::vector<int> pairing)
    : pairing_(std::move(pairing)) {
    int n = static_cast<int>(pairing_.size());
    if (n % 2 != 0) throw ValidationError("pairing array must have even length");
    for (int i = 1; i <= n; ++i) {
        int j = pairing_[static_cast<size_t>(i) - 1];
        if (j < 1 || j > n) throw ValidationError("pairing value out of range");
        if (j == i) throw ValidationError("involution must be fixed-point-free");
        if (pairing_[static_cast<size_t>(j) - 1] != i)
            throw ValidationError("pairing array is not an involution");
    }
}

std::vector<std::pair<int, int>> ChordDiagram::arc_list() const {
    std::vector<std::pair<int, int>> arcs;
    int n = static_cast<int>(pairing_.size());
    for (int i = 1; i <= n; ++i) {
        int j = pairing_[static_cast<size_t>(i) - 1];
        if (i < j) arcs.emplace_back(i, j);
    }
    return arcs;
}

std::vector<int> ChordDiagram::opening_nodes() const {
    std::vector<int> open;
    for (const auto& [i, j] : arc_list()) open.push_back(i);
    return open;
}

int crossings(const ChordDiagram& d) {
    auto arcs = d.arc_list();
    int count = 0;
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t b = a + 1; b < arcs.size(); ++b) {
            auto [i, j] = arcs[a];
            auto [k, l] = arcs[b];
            if (i < k && k < j && j < l) ++count;
        }
    return count;
}

namespace {

void enum_diagrams(std::vector<int>& pairing,
                   const std::function<void(const ChordDiagram&)>& fn) {
    int n = static_cast<int>(pairing.size());
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (pairing[static_cast<size_t>(i)] == 0) {
            first = i;
            break;
        }
    if (first < 0) {
        fn(ChordDiagram(pairing));
        return;
    }
    for (int j = first + 1; j < n; ++j) {
        if (pairing[static_cast<size_t>(j)] != 0) continue;
        pairing[static_cast<size_t>(first)] = j + 1;
        pairing[static_cast<size_t>(j)] = first + 1;
        enum_diagrams(pairing, fn);
        pairing[static_cast<size_t>(first)] = 0;
        pairing[static_cast<size_t>(j)] = 0;
    }
}

} // namespace

void for_each_diagram(int m, const std::function<void(const ChordDiagram&)>& fn) {
    if (m < 0) throw RangeError("for_each_diagram: m must be >= 0");
    std::vector<int> pairing(static_cast<size_t>(2 * m), 0);
    enum_diagrams(pairing, fn);
}

UniPoly touchard_enum(int m, long long max_m) {
    if (m < 0) throw RangeError("touchard_enum: m must be >= 0");
    if (m > max_m)
        throw BudgetExceeded("touchard_enum: m exceeds enumeration budget");
    std::map<int, Int> hist;
    for_each_diagram(m, [&](const ChordDiagram& d) { hist[crossings(d)] += 1; });
    UniPoly sum;
    for (const auto& [v, c] : hist) sum = sum + UniPoly::monomial(c, v);
    return sum;
}

OpeningSet::OpeningSet(std::vector<int> c, int m) : c_(std::move(c)), m_(m) {
    if (static_cast<int>(c_.size()) != m)
        throw ValidationError("opening set must have m positions");
    for (int j = 0; j < m; ++j) {
        int v = c_[static_cast<size_t>(j)];
        if (v < 1 || v > 2 * m) throw ValidationError("opening node out of range");
        if (j > 0 && v <= c_[static_cast<size_t>(j) - 1])
            throw ValidationError("opening nodes must be strictly increasing");
        if (v > 2 * j + 1)  // c_{j+1} <= 2(j+1)-1, else no diagram exists
            throw ValidationError("opening set admits no chord diagram");
    }
}

std::vector<int> r_values(const std::vector<int>& c, int m) {
    std::vector<int> r(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        int count = 0;
        for (int i = 1; i <= m; ++i)
            if (c[static_cast<size_t>(i) - 1] <= j + i - 1) ++count;
        r[static_cast<size_t>(j) - 1] = count;
    }
    return r;
}

std::vector<int> r_values(const OpeningSet& c) {
    return r_values(c.positions(), c.m());
}

namespace {

UniPoly contribution_from_positions(const std::vector<int>& c, int m) {
    UniPoly prod = UniPoly::constant(1);
    auto r = r_values(c, m);
    for (int j = 1; j <= m; ++j) {
        prod = prod * q_integer(r[static_cast<size_t>(j) - 1] - (j - 1));
        if (prod.is_zero()) break;
    }
    return prod;
}

} // namespace

UniPoly refinement_contribution(const OpeningSet& c) {
    return contribution_from_positions(c.positions(), c.m());
}

UniPoly touchard_refine(int m) {
    if (m < 0) throw RangeError("touchard_refine: m must be >= 0");
    if (m == 0) return UniPoly::constant(1);
    // Walk all m-subsets of [2m] in lexicographic order.
    std::vector<int> c(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) c[static_cast<size_t>(i)] = i + 1;
    UniPoly sum;
    while (true) {
        sum = sum + contribution_from_positions(c, m);
        int i = m - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == 2 * m - (m - 1 - i)) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
    }
    return sum;
}

UniPoly touchard_riordan_rhs(int m) {
    if (m < 0) throw RangeError("touchard_riordan_rhs: m must be >= 0");
    UniPoly sum;
    for (int j = 0; j <= 2 * m; ++j) {
        UniPoly term =
            UniPoly::monomial(binomial(2 * m, j), static_cast<int>(binom2(m - j + 1)));
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

} // namespace splitq
