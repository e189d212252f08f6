#include "splitq/typesys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splitq {

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw ValidationError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::tail() const {
    if (parts_.empty()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

int Partition::sum_tail() const {
    return parts_.empty() ? 0 : size() - parts_.front();
}

bool Partition::operator<(const Partition& o) const {
    // Reverse-lex: lexicographically larger part sequence comes first.
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw RangeError("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

// --------------------------------------------------- SimilarityClassType

namespace {

bool pair_less(const SimilarityClassType::Pair& a,
               const SimilarityClassType::Pair& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

} // namespace

SimilarityClassType::SimilarityClassType(std::vector<Pair> pairs)
    : pairs_(std::move(pairs)) {
    for (const auto& [d, lambda] : pairs_) {
        if (d < 1) throw ValidationError("pair degree must be positive");
        if (lambda.empty())
            throw ValidationError("pair partition must be non-empty");
    }
    std::sort(pairs_.begin(), pairs_.end(), pair_less);
}

int SimilarityClassType::size() const {
    int n = 0;
    for (const auto& [d, lambda] : pairs_) n += d * lambda.size();
    return n;
}

bool SimilarityClassType::operator<(const SimilarityClassType& o) const {
    return std::lexicographical_compare(pairs_.begin(), pairs_.end(),
                                        o.pairs_.begin(), o.pairs_.end(),
                                        pair_less);
}

namespace {

// All candidate pairs of weight d*|lambda| <= n, in canonical pair order.
std::vector<SimilarityClassType::Pair> candidate_pairs(int n) {
    std::vector<SimilarityClassType::Pair> items;
    for (int d = 1; d <= n; ++d)
        for (int w = 1; d * w <= n; ++w)
            for (const auto& lambda : partitions_of(w))
                items.emplace_back(d, lambda);
    std::sort(items.begin(), items.end(), pair_less);
    return items;
}

void gen_types(const std::vector<SimilarityClassType::Pair>& items,
               size_t from, int remaining,
               std::vector<SimilarityClassType::Pair>& acc,
               std::vector<SimilarityClassType>& out) {
    if (remaining == 0) {
        out.push_back(SimilarityClassType(acc));
        return;
    }
    for (size_t i = from; i < items.size(); ++i) {
        int w = items[i].first * items[i].second.size();
        if (w > remaining) continue;
        acc.push_back(items[i]);
        gen_types(items, i, remaining - w, acc, out);  // same item may repeat
        acc.pop_back();
    }
}

} // namespace

std::vector<SimilarityClassType> types_of_size(int n) {
    if (n < 1) throw RangeError("types_of_size: n must be >= 1");
    auto items = candidate_pairs(n);
    std::vector<SimilarityClassType> out;
    std::vector<SimilarityClassType::Pair> acc;
    gen_types(items, 0, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------- parse/format

SimilarityClassType parse_type(const std::string& s) {
    std::vector<SimilarityClassType::Pair> pairs;
    std::istringstream entries(s);
    std::string entry;
    bool any = false;
    while (std::getline(entries, entry, ';')) {
        any = true;
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw ParseError("type entry missing ':': " + entry);
        int d = 0;
        try {
            size_t used = 0;
            d = std::stoi(entry.substr(0, colon), &used);
            if (used != colon) throw ParseError("bad degree: " + entry);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad degree in type entry: " + entry);
        }
        if (d < 1) throw ParseError("degree must be positive: " + entry);
        std::vector<int> parts;
        std::istringstream plist(entry.substr(colon + 1));
        std::string tok;
        while (std::getline(plist, tok, ',')) {
            try {
                size_t used = 0;
                int p = std::stoi(tok, &used);
                if (used != tok.size()) throw ParseError("bad part: " + tok);
                if (p < 1) throw ParseError("parts must be positive: " + tok);
                parts.push_back(p);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad part in type entry: " + entry);
            }
        }
        if (parts.empty())
            throw ValidationError("empty partition in type entry: " + entry);
        std::sort(parts.rbegin(), parts.rend());
        pairs.emplace_back(d, Partition(parts));
    }
    if (!any) throw ParseError("empty type string");
    return SimilarityClassType(std::move(pairs));
}

std::string format_type(const SimilarityClassType& tau) {
    std::ostringstream os;
    const auto& pairs = tau.pairs();
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ";";
        os << pairs[i].first << ":" << pairs[i].second.to_string();
    }
    return os.str();
}

// ----------------------------------------------------------- named families

SimilarityClassType scalar_type(int n) {
    return SimilarityClassType(
        {{1, Partition(std::vector<int>(static_cast<size_t>(n), 1))}});
}

SimilarityClassType regular_split_semisimple(int n) {
    std::vector<SimilarityClassType::Pair> pairs(
        static_cast<size_t>(n), {1, Partition({1})});
    return SimilarityClassType(std::move(pairs));
}

SimilarityClassType regular_nilpotent(int n) {
    return SimilarityClassType({{1, Partition({n})}});
}

SimilarityClassType simple_type(int n) {
    return SimilarityClassType({{n, Partition({1})}});
}

SimilarityClassType tau_i_type(int m, int i) {
    if (m < 1 || i < 1 || i > m) throw RangeError("tau_i_type: need 1 <= i <= m");
    if (i == m) return scalar_type(2 * m);
    Partition ones(std::vector<int>(static_cast<size_t>(m + i), 1));
    return SimilarityClassType({{1, ones}, {m - i, Partition({1})}});
}

} // namespace splitq
