#include "splitq/json_io.hpp"

#include <limits>

#include "splitq/chords.hpp"

namespace splitq {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() &&
        v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    throw ParseError("expected integer or decimal string");
}

json unipoly_to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return json{{"var", "q"}, {"coeffs", coeffs}};
}

UniPoly unipoly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
    return UniPoly(std::move(coeffs));
}

json bivar_to_json(const BivarPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(json::array({k.eq, k.et, int_to_json(c)}));
    return json{{"vars", json::array({"q", "t"})}, {"terms", terms}};
}

BivarPoly bivar_from_json(const json& j) {
    BivarPoly p;
    for (const auto& term : j.at("terms"))
        p.add_term(term.at(0).get<int>(), term.at(1).get<int>(),
                   int_from_json(term.at(2)));
    return p;
}

json type_to_json(const SimilarityClassType& tau) {
    json pairs = json::array();
    for (const auto& [d, lambda] : tau.pairs())
        pairs.push_back(json::array({d, lambda.parts()}));
    return json{{"pairs", pairs}};
}

SimilarityClassType type_from_json(const json& j) {
    std::vector<SimilarityClassType::Pair> pairs;
    for (const auto& pr : j.at("pairs"))
        pairs.emplace_back(pr.at(0).get<int>(),
                           Partition(pr.at(1).get<std::vector<int>>()));
    return SimilarityClassType(std::move(pairs));
}

json matrix_to_json(const FqMatrix& m) {
    const FqField& f = m.field();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            if (f.e() == 1) row.push_back(m.at(i, j));
            else row.push_back(f.element_coeffs(m.at(i, j)));
        }
        entries.push_back(row);
    }
    return json{{"p", f.p()}, {"e", f.e()}, {"rows", m.rows()},
                {"cols", m.cols()}, {"entries", entries}};
}

FqMatrix matrix_from_json(const json& j) {
    FqField field = make_field(j.at("p").get<int>(), j.at("e").get<int>());
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    FqMatrix m(field, rows, cols);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
        throw ParseError("matrix entries: wrong row count");
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != cols)
            throw ParseError("matrix entries: wrong column count");
        for (int c = 0; c < cols; ++c) {
            const auto& cell = row.at(static_cast<size_t>(c));
            int v;
            if (cell.is_array())
                v = field.element_from_coeffs(cell.get<std::vector<int>>());
            else
                v = cell.get<int>();
            if (v < 0 || v >= field.q())
                throw ParseError("matrix entry out of range");
            m.set(i, c, v);
        }
    }
    return m;
}

json diagram_to_json(const ChordDiagram& d) { return json(d.pairing()); }

} // namespace splitq
