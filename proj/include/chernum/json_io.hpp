#pragma once

// JSON forms. Rationals are strings in lowest terms; partitions are arrays of
// parts; object keys follow canonical partition order. Output is
// deterministic, so dump() of equal values is byte-identical.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chern_vector.hpp"
#include "partitions.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

namespace chernum {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (int part : p.parts()) a.push_back(part);
    return a;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be in decreasing order");
    return Partition(parts);
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const YPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

inline YPolynomial ypolynomial_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
    return YPolynomial(std::move(c));
}

inline Json to_json(const ChernVector& v) {
    Json coeffs = Json::object();
    for (const auto& [p, c] : v.terms()) coeffs[to_string(p)] = to_string(c);
    return Json{{"n", v.degree()}, {"coeffs", coeffs}};
}

inline ChernVector chern_vector_from_json(const Json& j) {
    ChernVector v(j.at("n").get<int>());
    for (const auto& [key, value] : j.at("coeffs").items())
        v.add(partition_from_json(Json::parse(key)), parse_rational(value.get<std::string>()));
    return v;
}

inline Json to_json(const RowQ& row) {
    Json a = Json::array();
    for (const auto& c : row) a.push_back(to_string(c));
    return a;
}

inline Json to_json(const MatrixQ& m) {
    Json a = Json::array();
    for (const auto& r : m.data()) a.push_back(to_json(r));
    return a;
}

inline MatrixQ matrix_from_json(const Json& j, std::size_t cols) {
    MatrixQ m(0, cols);
    for (const auto& r : j) {
        RowQ row;
        for (const auto& v : r) row.push_back(parse_rational(v.get<std::string>()));
        m.append_row(std::move(row));
    }
    return m;
}

/// {"n": n, "ambient": pi(n), "basis": [[...]]}
inline Json to_json(const SubspaceQ& s, int n) {
    return Json{{"n", n}, {"ambient", s.ambient()}, {"basis", to_json(s.basis())}};
}

inline SubspaceQ subspace_from_json(const Json& j) {
    const auto ambient = j.at("ambient").get<std::size_t>();
    if (ambient != partition_count(j.at("n").get<int>())) throw std::invalid_argument("ambient is not pi(n)");
    const SubspaceQ s = SubspaceQ::row_space(matrix_from_json(j.at("basis"), ambient));
    if (!(s.basis() == matrix_from_json(j.at("basis"), ambient)))
        throw std::invalid_argument("subspace basis is not in reduced row-echelon form");
    return s;
}

}  // namespace chernum
