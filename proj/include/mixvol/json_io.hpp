#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "mixvol/body.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/report.hpp"
#include "mixvol/sym_matrix.hpp"

namespace mixvol {

using nlohmann::json;

// ---------------------------------------------------------------------------
// SymMatrix: {"dim": n, "rows": [[...], ...]}, exact symmetry required.
// ---------------------------------------------------------------------------

inline json to_json(const SymMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

inline SymMatrix sym_matrix_from_json(const json& j) {
    const int n = j.at("dim").get<int>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("sym_matrix_from_json: row count != dim");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("sym_matrix_from_json: ragged rows");
        for (int c = 0; c < n; ++c)
            m(i, c) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get<double>();
    }
    for (int i = 0; i < n; ++i)
        for (int c = i + 1; c < n; ++c)
            if (m(i, c) != m(c, i))
                throw std::invalid_argument("sym_matrix_from_json: matrix is not exactly symmetric");
    return SymMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Bodies: {"kind": ..., kind-specific fields}.
// ---------------------------------------------------------------------------

namespace detail {

inline json vec_to_json(const Vec& v) { return json(v); }

inline Vec vec_from_json(const json& j) { return j.get<Vec>(); }

inline json points_to_json(const std::vector<Vec>& pts) {
    json arr = json::array();
    for (const Vec& p : pts) arr.push_back(vec_to_json(p));
    return arr;
}

inline std::vector<Vec> points_from_json(const json& j) {
    std::vector<Vec> pts;
    for (const auto& e : j) pts.push_back(vec_from_json(e));
    return pts;
}

}  // namespace detail

inline json to_json(const BodySpec& k) {
    return std::visit(
        detail::overloaded{
            [&](const Polytope& p) {
                return json{{"kind", "polytope"},
                            {"dim", p.dim},
                            {"vertices", detail::points_to_json(p.vertices)}};
            },
            [&](const Zonotope& z) {
                return json{{"kind", "zonotope"},
                            {"dim", z.dim},
                            {"center", detail::vec_to_json(z.center)},
                            {"generators", detail::points_to_json(z.generators)}};
            },
            [&](const Ball& b) {
                return json{{"kind", "ball"},
                            {"dim", b.dim},
                            {"center", detail::vec_to_json(b.center)},
                            {"radius", b.radius}};
            },
            [&](const Segment& s) {
                return json{{"kind", "segment"},
                            {"dim", s.dim},
                            {"a", detail::vec_to_json(s.a)},
                            {"b", detail::vec_to_json(s.b)}};
            },
            [&](const TruncatedPrism& t) {
                return json{{"kind", "truncated_prism"},
                            {"dim", t.dim},
                            {"eps", t.eps},
                            {"M", t.M}};
            }},
        k);
}

inline BodySpec body_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int dim = j.at("dim").get<int>();
    if (kind == "polytope")
        return Polytope(dim, detail::points_from_json(j.at("vertices")));
    if (kind == "zonotope")
        return Zonotope(dim, detail::vec_from_json(j.at("center")),
                        detail::points_from_json(j.at("generators")));
    if (kind == "ball")
        return Ball(dim, detail::vec_from_json(j.at("center")), j.at("radius").get<double>());
    if (kind == "segment")
        return Segment(dim, detail::vec_from_json(j.at("a")), detail::vec_from_json(j.at("b")));
    if (kind == "truncated_prism")
        return TruncatedPrism(dim, j.at("eps").get<double>(), j.at("M").get<double>());
    throw std::invalid_argument("body_from_json: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Mixed-volume argument lists: {"dim": n, "items": [{"body":..., "multiplicity":...}]}.
// ---------------------------------------------------------------------------

inline BodyArgs body_args_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<std::pair<BodySpec, int>> items;
    for (const auto& e : j.at("items"))
        items.emplace_back(body_from_json(e.at("body")), e.at("multiplicity").get<int>());
    return BodyArgs(dim, std::move(items));
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

inline json to_json(const InequalityReport& r) {
    json j{{"name", r.name},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"gap", r.gap},
           {"relative_gap", r.relative_gap},
           {"verdict", to_string(r.verdict)},
           {"inputs_digest", r.inputs_digest},
           {"tolerances", r.tolerances}};
    if (r.equality_case) j["equality_case"] = *r.equality_case;
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace mixvol
