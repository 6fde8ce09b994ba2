/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"), so nothing passes
// through floating point.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mf/brackets.hpp"
#include "mf/configuration.hpp"
#include "mf/error.hpp"
#include "mf/forms.hpp"
#include "mf/matrix.hpp"
#include "mf/projective.hpp"
#include "mf/rational.hpp"
#include "mf/trees.hpp"
#include "mf/veronese.hpp"

namespace mf {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

/// Canonical representative.
inline Json to_json(const ProjectivePoint& p) { return to_json(p.canonical().coords()); }

inline Json to_json(const RationalMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row_vector(i)));
    return a;
}

inline Json to_json(const HomogeneousForm& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back(Json{{"exponents", m.exponents}, {"coeff", to_string(c)}});
    return Json{{"degree", f.degree()}, {"num_vars", f.num_vars()}, {"terms", std::move(terms)}};
}

inline Json to_json(const LinearSystem& s) {
    Json conds = Json::array();
    for (const auto& c : s.constraints) conds.push_back(Json{{"point", to_json(c.point)}, {"multiplicity", c.multiplicity}});
    Json basis = Json::array();
    for (const auto& f : s.basis) basis.push_back(to_json(f));
    return Json{{"ambient_dim", s.ambient_dim},
                {"degree", s.degree},
                {"conditions", std::move(conds)},
                {"dimension", s.dimension()},
                {"basis", std::move(basis)}};
}

inline Json to_json(const ParamCurve& c) {
    Json comps = Json::array();
    for (const auto& f : c.components()) comps.push_back(to_json(f.coeffs()));
    return Json{{"ambient_dim", c.ambient_dim()},
                {"degree", c.ambient_dim()},
                {"components", std::move(comps)},
                {"frame", to_json(c.frame())}};
}

inline Json to_json(const Configuration& c) {
    Json a = Json::array();
    for (const auto& p : c.points) a.push_back(to_json(p));
    return a;
}

inline Json to_json(const StableTree& t) {
    Json edges = Json::array();
    for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
    Json marking = Json::object();
    for (std::size_t l = 0; l < t.label_count(); ++l) marking[std::to_string(l + 1)] = t.marking()[l];
    return Json{{"vertices", t.vertex_count()}, {"edges", std::move(edges)}, {"marking", std::move(marking)}};
}

inline Json to_json(const ContractionResult& r) {
    if (const auto* c = std::get_if<Central>(&r)) return Json{{"central", c->vertex}, {"classes", c->classes}};
    const auto& s = std::get<BalancedSplit>(r);
    return Json{{"no_central", {s.side, s.complement}}};
}

namespace detail {

[[noreturn]] inline void bad_json(const std::string& what) { throw Error(ErrorKind::Parse, what); }

inline std::size_t json_index(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        bad_json(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

}  // namespace detail

/// Reads {vertices, edges: [[i, j]], marking: {"1": v, ...}}. Labels must be
/// exactly 1..n.
inline StableTree tree_from_json(const Json& j) {
    if (!j.is_object()) detail::bad_json("tree must be a JSON object");
    for (const char* key : {"vertices", "edges", "marking"}) {
        if (!j.contains(key)) detail::bad_json(std::string("tree is missing '") + key + "'");
    }
    const std::size_t v = detail::json_index(j["vertices"], "vertices");
    if (!j["edges"].is_array()) detail::bad_json("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) detail::bad_json("each edge is a pair [i, j]");
        edges.emplace_back(detail::json_index(e[0], "edge endpoint"), detail::json_index(e[1], "edge endpoint"));
    }
    const Json& mk = j["marking"];
    if (!mk.is_object()) detail::bad_json("marking must be an object label -> vertex");
    std::vector<std::size_t> marking(mk.size(), v);
    for (const auto& [key, value] : mk.items()) {
        std::size_t label = 0;
        try {
            std::size_t used = 0;
            label = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            detail::bad_json("marking key '" + key + "' is not a label");
        }
        if (label < 1 || label > marking.size()) detail::bad_json("labels must be 1..n, got " + key);
        if (marking[label - 1] != v) detail::bad_json("label " + key + " appears twice");
        marking[label - 1] = detail::json_index(value, "marking vertex");
        if (marking[label - 1] >= v) throw Error(ErrorKind::MalformedTree, "label " + key + " on a missing vertex");
    }
    return StableTree(v, std::move(edges), std::move(marking));
}

inline StableTree parse_tree(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    return tree_from_json(j);
}

}  // namespace mf
