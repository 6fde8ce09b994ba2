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

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mf/error.hpp"
#include "mf/projective.hpp"

namespace mf {

/// Ordered points of P^1. Collisions are allowed.
struct Configuration {
    std::vector<ProjectivePoint> points;

    Configuration() = default;
    explicit Configuration(std::vector<ProjectivePoint> pts) : points(std::move(pts)) {
        for (const auto& p : points) {
            if (p.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "configuration points live in P^1");
        }
    }

    std::size_t size() const noexcept { return points.size(); }
    const ProjectivePoint& operator[](std::size_t i) const { return points[i]; }
};

/// "s:t,s:t,..." using canonical representatives.
inline std::string to_string(const Configuration& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const ProjectivePoint p = c[i].canonical();
        if (i) out += ',';
        out += p[0].get_str() + ":" + p[1].get_str();
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Configuration& c) { return os << '(' << to_string(c) << ')'; }

inline Configuration parse_configuration(std::string_view text) {
    std::vector<ProjectivePoint> pts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        const std::string_view item = text.substr(start, end == std::string_view::npos ? end : end - start);
        if (item.find(':') == std::string_view::npos) {
            throw Error(ErrorKind::Parse, "configuration entries are s:t pairs, got '" + std::string(item) + "'");
        }
        pts.push_back(parse_point(item, ':'));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return Configuration(std::move(pts));
}

}  // namespace mf
