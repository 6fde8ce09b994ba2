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

// Dual trees of stable pointed genus-0 curves: stability, central vertex,
// the combinatorial contraction onto the central component, enumeration.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mf/error.hpp"

namespace mf {

using Label = unsigned;                   // 1-based marking label
using LabelSet = std::vector<Label>;      // sorted
using Edge = std::pair<std::size_t, std::size_t>;

/// Tree with labels 1..n attached to vertices. The constructor checks that
/// the edges form a tree; stability is reported by is_stable.
class StableTree {
public:
    StableTree(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::size_t> vertex_of_label)
        : vertex_count_(vertex_count), edges_(std::move(edges)), vertex_of_label_(std::move(vertex_of_label)) {
        if (vertex_count_ == 0) throw Error(ErrorKind::MalformedTree, "tree without vertices");
        if (edges_.size() + 1 != vertex_count_) {
            throw Error(ErrorKind::MalformedTree, std::to_string(edges_.size()) + " edges on " +
                                                      std::to_string(vertex_count_) + " vertices is not a tree");
        }
        adjacency_.resize(vertex_count_);
        for (auto& [a, b] : edges_) {
            if (a >= vertex_count_ || b >= vertex_count_ || a == b) {
                throw Error(ErrorKind::MalformedTree, "bad edge", std::to_string(a) + "-" + std::to_string(b));
            }
            if (a > b) std::swap(a, b);
            adjacency_[a].push_back(b);
            adjacency_[b].push_back(a);
        }
        for (auto v : vertex_of_label_) {
            if (v >= vertex_count_) throw Error(ErrorKind::MalformedTree, "label on a missing vertex");
        }
        // connected with V-1 edges means acyclic
        std::vector<bool> seen(vertex_count_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adjacency_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != vertex_count_) throw Error(ErrorKind::MalformedTree, "edges do not connect the vertices");
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t label_count() const noexcept { return vertex_of_label_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
    std::size_t vertex_of(Label l) const { return vertex_of_label_.at(l - 1); }
    const std::vector<std::size_t>& marking() const noexcept { return vertex_of_label_; }

    /// Number of labels on v.
    std::size_t weight(std::size_t v) const {
        return static_cast<std::size_t>(std::count(vertex_of_label_.begin(), vertex_of_label_.end(), v));
    }

    LabelSet labels_at(std::size_t v) const {
        LabelSet out;
        for (std::size_t i = 0; i < vertex_of_label_.size(); ++i)
            if (vertex_of_label_[i] == v) out.push_back(static_cast<Label>(i + 1));
        return out;
    }

    /// Labels of the component containing `toward` once v is removed.
    LabelSet labels_beyond(std::size_t v, std::size_t toward) const {
        std::vector<bool> in(vertex_count_, false);
        std::vector<std::size_t> stack{toward};
        in[toward] = true;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adjacency_[x])
                if (y != v && !in[y]) {
                    in[y] = true;
                    stack.push_back(y);
                }
        }
        LabelSet out;
        for (std::size_t i = 0; i < vertex_of_label_.size(); ++i)
            if (in[vertex_of_label_[i]]) out.push_back(static_cast<Label>(i + 1));
        return out;
    }

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> vertex_of_label_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

struct StabilityReport {
    bool stable = true;
    std::optional<std::size_t> failing_vertex;
};

/// w(v) + deg(v) >= 3 at every vertex.
inline StabilityReport is_stable(const StableTree& t) {
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        if (t.weight(v) + t.degree(v) < 3) return {false, v};
    }
    return {};
}

/// {S, S^c} with label 1 in `side`.
struct BalancedSplit {
    LabelSet side;
    LabelSet complement;

    friend bool operator==(const BalancedSplit&, const BalancedSplit&) = default;
};

struct CentralVertex {
    std::size_t vertex;
};

using VertexDecision = std::variant<CentralVertex, BalancedSplit>;

/// Vertices all of whose complementary subtrees carry fewer than n/2 labels.
inline std::vector<std::size_t> central_vertices(const StableTree& t) {
    std::vector<std::size_t> out;
    const std::size_t n = t.label_count();
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        bool central = true;
        for (auto w : t.neighbors(v)) {
            if (2 * t.labels_beyond(v, w).size() >= n) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(v);
    }
    return out;
}

/// Edges whose removal leaves n/2 labels on each side.
inline std::vector<BalancedSplit> balanced_splits(const StableTree& t) {
    std::vector<BalancedSplit> out;
    const std::size_t n = t.label_count();
    for (const auto& [a, b] : t.edges()) {
        LabelSet side_b = t.labels_beyond(a, b);
        if (2 * side_b.size() != n) continue;
        LabelSet side_a = t.labels_beyond(b, a);
        if (!side_a.empty() && side_a.front() == 1) out.push_back({side_a, side_b});
        else out.push_back({side_b, side_a});
    }
    return out;
}

namespace detail {

inline void require_stable(const StableTree& t) {
    auto rep = is_stable(t);
    if (!rep.stable) {
        throw Error(ErrorKind::MalformedTree, "tree is not stable", "vertex " + std::to_string(*rep.failing_vertex));
    }
}

}  // namespace detail

inline VertexDecision central_vertex(const StableTree& t) {
    detail::require_stable(t);
    auto central = central_vertices(t);
    if (!central.empty()) return CentralVertex{central.front()};
    auto splits = balanced_splits(t);
    if (splits.empty()) {
        throw Error(ErrorKind::MalformedTree, "stable tree with neither a central vertex nor a balanced edge");
    }
    return splits.front();
}

/// Labels colliding when everything is contracted onto v: one singleton per
/// label on v, one class per edge at v. Sorted by smallest label.
inline std::vector<LabelSet> collision_classes_at(const StableTree& t, std::size_t v) {
    std::vector<LabelSet> classes;
    for (auto l : t.labels_at(v)) classes.push_back({l});
    for (auto w : t.neighbors(v)) {
        LabelSet c = t.labels_beyond(v, w);
        if (!c.empty()) classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

struct Central {
    std::size_t vertex;
    std::vector<LabelSet> classes;
};

using ContractionResult = std::variant<Central, BalancedSplit>;

inline ContractionResult contract(const StableTree& t) {
    auto decision = central_vertex(t);
    if (auto* c = std::get_if<CentralVertex>(&decision)) return Central{c->vertex, collision_classes_at(t, c->vertex)};
    return std::get<BalancedSplit>(decision);
}

/// Sorted list of the splits defined by the edges, each written as the
/// side containing label 1. Two stable trees are isomorphic (preserving
/// labels) iff their keys agree.
inline std::vector<LabelSet> split_key(const StableTree& t) {
    std::vector<LabelSet> key;
    for (const auto& [a, b] : t.edges()) {
        LabelSet s = t.labels_beyond(b, a);
        if (s.empty() || s.front() != 1) s = t.labels_beyond(a, b);
        key.push_back(std::move(s));
    }
    std::sort(key.begin(), key.end());
    return key;
}

/// Two-vertex stable trees: one per unordered split {S, S^c} with
/// 2 <= |S| <= n-2, listed by the side S containing label 1 in increasing
/// bitmask order.
inline std::vector<StableTree> enumerate_two_vertex(unsigned n) {
    if (n < 4) throw Error(ErrorKind::IndexOutOfRange, "two-vertex stable trees need n >= 4");
    std::vector<StableTree> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (!(mask & 1ul)) continue;
        const auto size = static_cast<unsigned>(__builtin_popcountl(mask));
        if (size < 2 || size > n - 2) continue;
        std::vector<std::size_t> marking(n);
        for (unsigned l = 0; l < n; ++l) marking[l] = (mask >> l & 1ul) ? 0 : 1;
        out.emplace_back(2, std::vector<Edge>{{0, 1}}, std::move(marking));
    }
    return out;
}

namespace detail {

/// Every labeled tree on v vertices (Pruefer sequences).
inline std::vector<std::vector<Edge>> labeled_trees(std::size_t v) {
    if (v == 1) return {{}};
    if (v == 2) return {{{0, 1}}};
    std::vector<std::vector<Edge>> out;
    std::vector<std::size_t> seq(v - 2, 0);
    while (true) {
        std::vector<std::size_t> deg(v, 1);
        for (auto s : seq) ++deg[s];
        std::vector<Edge> edges;
        for (auto s : seq) {
            std::size_t leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
            --deg[leaf];
            --deg[s];
        }
        std::size_t a = v, b = v;
        for (std::size_t i = 0; i < v; ++i)
            if (deg[i] == 1) (a == v ? a : b) = i;
        edges.emplace_back(a, b);
        out.push_back(std::move(edges));
        std::size_t i = seq.size();
        while (i > 0 && seq[i - 1] == v - 1) seq[--i] = 0;
        if (i == 0) break;
        ++seq[i - 1];
    }
    return out;
}

}  // namespace detail

/// All stable trees with n labels and at most max_vertices vertices, up to
/// label-preserving isomorphism, ordered by vertex count then by split key.
inline std::vector<StableTree> enumerate_trees(unsigned n, std::size_t max_vertices) {
    if (n < 3) throw Error(ErrorKind::IndexOutOfRange, "stable trees need n >= 3");
    std::vector<StableTree> out;
    for (std::size_t v = 1; v <= max_vertices; ++v) {
        std::set<std::vector<LabelSet>> seen;
        std::vector<std::pair<std::vector<LabelSet>, StableTree>> found;
        for (const auto& edges : detail::labeled_trees(v)) {
            std::vector<std::size_t> marking(n, 0);
            while (true) {
                StableTree t(v, edges, marking);
                if (is_stable(t).stable) {
                    auto key = split_key(t);
                    if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(t));
                }
                std::size_t i = 0;
                while (i < n && marking[i] == v - 1) marking[i++] = 0;
                if (i == n) break;
                ++marking[i];
            }
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& f : found) out.push_back(std::move(f.second));
    }
    return out;
}

}  // namespace mf
