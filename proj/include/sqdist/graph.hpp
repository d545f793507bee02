#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "sqdist/errors.hpp"
#include "sqdist/matrix.hpp"

namespace sqdist {

// Composition (n_1, ..., n_b) of a starlike block graph: b complete blocks
// K_{n_i+1} glued at one central vertex, n = 1 + sum n_i vertices in total.
struct Shape {
    std::vector<int> parts;

    Shape() = default;
    explicit Shape(std::vector<int> p) : parts(std::move(p)) { validate(); }
    Shape(std::initializer_list<int> p) : parts(p) { validate(); }

    int block_count() const { return static_cast<int>(parts.size()); }

    int vertex_count() const {
        int n = 1;
        for (int p : parts) n += p;
        return n;
    }

    // Parts sorted descending; the isomorphism invariant of the graph.
    Shape canonical() const {
        Shape s = *this;
        std::sort(s.parts.begin(), s.parts.end(), std::greater<int>());
        return s;
    }

    bool operator==(const Shape& rhs) const { return parts == rhs.parts; }
    bool operator!=(const Shape& rhs) const { return parts != rhs.parts; }

    // Lexicographic on the part lists; used only for deterministic ordering.
    bool operator<(const Shape& rhs) const { return parts < rhs.parts; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        return out;
    }

    // Comma-separated positive integers, whitespace ignored: "2, 1,1".
    static Shape parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        auto flush = [&]() {
            if (token.empty()) throw ShapeParseError("empty part in shape: \"" + text + "\"");
            std::size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(token, &pos);
            } catch (const std::exception&) {
                throw ShapeParseError("bad part \"" + token + "\" in shape: \"" + text + "\"");
            }
            if (pos != token.size())
                throw ShapeParseError("bad part \"" + token + "\" in shape: \"" + text + "\"");
            if (v < 1) throw ShapeParseError("parts must be positive, got " + token);
            parts.push_back(static_cast<int>(v));
            token.clear();
        };
        for (char c : text) {
            if (c == ' ' || c == '\t') continue;
            if (c == ',') flush();
            else token.push_back(c);
        }
        flush();
        return Shape(std::move(parts));
    }

private:
    void validate() const {
        if (parts.empty()) throw ShapeParseError("shape needs at least one block");
        for (int p : parts)
            if (p < 1) throw ShapeParseError("block sizes must be positive");
    }
};

// Index layout: center is vertex 0, the n_i vertices of V_i occupy
// consecutive indices in part order.
struct VertexPartition {
    struct Range {
        int begin;
        int end;  // exclusive
        int size() const { return end - begin; }
    };

    std::vector<Range> ranges;

    static VertexPartition of(const Shape& shape) {
        VertexPartition vp;
        int next = 1;
        for (int p : shape.parts) {
            vp.ranges.push_back({next, next + p});
            next += p;
        }
        return vp;
    }
};

inline IntMatrix build_adjacency(const Shape& shape) {
    const int n = shape.vertex_count();
    IntMatrix adj(n, n, 0);
    VertexPartition vp = VertexPartition::of(shape);
    for (const auto& range : vp.ranges) {
        for (int u = range.begin; u < range.end; ++u) {
            adj(0, u) = adj(u, 0) = 1;
            for (int v = u + 1; v < range.end; ++v) adj(u, v) = adj(v, u) = 1;
        }
    }
    return adj;
}

inline IntMatrix bfs_distance_matrix(const IntMatrix& adjacency) {
    const std::size_t n = adjacency.rows();
    IntMatrix dist(n, n, -1);
    for (std::size_t src = 0; src < n; ++src) {
        dist(src, src) = 0;
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (adjacency(u, v) != 0 && dist(src, v) < 0) {
                    dist(src, v) = dist(src, u) + 1;
                    queue.push_back(v);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (dist(src, v) < 0) throw DisconnectedGraphError();
    }
    return dist;
}

// The squared distance matrix assembled directly from its block structure:
// row/col 0 is all ones, diagonal blocks are J - I, off-diagonal blocks 4J.
inline IntMatrix squared_distance_matrix(const Shape& shape) {
    const int n = shape.vertex_count();
    IntMatrix delta(n, n, 0);
    VertexPartition vp = VertexPartition::of(shape);
    for (int u = 1; u < n; ++u) delta(0, u) = delta(u, 0) = 1;
    const int b = shape.block_count();
    for (int i = 0; i < b; ++i) {
        const auto& ri = vp.ranges[i];
        for (int u = ri.begin; u < ri.end; ++u)
            for (int v = ri.begin; v < ri.end; ++v)
                if (u != v) delta(u, v) = 1;
        for (int j = i + 1; j < b; ++j) {
            const auto& rj = vp.ranges[j];
            for (int u = ri.begin; u < ri.end; ++u)
                for (int v = rj.begin; v < rj.end; ++v)
                    delta(u, v) = delta(v, u) = 4;
        }
    }
    return delta;
}

inline IntMatrix delta22(const Shape& shape) {
    IntMatrix delta = squared_distance_matrix(shape);
    const std::size_t n = delta.rows();
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) sub(i - 1, j - 1) = delta(i, j);
    return sub;
}

}  // namespace sqdist
