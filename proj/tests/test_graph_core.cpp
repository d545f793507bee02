#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqdist/graph.hpp"

using namespace sqdist;

TEST_CASE("shape parsing") {
    CHECK(Shape::parse("2,1,1").parts == std::vector<int>{2, 1, 1});
    CHECK(Shape::parse(" 3 , 2 ").parts == std::vector<int>{3, 2});
    CHECK_THROWS_AS(Shape::parse("0,2"), ShapeParseError);
    CHECK_THROWS_AS(Shape::parse("-1"), ShapeParseError);
    CHECK_THROWS_AS(Shape::parse(""), ShapeParseError);
    CHECK_THROWS_AS(Shape::parse("2,,1"), ShapeParseError);
    CHECK_THROWS_AS(Shape::parse("2,x"), ShapeParseError);
}

TEST_CASE("shape counts and canonical form") {
    Shape s{1, 2, 1};
    CHECK(s.block_count() == 3);
    CHECK(s.vertex_count() == 5);
    CHECK(s.canonical() == Shape{2, 1, 1});
    CHECK(Shape{1, 1, 2}.canonical() == Shape{2, 1, 1}.canonical());
}

TEST_CASE("vertex partition covers 0..n-1") {
    Shape s{3, 2, 1};
    auto vp = VertexPartition::of(s);
    REQUIRE(vp.ranges.size() == 3);
    CHECK(vp.ranges[0].begin == 1);
    CHECK(vp.ranges[0].end == 4);
    CHECK(vp.ranges[1].begin == 4);
    CHECK(vp.ranges[1].end == 6);
    CHECK(vp.ranges[2].begin == 6);
    CHECK(vp.ranges[2].end == 7);
}

TEST_CASE("adjacency of small shapes") {
    // S(1,1) is the path 0-1, 0-2
    IntMatrix a = build_adjacency(Shape{1, 1});
    CHECK(a == IntMatrix{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});

    // S(2) is K3
    IntMatrix k3 = build_adjacency(Shape{2});
    CHECK(k3 == IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    // S(2,1): degree sequence (3,2,2,1)
    IntMatrix b = build_adjacency(Shape{2, 1});
    auto deg = b.row_sums();
    CHECK(deg == std::vector<long long>{3, 2, 2, 1});
}

TEST_CASE("bfs distances") {
    IntMatrix path{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
    CHECK(bfs_distance_matrix(path) == IntMatrix{{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});

    IntMatrix k3{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK(bfs_distance_matrix(k3) == k3);  // J - I is its own distance matrix

    IntMatrix d = bfs_distance_matrix(build_adjacency(Shape{2, 1}));
    CHECK(d(1, 3) == 2);
    CHECK(d(2, 3) == 2);
    CHECK(d(1, 2) == 1);
    CHECK(d(0, 3) == 1);
}

TEST_CASE("bfs rejects disconnected graphs") {
    IntMatrix two_islands{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(bfs_distance_matrix(two_islands), DisconnectedGraphError);
}

TEST_CASE("squared distance matrix block form") {
    CHECK(squared_distance_matrix(Shape{1, 1}) ==
          IntMatrix{{0, 1, 1}, {1, 0, 4}, {1, 4, 0}});
    CHECK(squared_distance_matrix(Shape{2, 1}) ==
          IntMatrix{{0, 1, 1, 1}, {1, 0, 1, 4}, {1, 1, 0, 4}, {1, 4, 4, 0}});
    IntMatrix star = squared_distance_matrix(Shape{1, 1, 1});
    for (int j = 1; j < 4; ++j) CHECK(star(0, j) == 1);
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) CHECK(star(i, j) == (i == j ? 0 : 4));
}

TEST_CASE("delta22 removes the center row and column") {
    CHECK(delta22(Shape{1, 1}) == IntMatrix{{0, 4}, {4, 0}});
    CHECK(delta22(Shape{1, 1, 1}) == IntMatrix{{0, 4, 4}, {4, 0, 4}, {4, 4, 0}});
    CHECK(delta22(Shape{2, 1}) == IntMatrix{{0, 1, 4}, {1, 0, 4}, {4, 4, 0}});
}

// Exhaustive oracle equivalence: the assembled block form must equal the
// entrywise square of the BFS distances for every shape with n <= 9.
TEST_CASE("block form equals squared BFS distances") {
    std::vector<std::vector<int>> stack{{}};
    for (int n = 3; n <= 9; ++n) {
        // all compositions would be redundant; partitions suffice since the
        // layout only depends on part order which we fix descending
        std::vector<int> parts;
        auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
            if (remaining == 0) {
                Shape shape(parts);
                IntMatrix delta = squared_distance_matrix(shape);
                IntMatrix dist = bfs_distance_matrix(build_adjacency(shape));
                for (std::size_t i = 0; i < delta.rows(); ++i)
                    for (std::size_t j = 0; j < delta.cols(); ++j)
                        REQUIRE(delta(i, j) == dist(i, j) * dist(i, j));
                // diameter 2 iff b >= 2
                long long dmax = 0;
                for (std::size_t i = 0; i < dist.rows(); ++i)
                    for (std::size_t j = 0; j < dist.cols(); ++j)
                        dmax = std::max(dmax, dist(i, j));
                REQUIRE(dmax == (shape.block_count() >= 2 ? 2 : 1));
                return;
            }
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                parts.push_back(p);
                self(self, remaining - p, p);
                parts.pop_back();
            }
        };
        recurse(recurse, n - 1, n - 1);
    }
}
