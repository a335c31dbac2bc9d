#include "hochhom/simplicial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hochhom;

namespace {
long long choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("standard simplex level counts") {
    CHECK(standard_simplex(0, 3).level_sizes == std::vector<Coord>{1, 1, 1, 1});
    CHECK(standard_simplex(1, 2).level_sizes == std::vector<Coord>{2, 3, 4});
    CHECK(standard_simplex(2, 2).level_sizes[2] == 10);
}

TEST_CASE("boundary simplex level and nondegenerate counts") {
    auto b11 = boundary_simplex(1, 1);
    CHECK(b11.level_sizes == std::vector<Coord>{2, 2});
    CHECK(nondegenerate_counts(boundary_simplex(2, 2)) == std::vector<Coord>{3, 3, 0});
    CHECK(is_connected(boundary_simplex(2, 3)));
    CHECK(is_connected(boundary_simplex(3, 4)));
    CHECK_FALSE(is_connected(boundary_simplex(1, 2))); // two points
}

TEST_CASE("sphere level counts are 1 + C(n,d)") {
    CHECK(sphere(1, 3).level_sizes == std::vector<Coord>{1, 2, 3, 4});
    CHECK(sphere(2, 4).level_sizes == std::vector<Coord>{1, 1, 2, 4, 7});
    for (int d = 1; d <= 3; ++d) {
        auto k = sphere(d, 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(k.level_sizes[n] == 1 + choose(n, d));
        // level d+1 = d+2 elements
        CHECK(k.level_sizes[d + 1] == d + 2);
    }
}

TEST_CASE("sphere nondegenerate simplices are the basepoint and sigma") {
    for (int d = 1; d <= 3; ++d) {
        auto counts = nondegenerate_counts(sphere(d, d + 2));
        for (int n = 0; n <= d + 2; ++n) {
            Coord expect = (n == 0 || n == d) ? 1 : 0;
            CHECK(counts[n] == expect);
        }
    }
}

TEST_CASE("constructors validate") {
    CHECK(validate(point(4)).ok);
    CHECK(validate(standard_simplex(3, 5)).ok);
    CHECK(validate(boundary_simplex(2, 4)).ok);
    CHECK(validate(sphere(2, 4)).ok);
    CHECK(validate(sphere(3, 5)).ok);
    CHECK(validate(wedge(sphere(1, 3), sphere(2, 3))).ok);
    CHECK(validate(skeleton(standard_simplex(2, 3), 1)).ok);
}

TEST_CASE("validate catches a seeded defect") {
    auto k = standard_simplex(2, 3);
    std::swap(k.faces[2][0][3], k.faces[2][2][3]);
    auto rep = validate(k);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.first_failure.empty());
}

TEST_CASE("wedge of point with K is K-sized and commutative") {
    auto k = sphere(2, 3);
    auto w = wedge(point(3), k);
    CHECK(w.level_sizes == k.level_sizes);
    CHECK(validate(w).ok);

    auto w12 = wedge(sphere(1, 3), sphere(2, 3));
    auto w21 = wedge(sphere(2, 3), sphere(1, 3));
    CHECK(w12.level_sizes == w21.level_sizes);

    CHECK(wedge(sphere(1, 2), sphere(1, 2)).level_sizes[1] == 3);

    CHECK_THROWS_AS(wedge(sphere(1, 2), sphere(1, 3)), Error);
}

TEST_CASE("skeleton fixtures") {
    // all positive-dimensional simplices of S^2 below level 2 are degenerate
    auto s = skeleton(sphere(2, 4), 1);
    CHECK(s.level_sizes == std::vector<Coord>{1, 1, 1, 1, 1});

    auto k = sphere(2, 4);
    auto full = skeleton(k, 4);
    CHECK(full.level_sizes == k.level_sizes);

    auto one = skeleton(standard_simplex(2, 3), 1);
    auto counts = nondegenerate_counts(one);
    CHECK(counts[0] == 3);
    CHECK(counts[1] == 3);
    CHECK(counts[2] == 0);
    CHECK(validate(one).ok);
    CHECK(is_connected(one));
}

TEST_CASE("skeleton is idempotent with min of the bounds") {
    auto k = standard_simplex(3, 4);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            auto a = skeleton(skeleton(k, n), m);
            auto b = skeleton(k, std::min(n, m));
            CHECK(a.level_sizes == b.level_sizes);
        }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(sphere(1, 3)));
    CHECK(is_connected(sphere(3, 4)));
    CHECK(is_connected(point(2)));
    CHECK_FALSE(is_connected(boundary_simplex(1, 3)));
    CHECK(is_connected(wedge(sphere(1, 3), sphere(1, 3))));
}

TEST_CASE("sphere fibers over sigma at level d+1") {
    // the face maps hit sigma from {s_0 sigma} (i=0), {s_{i-1} sigma, s_i sigma}
    // (0 < i <= d) and {s_d sigma} (i = d+1)
    for (int d = 1; d <= 3; ++d) {
        auto k = sphere(d, d + 2);
        const Coord sigma = [&] {
            for (Coord x = 0; x < k.level_sizes[d]; ++x)
                if (x != k.basepoint_at(d) && k.labels[d][x] != "*") return x;
            return Coord(-1);
        }();
        REQUIRE(sigma >= 0);
        std::vector<Coord> s_sigma(d + 1);
        for (int j = 0; j <= d; ++j) s_sigma[j] = k.degeneracy(d, j, sigma);
        for (int i = 0; i <= d + 1; ++i) {
            std::vector<Coord> fiber;
            for (Coord x = 0; x < k.level_sizes[d + 1]; ++x)
                if (k.face(d + 1, i, x) == sigma) fiber.push_back(x);
            std::vector<Coord> expected;
            if (i == 0)
                expected = {s_sigma[0]};
            else if (i <= d)
                expected = {s_sigma[i - 1], s_sigma[i]};
            else
                expected = {s_sigma[d]};
            std::sort(expected.begin(), expected.end());
            CHECK(fiber == expected);
        }
    }
}

TEST_CASE("basepoint chain exists at every level") {
    auto k = wedge(sphere(1, 4), sphere(2, 4));
    for (int n = 0; n <= 4; ++n) CHECK(k.basepoint_at(n) == 0);
    auto s = sphere(2, 4);
    for (int n = 0; n <= 4; ++n) CHECK(s.basepoint_at(n) == 0);
}
