#include "hochhom/algebra.hpp"
#include "hochhom/graded.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hochhom;

namespace {
FDAlgebra qxy_surface() {
    // Q[x,y]/(x^2, xy, y^2)
    return graded_to_fd(graded_poly({1, 1}, {{2, 0}, {1, 1}, {0, 2}}));
}
} // namespace

TEST_CASE("preset algebras satisfy the axioms") {
    for (const auto& a : {ground_field(), truncated_poly(2), truncated_poly(3), truncated_poly(4),
                          split_pair(), qxy_surface()}) {
        CHECK_NOTHROW(check_algebra(a));
        CHECK_NOTHROW(check_module(a, regular_module(a)));
    }
}

TEST_CASE("multiplication fixtures") {
    auto a = truncated_poly(2);
    auto x = basis_vec(2, 1);
    CHECK(multiply(a, a.unit, x) == x);
    CHECK(multiply(a, x, x) == std::vector<Rat>{Rat(0), Rat(0)});

    // in Q x Q, the orthogonal idempotents multiply to zero; in the 1,x basis
    // of Q[x]/(x^2-x) they are x and 1-x
    auto s = split_pair();
    std::vector<Rat> e1 = {Rat(0), Rat(1)};            // x
    std::vector<Rat> e2 = {Rat(1), Rat(-1)};           // 1 - x
    CHECK(multiply(s, e1, e2) == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(multiply(s, e1, e1) == e1);

    CHECK_THROWS_AS(multiply(a, {Rat(1)}, x), Error);
}

TEST_CASE("omega1: dimensions across the corpus, both constructions agree") {
    struct Case {
        FDAlgebra a;
        Coord expected_dim;
    };
    std::vector<Case> cases = {
        {ground_field(), 0}, {truncated_poly(2), 1}, {truncated_poly(3), 2},
        {truncated_poly(4), 3}, {split_pair(), 0},   {qxy_surface(), 3},
    };
    for (auto& [a, expected] : cases) {
        INFO(a.name);
        auto pair = omega1_pair(a);
        CHECK(pair.leibniz.module.dim == expected);
        CHECK(pair.kernel.module.dim == expected);
        CHECK(pair.isomorphic);
        if (expected > 0) {
            CHECK_NOTHROW(check_module(a, pair.leibniz.module));
            CHECK_NOTHROW(check_module(a, pair.kernel.module));
        }
    }
}

TEST_CASE("omega1 of Q[x]/(x^n) has dimension n-1") {
    for (int n = 1; n <= 6; ++n) {
        auto pair = omega1_pair(truncated_poly(n));
        CHECK(pair.leibniz.module.dim == n - 1);
        CHECK(pair.kernel.module.dim == n - 1);
        CHECK(pair.isomorphic);
    }
}

TEST_CASE("localization fixtures") {
    SECTION("s = unit is the identity") {
        auto a = truncated_poly(3);
        auto loc = localize(a, {a.unit});
        CHECK(loc.algebra.dim == a.dim);
        CHECK_FALSE(loc.zero);
        CHECK(rank(loc.structure_map) == a.dim);
    }
    SECTION("Q[x]/(x^2-x) at x collapses to Q with x -> 1") {
        auto a = split_pair();
        auto loc = localize(a, {basis_vec(2, 1)});
        REQUIRE(loc.algebra.dim == 1);
        // x maps to the unit of A_s
        RatVec xs = loc.structure_map.apply(unit_vec(1));
        CHECK(to_dense(xs, 1) == loc.algebra.unit);
    }
    SECTION("nilpotent s gives the zero algebra") {
        auto a = truncated_poly(2);
        auto loc = localize(a, {basis_vec(2, 1)});
        CHECK(loc.zero);
        CHECK(loc.algebra.dim == 0);
    }
    SECTION("localization is idempotent") {
        auto a = split_pair();
        auto loc = localize(a, {basis_vec(2, 1)});
        std::vector<Rat> s_image = to_dense(loc.structure_map.apply(unit_vec(1)), loc.algebra.dim);
        auto loc2 = localize(loc.algebra, {s_image});
        CHECK(loc2.algebra.dim == loc.algebra.dim);
        CHECK_FALSE(loc2.zero);
    }
}

TEST_CASE("module localization fixtures") {
    auto a = split_pair();
    SECTION("s = unit keeps M") {
        auto loc = localize(a, {a.unit});
        auto m = regular_module(a);
        CHECK(localize_module(a, m, {a.unit}, loc).dim == m.dim);
    }
    SECTION("A = QxQ, M = A, s = x projects to one factor") {
        auto loc = localize(a, {basis_vec(2, 1)});
        auto m = regular_module(a);
        auto ml = localize_module(a, m, {basis_vec(2, 1)}, loc);
        CHECK(ml.dim == 1);
    }
    SECTION("s nilpotent on M kills it") {
        auto d = truncated_poly(2);
        auto loc = localize(d, {basis_vec(2, 1)});
        auto m = regular_module(d);
        CHECK(localize_module(d, m, {basis_vec(2, 1)}, loc).dim == 0);
    }
}

TEST_CASE("symmetric and exterior powers") {
    auto q = ground_field();
    FDModule plane{2, {RatMatrix::identity(2)}};
    CHECK(sym_power(q, plane, 1).dim == 2);
    CHECK(sym_power(q, plane, 2).dim == 3);
    CHECK(ext_power(q, plane, 2).dim == 1);
    CHECK(ext_power(q, plane, 3).dim == 0);

    // rank-1 free module over the dual numbers
    auto a = truncated_poly(2);
    auto free1 = regular_module(a);
    CHECK(ext_power(a, free1, 2).dim == 0);
    CHECK(sym_power(a, free1, 2).dim == a.dim);
    CHECK(sym_power(a, free1, 0).dim == a.dim);

    // free module of rank 2 over split_pair: Sym^2 has rank C(3,2), Lambda^2 rank C(2,2)
    auto s = split_pair();
    auto reg = regular_module(s);
    FDModule rank2{4, {}};
    for (Coord i = 0; i < s.dim; ++i) {
        // block-diagonal action on A (+) A
        RatMatrix blk = RatMatrix::zero(4, 4);
        std::vector<RatVec> cols(4);
        for (Coord c = 0; c < 2; ++c) {
            for (const auto& [r, qv] : reg.action[i].column(c)) {
                cols[c].emplace_back(r, qv);
                cols[c + 2].emplace_back(r + 2, qv);
            }
        }
        rank2.action.push_back(RatMatrix::from_columns(4, std::move(cols)));
    }
    CHECK_NOTHROW(check_module(s, rank2));
    CHECK(sym_power(s, rank2, 2).dim == 3 * s.dim);
    CHECK(ext_power(s, rank2, 2).dim == 1 * s.dim);
}

TEST_CASE("graded weight bases") {
    auto qx = graded_poly({1});
    auto b0 = graded_weight_basis(qx, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == Monomial{0});

    auto qxy = graded_poly({1, 1});
    CHECK(graded_weight_basis(qxy, 2).size() == 3);

    auto t3 = graded_poly({1}, {{3}});
    CHECK(graded_weight_basis(t3, 2).size() == 1);
    CHECK(graded_weight_basis(t3, 3).empty());
}

TEST_CASE("graded_to_fd matches the truncated polynomial preset") {
    auto fd = graded_to_fd(graded_poly({1}, {{3}}));
    CHECK(fd.dim == 3);
    CHECK_NOTHROW(check_algebra(fd));
    auto direct = truncated_poly(3);
    CHECK(fd.mult == direct.mult);
    CHECK_THROWS_AS(graded_to_fd(graded_poly({1, 1}, {{2, 1}}), 64), Error);
}

TEST_CASE("smooth Hodge predicted dimensions") {
    // m=1, d=2 (even): Sym^j of a line; weight w >= j contributes 1
    CHECK(smooth_hodge_predicted_dim(1, 2, 1, 1) == 1);
    CHECK(smooth_hodge_predicted_dim(1, 2, 1, 5) == 1);
    CHECK(smooth_hodge_predicted_dim(1, 2, 2, 1) == 0);
    CHECK(smooth_hodge_predicted_dim(1, 2, 2, 2) == 1);
    // m=1, d=1 (odd): Lambda^2 of a line vanishes
    CHECK(smooth_hodge_predicted_dim(1, 1, 2, 4) == 0);
    // m=2, d=1: dx^dy in weight 2
    CHECK(smooth_hodge_predicted_dim(2, 1, 2, 2) == 1);
    CHECK(smooth_hodge_predicted_dim(2, 1, 2, 1) == 0);
    // H_0 row: weight-w component of the polynomial ring itself
    CHECK(smooth_hodge_predicted_dim(2, 1, 0, 3) == 4);
}

TEST_CASE("nilradical and residue module") {
    CHECK(nilradical(ground_field()).dim() == 0);
    CHECK(nilradical(split_pair()).dim() == 0);
    CHECK(is_semisimple(split_pair()));
    CHECK(nilradical(truncated_poly(2)).dim() == 1);
    CHECK(nilradical(truncated_poly(4)).dim() == 3);
    CHECK(nilradical(qxy_surface()).dim() == 2);

    auto res = residue_module(truncated_poly(2));
    CHECK(res.dim == 1);
    // x acts by zero on the residue field
    CHECK(res.action[1].is_zero());
}

TEST_CASE("tensor powers over A respect balancing") {
    // M (x)_A M for M = A is A itself
    auto a = truncated_poly(3);
    auto t = detail::tensor_power_over_A(a, regular_module(a), 2);
    CHECK(t.dim == a.dim);
}
