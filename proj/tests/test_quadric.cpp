#include <doctest.h>

#include <optional>

#include "logtangent/errors.hpp"
#include "logtangent/quadric.hpp"
#include "logtangent/rng.hpp"
#include "support.hpp"

using namespace logtangent;
using namespace logtangent::testing;

namespace {

ProjPoint pp(std::initializer_list<long long> xs) { return ProjPoint::from_rats(rv(xs)); }

std::vector<ProjPoint> conic_points(std::size_t count) {
    std::vector<ProjPoint> pts;
    for (long long t = 0; t < static_cast<long long>(count); ++t) pts.push_back(pp({1, t, t * t}));
    return pts;
}

Quadric random_rank4(std::size_t n, Rng& rng) {
    for (;;) {
        RatMatrix a(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) a(i, j) = rng.rational(9);
        RatMatrix d(n + 1, n + 1);
        for (std::size_t i = 0; i < 4; ++i) d(i, i) = rng.nonzero_rational(9);
        const RatMatrix g = mat_mul(mat_mul(a.transposed(), d), a);
        bool symmetric_nonzero = false;
        for (std::size_t i = 0; i <= n && !symmetric_nonzero; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                if (!g(i, j).is_zero()) symmetric_nonzero = true;
        if (!symmetric_nonzero) continue;
        Quadric q(g);
        if (q.rank() == 4) return q;
    }
}

}  // namespace

TEST_CASE("veronese rows in lexicographic monomial order") {
    CHECK(veronese_row(pp({1, 0, 0}), 2) == rv({1, 0, 0, 0, 0, 0}));
    CHECK(veronese_row(pp({1, 1, 1}), 2) == rv({1, 1, 1, 1, 1, 1}));
    CHECK(veronese_row(pp({1, 2, 3}), 2) == rv({1, 2, 3, 4, 6, 9}));
}

TEST_CASE("conditions rank") {
    CHECK(conditions_rank(conic_points(5), 2) == 5);
    auto pts = conic_points(5);
    pts.push_back(pp({1, 1, 2}));  // off the conic
    CHECK(conditions_rank(pts, 2) == 6);
    CHECK(conditions_rank({pp({1, 2, 3})}, 2) == 1);

    // monotone under adding points, bounded by min(#points, monomials)
    Rng rng(31);
    std::vector<ProjPoint> acc;
    std::size_t prev = 0;
    for (int i = 0; i < 12; ++i) {
        acc.push_back(ProjPoint::from_rats(rng.nonzero_vector(4, 9)));
        const std::size_t r = conditions_rank(acc, 3);
        CHECK(r >= prev);
        CHECK(r <= std::min<std::size_t>(acc.size(), quadric_monomial_count(3)));
        prev = r;
    }
}

TEST_CASE("quadrics through points and planes") {
    const QuadricSpace conic = quadrics_through(conic_points(5), 2);
    REQUIRE(conic.basis.size() == 1);
    // the conic Z0 Z2 - Z1^2, up to the canonical scale
    for (long long t = 0; t < 5; ++t)
        CHECK(conic.basis[0].eval(rv({1, t, t * t})).is_zero());
    CHECK(conic.basis[0].rank() == 3);

    const QuadricSpace all = quadrics_through({}, 2);
    CHECK(all.basis.size() == 6);

    // n = 3: quadrics vanishing on the line Z2 = Z3 = 0 (spanned by e0, e1):
    // exactly the g00 = g01 = g11 = 0 constraints.
    RatMatrix span(2, 4);
    span(0, 0) = Rat(1);
    span(1, 1) = Rat(1);
    const QuadricSpace through_line = quadrics_vanishing_on({}, 3, {span});
    CHECK(through_line.conditions_rank == 3);
    CHECK(through_line.basis.size() == 7);
    for (const Quadric& q : through_line.basis) {
        CHECK(q.gram()(0, 0).is_zero());
        CHECK(q.gram()(0, 1).is_zero());
        CHECK(q.gram()(1, 1).is_zero());
    }

    // every member annihilates every input point exactly
    Rng rng(37);
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(ProjPoint::from_rats(rng.nonzero_vector(4, 9)));
    for (const Quadric& q : quadrics_through(pts, 3).basis)
        for (const ProjPoint& p : pts) CHECK(q.eval(to_rat(p.coords)).is_zero());
}

TEST_CASE("ample-mod-boundary rank criterion") {
    CHECK(ample_mod_boundary_criterion(noguchi6()));
    CHECK_FALSE(ample_mod_boundary_criterion(conic_tangent(6)));
    // any 5 lines impose at most 5 < 6 conditions
    Rng rng(41);
    const Arrangement five = random_arrangement(2, 5, rng, 15);
    CHECK_FALSE(ample_mod_boundary_criterion(five));
    CHECK_THROWS_AS(
        ample_mod_boundary_criterion(
            Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 0})})),
        DegenerateInput);
}

TEST_CASE("low rank witness search") {
    Rng rng(43);
    const QuadricSpace conic = quadrics_through(conic_points(5), 2);
    const auto w = low_rank_witness(conic, rng);
    REQUIRE(w.has_value());
    CHECK(w->rank() == 3);

    const QuadricSpace empty = quadrics_through(conic_points(6), 2, [] {
        RatMatrix plane(2, 3);
        plane(0, 0) = Rat(1);
        plane(1, 1) = Rat(1);
        return plane;
    }());
    // six conic points plus a generic point: kernel is zero
    CHECK(low_rank_witness(empty, rng) == std::nullopt);

    // n = 3, 9 general dual points: the unique quadric has rank exactly 4
    std::size_t found = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const Arrangement a = random_arrangement(3, 9, rng, 9);
        if (conditions_rank(dual_points(a), 3) != 9) continue;
        const QuadricSpace space = quadrics_through(dual_points(a), 3);
        REQUIRE(space.basis.size() == 1);
        const auto unique = low_rank_witness(space, rng);
        REQUIRE(unique.has_value());
        CHECK(unique->rank() == 4);
        ++found;
    }
    CHECK(found > 0);
}

TEST_CASE("dual quadric witnesses") {
    SUBCASE("identity is self-dual") {
        const DualSurfaceWitness w = dual_quadric(Quadric(RatMatrix::identity(4)));
        CHECK(w.carrier_equations.empty());
        CHECK(w.surface.gram() == RatMatrix::identity(4));
    }
    SUBCASE("rank-3 cone in P^3") {
        RatMatrix g(4, 4);
        g(0, 0) = g(1, 1) = g(2, 2) = Rat(1);
        const DualSurfaceWitness w = dual_quadric(Quadric(g));
        REQUIRE(w.carrier_equations.size() == 1);
        CHECK(w.carrier_equations[0] == std::vector<Int>{Int(0), Int(0), Int(0), Int(1)});
        CHECK(w.surface.gram() == RatMatrix::identity(3));
    }
    SUBCASE("antidiagonal blocks in P^4") {
        RatMatrix g(5, 5);
        g(0, 1) = g(1, 0) = Rat(1);
        g(2, 3) = g(3, 2) = Rat(1);
        const DualSurfaceWitness w = dual_quadric(Quadric(g));
        REQUIRE(w.carrier_equations.size() == 1);
        CHECK(w.carrier_equations[0] == std::vector<Int>{Int(0), Int(0), Int(0), Int(0), Int(1)});
        RatMatrix expect(4, 4);
        expect(0, 1) = expect(1, 0) = Rat(1);
        expect(2, 3) = expect(3, 2) = Rat(1);
        CHECK(w.surface.gram() == expect);
    }
    SUBCASE("rank out of range") {
        RatMatrix g(4, 4);
        g(0, 0) = Rat(1);
        g(1, 1) = Rat(1);
        CHECK_THROWS_AS(dual_quadric(Quadric(g)), DegenerateInput);
        CHECK_THROWS_AS(dual_quadric(Quadric(RatMatrix::identity(5))), DegenerateInput);
    }
}

TEST_CASE("dual pairing identity on random rank-4 quadrics") {
    // S(coords(Gv), coords(Gw)) = v^T G w: the restriction of the dual form
    // to the carrier inverts the original exactly (reflexivity at the level
    // of symmetric matrices).
    Rng rng(47);
    for (std::size_t n : {3u, 4u, 5u}) {
        const Quadric q = random_rank4(n, rng);
        const DualSurfaceWitness w = dual_quadric(q);
        const std::size_t r = 4;
        // the witness surface is canonically rescaled, so the identity holds
        // up to one global factor shared by every sample
        std::optional<Rat> ratio;
        for (int trial = 0; trial < 10; ++trial) {
            const std::vector<Rat> v = rng.rational_vector(n + 1, 7);
            const std::vector<Rat> u = rng.rational_vector(n + 1, 7);
            const std::vector<Rat> gv = mat_vec(q.gram(), v);
            const std::vector<Rat> gu = mat_vec(q.gram(), u);
            const auto cv = solve_particular(w.carrier_basis, gv);
            const auto cu = solve_particular(w.carrier_basis, gu);
            REQUIRE(cv.has_value());
            REQUIRE(cu.has_value());
            Rat pairing;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b)
                    pairing += (*cv)[a] * w.surface.gram()(a, b) * (*cu)[b];
            const Rat direct = dot(v, gu);
            if (direct.is_zero()) {
                CHECK(pairing.is_zero());
            } else {
                const Rat this_ratio = pairing / direct;
                if (!ratio)
                    ratio = this_ratio;
                else
                    CHECK(this_ratio == *ratio);
            }
        }
    }
}

TEST_CASE("tangent dimension of the rank<=4 locus") {
    Rng rng(53);
    CHECK(rank_locus_tangent_dim(random_rank4(3, rng)) == 4 * 3 - 3);
    CHECK(rank_locus_tangent_dim(random_rank4(4, rng)) == 4 * 4 - 3);
}

TEST_CASE("rational points and rulings") {
    // doubly ruled quadric U0 U3 = U1 U2
    RatMatrix g(4, 4);
    g(0, 3) = g(3, 0) = Rat(1);
    g(1, 2) = g(2, 1) = Rat(-1);
    const Quadric segre(g);
    Rng rng(59);
    const auto pt = rational_point_on(segre, rng, 500);
    REQUIRE(pt.has_value());
    CHECK(segre.eval(to_rat(pt->coords)).is_zero());
    const auto rulings = rulings_through(segre, *pt);
    REQUIRE(rulings.has_value());
    for (const RatMatrix& plane : *rulings) {
        CHECK(plane.rows() == 2);
        // plane inside the quadric
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(dot(plane.row(i), mat_vec(segre.gram(), plane.row(j))).is_zero());
    }
}
