#include <doctest.h>

#include "logtangent/arrangement.hpp"
#include "logtangent/errors.hpp"
#include "logtangent/quadric.hpp"
#include "logtangent/rng.hpp"
#include "support.hpp"

using namespace logtangent;
using namespace logtangent::testing;

TEST_CASE("construction canonicalizes and rejects bad input") {
    const Arrangement a(2, {rv({2, -4, 0}), rv({0, 0, 3})});
    CHECK(a.hyperplane(0).covector == std::vector<Int>{Int(1), Int(-2), Int(0)});
    CHECK(a.hyperplane(1).covector == std::vector<Int>{Int(0), Int(0), Int(1)});
    CHECK_THROWS_AS(Arrangement(2, {rv({0, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(Arrangement(2, {rv({1, 0, 0}), rv({2, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(Arrangement(2, {rv({1, 0})}), std::invalid_argument);
}

TEST_CASE("general position checks") {
    CHECK(is_general_position(Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})})));
    // three concurrent lines
    CHECK_FALSE(is_general_position(
        Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 0})})));
    CHECK(is_general_position(coords_plus_one()));
    CHECK(is_general_position(noguchi6()));
    CHECK(is_general_position(conic_tangent(6)));
    // fewer than n+1 hyperplanes: independence of the full set
    CHECK(is_general_position(Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0})})));
}

TEST_CASE("normalize fixes the first n+1 hyperplanes") {
    const Arrangement already = coords_plus_one();
    auto [same, id] = normalize(already);
    CHECK(same.normalized());
    CHECK(id == RatMatrix::identity(3));
    CHECK(same.hyperplanes() == already.hyperplanes());

    const Arrangement shuffled(2, {rv({1, 1, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 0, 0})});
    REQUIRE(is_general_position(shuffled));
    auto [nrm, g] = normalize(shuffled);
    CHECK(nrm.normalized());
    // l'(g x) = l(x) exactly, on 10 random points.
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        const std::vector<Rat> x = rng.rational_vector(3, 20);
        const std::vector<Rat> gx = mat_vec(g, x);
        for (std::size_t h = 0; h < shuffled.count(); ++h) {
            const Rat before = dot(to_rat(shuffled.hyperplane(h).covector), x);
            const Rat after = dot(to_rat(nrm.hyperplane(h).covector), gx);
            // canonical rescaling may change each covector by a positive
            // rational factor; vanishing and sign structure is what transfers
            CHECK(before.is_zero() == after.is_zero());
        }
    }
    // exact transform identity on the raw (unscaled) transported covectors
    const RatMatrix ginv = inverse(g);
    for (std::size_t h = 0; h < shuffled.count(); ++h) {
        const std::vector<Rat> transported = vec_mat(to_rat(shuffled.hyperplane(h).covector), ginv);
        const std::vector<Int> prim = primitive(transported);
        CHECK(prim == nrm.hyperplane(h).covector);
    }

    const Arrangement exact(2, {rv({1, 1, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    auto [nrm2, g2] = normalize(exact);
    CHECK(nrm2.normalized());
    CHECK(nrm2.count() == 3);
    CHECK(nrm2.extra() == 0);

    CHECK_THROWS_AS(normalize(Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0})})), DegenerateInput);
}

TEST_CASE("dual points") {
    const Arrangement a(2, {rv({1, 0, 0}), rv({2, -4, 0})});
    const auto pts = dual_points(a);
    CHECK(pts[0].coords == std::vector<Int>{Int(1), Int(0), Int(0)});
    CHECK(pts[1].coords == std::vector<Int>{Int(1), Int(-2), Int(0)});

    const auto noguchi_pts = dual_points(noguchi6());
    for (std::size_t i = 0; i < noguchi_pts.size(); ++i)
        for (std::size_t j = i + 1; j < noguchi_pts.size(); ++j)
            CHECK(noguchi_pts[i] != noguchi_pts[j]);

    // involution: points read back as covectors give the primitive covectors
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(noguchi_pts[i].coords == noguchi6().hyperplane(i).covector);
}

TEST_CASE("stratum restriction") {
    Rng rng(17);
    const Arrangement a3 = random_arrangement(3, 6, rng, 10);
    const Arrangement r0 = restrict_to_stratum(a3, StratumIndex{{0}});
    CHECK(r0.dim() == 2);
    CHECK(r0.count() == 5);
    CHECK(is_general_position(r0));

    CHECK(restrict_to_stratum(a3, StratumIndex{{}}).hyperplanes() == a3.hyperplanes());

    const Arrangement a2 = random_arrangement(2, 6, rng, 10);
    const Arrangement r1 = restrict_to_stratum(a2, StratumIndex{{0}});
    CHECK(r1.dim() == 1);
    CHECK(r1.count() == 5);

    CHECK_THROWS_AS(restrict_to_stratum(a2, StratumIndex{{0, 1}}), DegenerateInput);
}

TEST_CASE("iterated restriction matches two-index restriction up to coordinates") {
    Rng rng(19);
    const Arrangement a = random_arrangement(3, 7, rng, 10);
    const Arrangement two = restrict_to_stratum(a, StratumIndex{{1, 4}});
    Arrangement one = restrict_to_stratum(a, StratumIndex{{1}});
    // hyperplane 4 has index 3 after removing index 1
    const Arrangement chained = restrict_to_stratum(one, StratumIndex{{3}});
    REQUIRE(two.count() == chained.count());
    CHECK(two.dim() == chained.dim());
    // Same intersection pattern: matching ranks of all covector pairs/triples
    // is what "equal up to coordinate change" means for arrangements.
    for (std::size_t i = 0; i < two.count(); ++i)
        for (std::size_t j = i + 1; j < two.count(); ++j) {
            RatMatrix pi(2, two.dim() + 1), pj(2, two.dim() + 1);
            for (std::size_t m = 0; m <= two.dim(); ++m) {
                pi(0, m) = Rat(two.hyperplane(i).covector[m]);
                pi(1, m) = Rat(two.hyperplane(j).covector[m]);
                pj(0, m) = Rat(chained.hyperplane(i).covector[m]);
                pj(1, m) = Rat(chained.hyperplane(j).covector[m]);
            }
            CHECK(rank(pi) == rank(pj));
        }
    CHECK(is_general_position(two));
    CHECK(is_general_position(chained));
}

TEST_CASE("rank criterion is closed under restriction on random arrangements") {
    Rng rng(29);
    std::size_t checked = 0;
    while (checked < 20) {
        const Arrangement a = random_arrangement(3, 10, rng, 12);
        if (conditions_rank(dual_points(a), 3) != 10) continue;  // want criterion to hold
        ++checked;
        for (std::size_t i = 0; i < a.count(); ++i) {
            const Arrangement r = restrict_to_stratum(a, StratumIndex{{i}});
            CHECK(ample_mod_boundary_criterion(r));
        }
    }
}
