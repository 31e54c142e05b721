#include <doctest.h>

#include "logtangent/arrangement.hpp"
#include "logtangent/linalg.hpp"
#include "logtangent/quadric.hpp"
#include "logtangent/rng.hpp"
#include "support.hpp"

using namespace logtangent;
using namespace logtangent::testing;

namespace {

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long long height) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational(height);
    return m;
}

// 5x6 Veronese matrix of the points (1, t, t^2), t = 0..4.
RatMatrix veronese_conic_matrix() {
    RatMatrix m(5, 6);
    for (std::size_t t = 0; t < 5; ++t) {
        const auto row = veronese_row(
            ProjPoint::from_rats(rv({1, static_cast<long long>(t), static_cast<long long>(t * t)})), 2);
        for (std::size_t j = 0; j < 6; ++j) m(t, j) = row[j];
    }
    return m;
}

}  // namespace

TEST_CASE("rank: identity, rank-one, Veronese") {
    CHECK(rank(RatMatrix::identity(2)) == 2);
    RatMatrix ones(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = Rat(1);
    CHECK(rank(ones) == 1);
    // Expected value frozen from the independent elimination oracle.
    const RatMatrix ver = veronese_conic_matrix();
    CHECK(naive_rank(ver) == 5);
    CHECK(rank(ver) == 5);
}

TEST_CASE("kernel bases are primitive and exact") {
    const RatMatrix m = make_matrix({{1, -1}});
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Int>{Int(1), Int(1)});

    const RatMatrix full = make_matrix({{1, 0}, {0, 1}, {1, 1}});
    CHECK(kernel_basis(full).empty());

    // The unique conic through the five points, located by the kernel and
    // checked by direct substitution.
    const auto ker = kernel_basis(veronese_conic_matrix());
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<Int>{Int(0), Int(0), Int(1), Int(-1), Int(0), Int(0)});
    for (long long t = 0; t < 5; ++t) {
        // Z0 Z2 - Z1^2 at (1, t, t^2)
        CHECK(Int(1) * Int(t * t) - Int(t) * Int(t) == 0);
    }
}

TEST_CASE("minors: conventions and exact values") {
    const RatMatrix d = make_matrix({{2, 0}, {0, 3}});
    CHECK(minor_det(d, {}, {}) == Rat(1));
    CHECK(minor_det(d, {0, 1}, {0, 1}) == Rat(6));
    const RatMatrix b = make_matrix({{1, 2}, {3, 4}});
    CHECK(minor_det(b, {0, 1}, {0, 1}) == Rat(-2));
    CHECK_THROWS_AS(minor_det(b, {0, 2}, {0, 1}), std::out_of_range);
    CHECK_THROWS_AS(minor_det(b, {0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("rank-nullity and kernel exactness on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + static_cast<std::size_t>(rng.int_in(0, 5));
        const std::size_t c = 1 + static_cast<std::size_t>(rng.int_in(0, 5));
        const RatMatrix m = random_matrix(rng, r, c, 8);
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == c);
        CHECK(rank(m) == naive_rank(m));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < r; ++i) {
                Rat s;
                for (std::size_t j = 0; j < c; ++j) s += m(i, j) * Rat(v[j]);
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("Bareiss determinant equals cofactor expansion on random 4x4") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const RatMatrix m = random_matrix(rng, 4, 4, 10);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("solve and inverse") {
    const RatMatrix a = make_matrix({{2, 1}, {1, 3}});
    const auto x = solve_particular(a, rv({5, 10}));
    REQUIRE(x.has_value());
    CHECK(mat_vec(a, *x) == rv({5, 10}));
    const RatMatrix inv = inverse(a);
    CHECK(mat_mul(a, inv) == RatMatrix::identity(2));

    const RatMatrix sing = make_matrix({{1, 2}, {2, 4}});
    CHECK_THROWS(inverse(sing));
    CHECK_FALSE(solve_particular(sing, rv({1, 0})).has_value());
}
