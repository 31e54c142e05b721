#include <doctest.h>

#include "logtangent/poly.hpp"
#include "logtangent/rng.hpp"
#include "logtangent/series.hpp"

using namespace logtangent;

TEST_CASE("series valuation") {
    CHECK(TruncSeries({Rat(0), Rat(0), Rat(5)}, 3).valuation() == 2);
    CHECK(TruncSeries({Rat(1), Rat(3)}, 4).valuation() == 0);
    CHECK_FALSE(TruncSeries({Rat(0)}, 3).valuation().has_value());
    CHECK_THROWS_AS(TruncSeries({}, 0), std::invalid_argument);
}

TEST_CASE("series product valuations add below truncation") {
    Rng rng(5);
    const std::size_t T = 10;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> a(T), b(T);
        const std::size_t va = static_cast<std::size_t>(rng.int_in(0, 3));
        const std::size_t vb = static_cast<std::size_t>(rng.int_in(0, 3));
        for (std::size_t i = va; i < T; ++i) a[i] = rng.rational(9);
        for (std::size_t i = vb; i < T; ++i) b[i] = rng.rational(9);
        a[va] = rng.nonzero_rational(9);
        b[vb] = rng.nonzero_rational(9);
        const TruncSeries s(a, T), t(b, T);
        REQUIRE(s.valuation() == va);
        REQUIRE(t.valuation() == vb);
        CHECK((s * t).valuation() == va + vb);
    }
}

TEST_CASE("polynomial arithmetic and evaluation") {
    const Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
    const Poly p = x * x - y.scaled(Rat(2)) + Poly::constant(2, Rat(Int(1), Int(3)));
    CHECK(p.eval({Rat(3), Rat(1)}) == Rat(9) - Rat(2) + Rat(Int(1), Int(3)));
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((x * y) * x == x * (y * x));
}

TEST_CASE("polynomial determinant commutes with evaluation") {
    Rng rng(23);
    const std::size_t nv = 3;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.int_in(0, 2));
        std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(nv)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Poly e = Poly::constant(nv, rng.rational(5));
                for (std::size_t v = 0; v < nv; ++v)
                    e = e + Poly::var(nv, v).scaled(rng.rational(5));
                m[i][j] = e;
            }
        const Poly det = poly_det(m);
        const std::vector<Rat> at = {rng.rational(7), rng.rational(7), rng.rational(7)};
        RatMatrix num(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) num(i, j) = m[i][j].eval(at);
        CHECK(det.eval(at) == determinant(num));
    }
}
