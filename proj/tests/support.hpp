#pragma once

#include <vector>

#include "logtangent/arrangement.hpp"
#include "logtangent/linalg.hpp"
#include "logtangent/rat.hpp"

namespace logtangent::testing {

inline std::vector<Rat> rv(std::initializer_list<long long> xs) {
    std::vector<Rat> v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline RatMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long x : row) m(i, j++) = Rat(x);
        ++i;
    }
    return m;
}

/// Six lines in the plane whose dual points impose independent conditions on
/// conics: the coordinate triangle plus three members of a Vandermonde pencil.
inline Arrangement noguchi6() {
    return Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 1}),
                           rv({1, 2, 3}), rv({1, 4, 9})});
}

/// c lines dual to the points (1, t, t^2), t = 0..c-1: all dual points lie on
/// the conic U_0 U_2 = U_1^2.
inline Arrangement conic_tangent(std::size_t c) {
    std::vector<std::vector<Rat>> covs;
    for (std::size_t t = 0; t < c; ++t)
        covs.push_back(rv({1, static_cast<long long>(t), static_cast<long long>(t * t)}));
    return Arrangement(2, std::move(covs));
}

/// Plane arrangements used across tests: the coordinate triangle plus one.
inline Arrangement coords_plus_one() {
    return Arrangement(2, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 1})});
}

/// c planes in P^3 dual to points (ac : ad : bc : bd) of the doubly ruled
/// quadric U_0 U_3 = U_1 U_2; its rulings are rational.
inline Arrangement segre_arrangement(const std::vector<std::array<long long, 4>>& params) {
    std::vector<std::vector<Rat>> covs;
    for (const auto& [a, b, c, d] : params)
        covs.push_back(rv({a * c, a * d, b * c, b * d}));
    return Arrangement(3, std::move(covs));
}

/// Independent rank oracle: naive rational Gaussian elimination.
inline std::size_t naive_rank(RatMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, c).is_zero()) continue;
            const Rat f = m(i, c) / m(rank, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Independent determinant oracle: cofactor expansion along the first row.
inline Rat cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m(0, 0);
    Rat det;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (!m(0, c).is_zero()) {
            RatMatrix sub(n - 1, n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t jj = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == c) continue;
                    sub(i - 1, jj++) = m(i, j);
                }
            }
            const Rat term = m(0, c) * cofactor_det(sub);
            det = sign > 0 ? det + term : det - term;
        }
        sign = -sign;
    }
    return det;
}

}  // namespace logtangent::testing
