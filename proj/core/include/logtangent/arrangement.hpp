#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "logtangent/linalg.hpp"
#include "logtangent/rat.hpp"
#include "logtangent/rng.hpp"

namespace logtangent {

/// Point of P^n in primitive-integer canonical form (content 1, first
/// nonzero coordinate positive).
struct ProjPoint {
    std::vector<Int> coords;

    static ProjPoint from_rats(const std::vector<Rat>& v);
    static ProjPoint from_ints(const std::vector<Int>& v);

    bool operator==(const ProjPoint& o) const = default;
};

/// Hyperplane of P^n stored as a primitive-integer covector.
struct Hyperplane {
    std::vector<Int> covector;

    static Hyperplane from_rats(const std::vector<Rat>& v);

    bool operator==(const Hyperplane& o) const = default;
};

/// Sorted index set I with |I| < n selecting a stratum D_I of the arrangement.
struct StratumIndex {
    std::vector<std::size_t> indices;
};

/// A hyperplane arrangement in P^n over Q. Hyperplanes are pairwise
/// non-proportional and kept in input order; "normalized" means hyperplanes
/// 0..n are the coordinate hyperplanes Z_0, ..., Z_n.
class Arrangement {
  public:
    Arrangement(std::size_t n, std::vector<std::vector<Rat>> covectors);

    std::size_t dim() const { return n_; }         // the n of P^n
    std::size_t count() const { return hyperplanes_.size(); }  // c
    /// c = n + k + 1; negative k never occurs because k() requires c >= n+1.
    std::size_t extra() const;                     // k

    const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_.at(i); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    bool normalized() const;

    /// Coefficient a_i^j of the normalized arrangement: entry i of the
    /// covector of hyperplane n+1+j (0-based j < k). Requires normalized().
    Rat coeff(std::size_t i, std::size_t j) const;

  private:
    std::size_t n_;
    std::vector<Hyperplane> hyperplanes_;
};

/// True iff every subset of min(c, n+1) covectors is linearly independent.
bool is_general_position(const Arrangement& a);

/// Coordinate change making the first n+1 hyperplanes the coordinate
/// hyperplanes. Returns the new arrangement and the matrix g realizing the
/// change: points map as x' = g x, covectors as u' = u g^{-1}, so that
/// u'(x') = u(x) exactly. Throws DegenerateInput when c < n+1 or the
/// arrangement is not in general position.
std::pair<Arrangement, RatMatrix> normalize(const Arrangement& a);

/// Covectors read as points of the dual projective space.
std::vector<ProjPoint> dual_points(const Arrangement& a);

/// Induced arrangement of the c - |I| hyperplanes D_j ∩ D_I inside
/// D_I ≅ P^(n-|I|): coordinates are changed so I indexes coordinate
/// hyperplanes, then those coordinates are deleted.
Arrangement restrict_to_stratum(const Arrangement& a, const StratumIndex& I);

/// Seeded random general-position arrangement: coordinate hyperplanes plus
/// random primitive covectors, resampled until general position holds.
Arrangement random_arrangement(std::size_t n, std::size_t c, Rng& rng,
                               long long height = kDefaultHeight);

}  // namespace logtangent
