#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "logtangent/arrangement.hpp"
#include "logtangent/linalg.hpp"
#include "logtangent/rng.hpp"

namespace logtangent {

/// Quadric hypersurface up to scale, stored as a symmetric Gram matrix in
/// primitive-integer canonical form (first nonzero entry positive).
class Quadric {
  public:
    explicit Quadric(const RatMatrix& gram);

    std::size_t ambient_dim() const { return gram_.rows() - 1; }  // lives in P^n
    const RatMatrix& gram() const { return gram_; }

    std::size_t rank() const;

    /// q(p) = p^T G p.
    Rat eval(const std::vector<Rat>& p) const;
    /// b(u, v) = u^T G v.
    Rat bilinear(const std::vector<Rat>& u, const std::vector<Rat>& v) const;

    bool operator==(const Quadric& o) const = default;

  private:
    RatMatrix gram_;
};

/// Linear system of quadrics cut out by incidence conditions.
struct QuadricSpace {
    std::size_t n = 0;                  // ambient P^n
    std::vector<Quadric> basis;         // independent generators
    std::size_t conditions_rank = 0;    // rank of the imposed conditions
};

/// Rank-3/4 quadric together with its dual surface: the carrier linear
/// subspace (column span of the Gram matrix, cut out by the kernel
/// covectors) and the dual quadric expressed in a basis of the carrier.
struct DualSurfaceWitness {
    Quadric source;
    std::vector<std::vector<Int>> carrier_equations;  // kernel covectors
    RatMatrix carrier_basis;                          // (n+1) x rank, columns span im G
    Quadric surface;                                  // rank x rank form in that basis
};

/// Number of quadratic monomials on P^n.
std::size_t quadric_monomial_count(std::size_t n);
/// Lexicographic list of index pairs (i <= j) matching the monomial order
/// Z_0^2, Z_0 Z_1, ..., Z_n^2.
std::vector<std::array<std::size_t, 2>> quadric_monomials(std::size_t n);

/// Evaluation of the quadratic monomials at p, in lexicographic order.
std::vector<Rat> veronese_row(const ProjPoint& p, std::size_t n);

/// Rank of the stacked Veronese rows: the number of independent conditions
/// the points impose on quadrics.
std::size_t conditions_rank(const std::vector<ProjPoint>& points, std::size_t n);

/// Linear system of quadrics through all points and (optionally) vanishing
/// identically on the codimension-2 linear space cut out by the two
/// independent covectors in `plane` (a 2 x (n+1) matrix). Vanishing on the
/// plane is imposed as b(w_a, w_b) = 0 over a kernel basis w of `plane`.
QuadricSpace quadrics_through(const std::vector<ProjPoint>& points, std::size_t n,
                              const std::optional<RatMatrix>& plane = std::nullopt);

/// Same, but vanishing identically on each linear subspace spanned by the
/// ROWS of the given matrices.
QuadricSpace quadrics_vanishing_on(const std::vector<ProjPoint>& points, std::size_t n,
                                   const std::vector<RatMatrix>& span_matrices);

/// Decision criterion: the dual points impose at least 4n-2 independent
/// conditions on quadrics. Throws DegenerateInput unless the arrangement is
/// in general position.
bool ample_mod_boundary_criterion(const Arrangement& a);

struct WitnessSearchConfig {
    std::size_t max_rank = 4;
    long long height = kWitnessHeight;
    std::size_t budget = kWitnessBudget;
};

/// Searches the span for an element of rank <= max_rank: each basis element
/// first, then seeded random combinations. A nullopt result after budget
/// exhaustion does NOT certify nonexistence.
std::optional<Quadric> low_rank_witness(const QuadricSpace& space, Rng& rng,
                                        const WitnessSearchConfig& cfg = {});

/// Dual surface of a rank-3 or rank-4 quadric. Throws DegenerateInput for
/// other ranks.
DualSurfaceWitness dual_quadric(const Quadric& q);

/// Projective dimension of the tangent space to the rank<=4 locus at q,
/// computed exactly as the span of the congruence perturbations
/// X^T G + G X over all square matrices X.
std::size_t rank_locus_tangent_dim(const Quadric& q);

/// Budgeted search for a rational point on the quadric (coordinate points,
/// then random-line intersections whose discriminant is a perfect square).
std::optional<ProjPoint> rational_point_on(const Quadric& q, Rng& rng, std::size_t budget,
                                           long long height = kWitnessHeight);

/// The two (n-2)-plane rulings of a rank-<=4 quadric through a smooth point
/// of it, when they are defined over Q. Each plane is returned as a matrix
/// whose rows span it. Returns nullopt when the tangent slice does not split
/// rationally or the point is degenerate.
std::optional<std::array<RatMatrix, 2>> rulings_through(const Quadric& q, const ProjPoint& p);

/// True iff the integer is a perfect square; also yields the root.
bool is_perfect_square(const Int& x, Int* root = nullptr);

}  // namespace logtangent
