#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "logtangent/arrangement.hpp"
#include "logtangent/quadric.hpp"
#include "logtangent/rng.hpp"

namespace logtangent {

/// Line in P^n through two distinct points. Its dual is the codimension-2
/// linear space W = l* of the dual projective space, cut out by the two
/// covectors p and q.
struct ProjLine {
    ProjPoint p, q;

    static ProjLine through(const ProjPoint& p, const ProjPoint& q);

    std::size_t ambient_dim() const { return p.coords.size() - 1; }

    /// 2 x (n+1) matrix with rows p and q: the defining equations of l* in
    /// the dual space.
    RatMatrix dual_plane() const;

    /// Parametrization phi(s, t) = s p + t q evaluated exactly.
    std::vector<Rat> at(const Rat& s, const Rat& t) const;

    bool operator==(const ProjLine& o) const = default;
};

/// Homogeneous tangency conditions along a line: unknowns are the 2(n+1)
/// coefficients of a tuple of linear forms L_m(s,t) = alpha_m s + beta_m t
/// (layout: alpha_0..alpha_n, beta_0..beta_n); row i imposes
/// l_i(L(s_i, t_i)) = 0 at the meeting parameter of the line with
/// hyperplane i. The parametrization coefficients themselves (the Euler
/// vector) always solve the system.
struct TangencySystem {
    RatMatrix matrix;                              // c x 2(n+1)
    std::vector<std::array<Int, 2>> meeting_params;  // primitive (s_i : t_i)
    std::vector<Int> euler;                        // length 2(n+1)
    bool meets_stratum = false;                    // two meeting params coincide
};

/// Requires the line to lie in no hyperplane of the arrangement.
TangencySystem tangency_system(const Arrangement& a, const ProjLine& l);

struct SuperjumpingResult {
    bool superjumping = false;
    bool boundary = false;       // line inside some hyperplane: superjumping immediately
    bool meets_stratum = false;  // flagged: the kernel count is not asserted there
    std::size_t kernel_dim = 0;  // of the tangency system, Euler included
    std::optional<std::vector<Int>> witness;  // kernel vector reduced mod Euler
};

/// Tangency-kernel test: superjumping iff the kernel strictly exceeds the
/// Euler family.
SuperjumpingResult is_superjumping(const Arrangement& a, const ProjLine& l);

struct DualSuperjumpingResult {
    bool superjumping = false;
    bool boundary = false;
    std::size_t space_dim = 0;           // dim of quadrics through duals and l*
    bool reducible_caveat = false;       // only rank<=2 members were found
    std::optional<Quadric> quadric;      // a member (rank <= 4 automatically)
};

/// Dual-space test: superjumping iff some quadric contains all dual points
/// and the dual plane l*.
DualSuperjumpingResult is_superjumping_dual(const Arrangement& a, const ProjLine& l);

struct SuperjumpingCheck {
    SuperjumpingResult primal;
    DualSuperjumpingResult dual;
};

/// Runs both tests and throws OracleDisagreement if they differ.
SuperjumpingCheck superjumping_checked(const Arrangement& a, const ProjLine& l);

/// Degree-1 map l -> H_0 induced by a tangency witness: (n+1) linear forms
/// in (s, t) whose l_0-contraction vanishes identically, with
/// psi(l ∩ H_i) ∈ H_0 ∩ H_i for every i.
struct PsiMap {
    std::vector<std::array<Rat, 2>> forms;  // (alpha_m, beta_m) per coordinate

    std::vector<Rat> at(const Rat& s, const Rat& t) const;
};

/// Builds the map from a non-Euler kernel witness. Throws DegenerateInput if
/// the witness lies in the Euler family or induces a constant map,
/// std::invalid_argument if it does not solve the tangency system.
PsiMap build_psi(const Arrangement& a, const ProjLine& l, const std::vector<Int>& witness);

/// The quadric through the dual points and l* matched against the incidence
/// family {x, psi(x)}^perp of the map. Throws DegenerateInput when the
/// linear system is empty (inconsistent witness).
Quadric scroll_from_psi(const ProjLine& l, const PsiMap& psi, const Arrangement& a);

struct LocusSample {
    std::size_t trials = 0;
    std::size_t hits = 0;
    std::size_t stratum_flagged = 0;
    std::vector<std::pair<ProjLine, std::vector<Int>>> witnesses;
};

/// Samples random rational lines off the boundary and counts superjumping
/// hits; every line is run through both tests.
LocusSample sample_superjumping_locus(const Arrangement& a, std::size_t trials, Rng& rng,
                                      long long height = kDefaultHeight);

/// Superjumping lines harvested from a witness quadric in the dual space:
/// duals of its rational ruling (n-2)-planes. Returns at most `want` lines;
/// may return fewer (rulings need not be rational).
std::vector<ProjLine> witness_lines_from_quadric(const Arrangement& a, const Quadric& x, Rng& rng,
                                                 std::size_t want, std::size_t budget = 200);

/// Seeded random line not contained in any hyperplane of the arrangement.
ProjLine random_line(const Arrangement& a, Rng& rng, long long height = kDefaultHeight);

}  // namespace logtangent
