#pragma once

#include <cstddef>
#include <vector>

#include "logtangent/arrangement.hpp"
#include "logtangent/linalg.hpp"
#include "logtangent/poly.hpp"
#include "logtangent/rng.hpp"

namespace logtangent {

/// A point of the log projectivized bundle over the affine chart z_0 = 1:
/// base point z (length n) and log direction xi (length n, projective, via
/// the frame z_i d/dz_i).
struct LogDirection {
    std::vector<Rat> z;
    std::vector<Rat> xi;
};

/// Evaluation morphism in normalized coordinates:
///   V = [xi_1 : ... : xi_n : (sum_i a_i^1 xi_i z_i)/l_1(1,z) : ...],
/// returned as a primitive-integer projective vector of length n+k.
/// Requires z off every hyperplane. Throws DegenerateInput otherwise.
std::vector<Int> phi_eval(const Arrangement& a, const LogDirection& d);

/// Same formula, but the base point may lie on the coordinate hyperplanes
/// Z_1..Z_n (the expression only divides by the forms of the extra
/// hyperplanes). Used for boundary-image identities.
std::vector<Int> phi_eval_extended(const Arrangement& a, const LogDirection& d);

/// The k x (n+1) matrix with entry (j, i) = a_i^j (V_{n+j} - V_i), where V
/// has homogeneous coordinates V_1..V_{n+k} and V_0 = 0.
RatMatrix fiber_matrix(const Arrangement& a, const std::vector<Rat>& v);

struct Fiber {
    bool in_image = false;
    RatMatrix equations;                          // rows a_i^j (V_i - V_{n+j})
    std::vector<std::vector<Int>> solution_basis; // projective solution space
    std::vector<Rat> forced_xi;                   // (V_1, ..., V_n)
    long long projective_dim = -1;                // n - rank(fiber matrix)
};

/// Solves the fiber equations over V; in_image is false when the matrix has
/// full rank n+1 (empty fiber).
Fiber fiber(const Arrangement& a, const std::vector<Rat>& v);

/// All (n+1)x(n+1) minors of the symbolic fiber matrix, as polynomials of
/// degree n+1 in the variables V_1..V_{n+k}. Empty when k <= n (the
/// evaluation morphism is then dominant).
std::vector<Poly> image_minors(const Arrangement& a);

struct BignessResult {
    bool big = false;
    std::size_t generic_fiber_dim = 0;
    std::size_t generic_rank = 0;
};

/// Bigness threshold c >= 2n+1 cross-checked against the generic fiber
/// dimension computed at seeded random directions. Throws DegenerateInput on
/// inconsistency (arrangement mislabeled as general) or when c < n+2.
BignessResult is_big(const Arrangement& a, Rng& rng, long long height = kDefaultHeight);

/// Seeded base point and direction admissible for phi_eval; when
/// on_hyperplane is npos the point avoids all hyperplanes, otherwise it is
/// sampled on that coordinate hyperplane and off all others.
LogDirection random_log_direction(const Arrangement& a, Rng& rng,
                                  std::size_t on_hyperplane = static_cast<std::size_t>(-1),
                                  long long height = kDefaultHeight);

}  // namespace logtangent
