#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logtangent/arrangement.hpp"
#include "logtangent/poly.hpp"
#include "logtangent/report.hpp"
#include "logtangent/rng.hpp"

namespace logtangent {

/// Orbifold divisor sum (1 - 1/m_i) H_i: one multiplicity per hyperplane,
/// nullopt meaning infinity (the logarithmic case).
struct OrbifoldDivisor {
    Arrangement arrangement;
    std::vector<std::optional<long long>> multiplicities;

    static OrbifoldDivisor with_constant(const Arrangement& a, long long m);
};

/// Audited pole order of the symmetric form along one hyperplane: the
/// maximum over determinant monomials and the order of the summed form.
struct PoleAudit {
    long long per_monomial_max = 0;
    long long total = 0;
};

/// Symmetric differential form built from an n x n minor of the fiber matrix
/// with the column of one distinguished hyperplane removed, twisted by the
/// inverse of its form. The minor vanishes identically on the image of the
/// bundle over that hyperplane, and every monomial has at most a simple pole
/// along the 2n support components.
struct SymmetricFormWitness {
    explicit SymmetricFormWitness(Arrangement w) : working(std::move(w)) {}

    Arrangement working;                      // normalized, roles permuted per the index tuple
    std::vector<std::size_t> index_map;       // working hyperplane index -> original index
    std::size_t distinguished = 1;            // dropped column / twist hyperplane (working index)
    std::vector<std::size_t> kept_columns;    // column indices of the minor ({0, 2, ..., n})
    std::vector<std::size_t> row_hyperplanes; // working indices n+1..2n
    Poly minor_poly = Poly(1);                // degree n in V_1..V_{n+k}
    std::vector<std::size_t> pole_support;    // working indices with possible simple poles
    std::size_t power = 0;                    // exponent 2n for the twisted power
    std::map<std::size_t, PoleAudit> pole_profile;  // by working hyperplane index
    std::size_t identity_samples = 0;         // boundary points checked exactly
};

/// Builds the form witness for the ordered tuple of 2n+1 distinct hyperplane
/// indices (the element at position 1 is the distinguished one; the other 2n
/// carry the poles). The arrangement is reordered so the first n+1 tuple
/// entries become coordinate hyperplanes. Requires k >= n. The identity
/// "minor vanishes on the boundary image" is verified on `identity_samples`
/// seeded points; pole orders are audited along every hyperplane.
SymmetricFormWitness build_form(const Arrangement& a, const std::vector<std::size_t>& tuple,
                                Rng& rng, std::size_t identity_samples = 50);

/// Default tuple (0, 1, ..., 2n).
std::vector<std::size_t> default_form_tuple(std::size_t n);

/// Pole orders of the evaluated form along a seeded transverse line through
/// each hyperplane, via truncated-series valuations. trunc_order 0 selects
/// the default 4n+2.
std::map<std::size_t, PoleAudit> audit_poles(const SymmetricFormWitness& w, Rng& rng,
                                             std::size_t trunc_order = 0);

struct OrbifoldCertificate {
    bool issued = false;
    int failed_clause = 0;  // 1: multiplicities, 2: rank criterion, 3: strata
    std::string refusal;    // human-readable reason when not issued
    std::size_t n = 0, c = 0;
    long long min_finite_multiplicity = 0;
    std::size_t conditions_rank = 0;
    std::size_t rank_threshold = 0;
    std::vector<std::pair<StratumIndex, bool>> strata;
    std::optional<SymmetricFormWitness> form;
};

/// Certificate that the orbifold cotangent bundle is ample modulo the
/// boundary: all finite multiplicities >= 2n, the rank criterion holds, and
/// every stratum restriction passes. Refusals carry the first failed clause.
OrbifoldCertificate orbifold_certificate(const OrbifoldDivisor& d, Rng& rng);

struct FermatCover {
    long long m = 1;
    std::size_t n = 0, k = 0;
    std::vector<Poly> equations;  // k polynomials in the n+k+1 variables X_0..X_{n+k}
    bool hyperbolicity_certificate = false;
    std::string refusal;          // why the certificate was not issued
    OrbifoldCertificate base_certificate;
};

/// Cyclic cover X_{n+j}^m = sum_i a_i^j X_i^m attached to a constant
/// multiplicity m; carries a hyperbolicity certificate when the orbifold
/// certificate is issued and c >= 4n-2. Requires a normalized arrangement
/// and constant finite multiplicities.
FermatCover fermat_cover(const OrbifoldDivisor& d, Rng& rng);

}  // namespace logtangent
