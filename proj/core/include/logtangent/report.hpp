#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logtangent/arrangement.hpp"
#include "logtangent/jumping.hpp"
#include "logtangent/quadric.hpp"

namespace logtangent {

enum class BaseLocusKind { Empty, Exact, Full, Interval };

/// Dimension data for the projection of the augmented base locus away from
/// the boundary: Empty (boundary only), an exact dimension, all of P^n, or
/// an interval when the arrangement is not quadric-general.
struct BaseLocusImage {
    BaseLocusKind kind = BaseLocusKind::Empty;
    long long dim = -1;    // Exact
    long long lower = -1;  // Interval
    long long upper = -1;  // Interval
};

struct PositivityReport {
    std::size_t n = 0;
    std::size_t c = 0;
    std::uint64_t seed = 0;
    bool general_position = false;
    std::size_t conditions_rank = 0;
    std::size_t rank_threshold = 0;  // 4n-2
    bool big = false;
    std::optional<std::size_t> generic_fiber_dim;
    bool ample_mod_boundary = false;
    bool almost_ample = false;  // equal to ample_mod_boundary by construction
    BaseLocusImage base_locus_image;
    std::optional<long long> upstairs_dim_bound;
    std::vector<Quadric> quadric_witnesses;
    std::vector<DualSurfaceWitness> dual_surfaces;
    std::vector<ProjLine> line_witnesses;
    LocusSample sampling;  // trials == 0 when sampling was not requested
    std::vector<std::string> flags;
};

struct AnalyzeOptions {
    std::size_t samples = 0;             // off-boundary random lines to test
    long long height = kDefaultHeight;   // sampling height
    long long witness_height = kWitnessHeight;
    std::size_t budget = kWitnessBudget;
    std::size_t ruling_lines = 2;        // superjumping lines to harvest from a witness
};

/// Full classification of one arrangement. Degenerate inputs yield a report
/// with general_position = false and no classification. Deterministic for a
/// fixed (arrangement, seed, options).
PositivityReport analyze(const Arrangement& a, std::uint64_t seed, const AnalyzeOptions& opt = {});

/// For every stratum index I with 1 <= |I| <= depth, whether the restricted
/// arrangement satisfies the quadric-conditions rank criterion. Strata of
/// dimension <= 1 pass vacuously. Requires general position and depth < n.
std::vector<std::pair<StratumIndex, bool>> check_strata(const Arrangement& a, std::size_t depth);

}  // namespace logtangent
