#include "logtangent/report.hpp"

#include <algorithm>

#include "logtangent/errors.hpp"
#include "logtangent/tautological.hpp"

namespace logtangent {

PositivityReport analyze(const Arrangement& a, std::uint64_t seed, const AnalyzeOptions& opt) {
    PositivityReport rep;
    rep.n = a.dim();
    rep.c = a.count();
    rep.seed = seed;
    rep.rank_threshold = 4 * rep.n - 2;
    rep.general_position = is_general_position(a);
    if (!rep.general_position) {
        rep.flags.push_back("arrangement not in general position: no classification");
        return rep;
    }

    Rng rng(seed);
    const std::size_t n = rep.n, c = rep.c;

    rep.conditions_rank = conditions_rank(dual_points(a), n);
    rep.ample_mod_boundary = rep.conditions_rank >= rep.rank_threshold;
    rep.almost_ample = rep.ample_mod_boundary;

    if (c >= n + 2) {
        const BignessResult b = is_big(a, rng, opt.height);
        rep.big = b.big;
        rep.generic_fiber_dim = b.generic_fiber_dim;
    } else {
        rep.big = false;
        if (c == n + 1) {
            rep.generic_fiber_dim = n;  // the evaluation map is the direction projection
        } else {
            rep.flags.push_back("fewer than n+1 hyperplanes: evaluation morphism not globally defined");
        }
    }

    // Projection of the augmented base locus away from the boundary.
    if (rep.ample_mod_boundary) {
        rep.base_locus_image.kind = BaseLocusKind::Empty;
    } else if (n == 2) {
        // In the plane the witness is a conic and its tangent lines sweep
        // everything; there are no intermediate dimensions.
        rep.base_locus_image.kind = BaseLocusKind::Full;
        rep.base_locus_image.dim = 2;
    } else if (c <= 3 * n - 1) {
        rep.base_locus_image.kind = BaseLocusKind::Full;
        rep.base_locus_image.dim = static_cast<long long>(n);
    } else if (c <= 4 * n - 3 && rep.conditions_rank == c) {
        rep.base_locus_image.kind = BaseLocusKind::Exact;
        rep.base_locus_image.dim = 4 * static_cast<long long>(n) - 1 - static_cast<long long>(c);
    } else {
        rep.base_locus_image.kind = BaseLocusKind::Interval;
        rep.base_locus_image.lower =
            std::max<long long>(2, 4 * static_cast<long long>(n) - 1 - static_cast<long long>(c));
        rep.base_locus_image.upper = static_cast<long long>(n);
        rep.flags.push_back("arrangement not quadric-general: base locus dimension bracketed only");
    }

    if (n + 2 <= c && c <= 3 * n - 1)
        rep.upstairs_dim_bound = 4 * static_cast<long long>(n) - 1 - static_cast<long long>(c);

    if (!rep.ample_mod_boundary) {
        const QuadricSpace space = quadrics_through(dual_points(a), n);
        WitnessSearchConfig cfg;
        cfg.height = opt.witness_height;
        cfg.budget = opt.budget;
        if (auto w = low_rank_witness(space, rng, cfg)) {
            rep.quadric_witnesses.push_back(*w);
            const std::size_t r = w->rank();
            if (r == 3 || r == 4) {
                rep.dual_surfaces.push_back(dual_quadric(*w));
                rep.line_witnesses = witness_lines_from_quadric(a, *w, rng, opt.ruling_lines);
                if (rep.line_witnesses.empty())
                    rep.flags.push_back("witness quadric found but no rational ruling line within budget");
            } else {
                rep.flags.push_back("witness quadric is reducible (rank <= 2): scroll structure degenerate");
            }
        } else {
            rep.flags.push_back("no rank<=4 witness found within budget (search is not a nonexistence proof)");
        }
    }

    if (opt.samples > 0) {
        rep.sampling = sample_superjumping_locus(a, opt.samples, rng, opt.height);
        if (rep.ample_mod_boundary && rep.sampling.hits > 0)
            throw OracleDisagreement("analyze: superjumping hit on an arrangement passing the rank criterion");
    }
    return rep;
}

std::vector<std::pair<StratumIndex, bool>> check_strata(const Arrangement& a, std::size_t depth) {
    const std::size_t n = a.dim();
    if (depth >= n) throw std::invalid_argument("check_strata: depth must be < n");
    if (!is_general_position(a)) throw DegenerateInput("check_strata: arrangement not in general position");

    std::vector<std::pair<StratumIndex, bool>> out;
    const std::size_t c = a.count();
    for (std::size_t size = 1; size <= depth; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        if (size > c) break;
        for (;;) {
            StratumIndex I{idx};
            const Arrangement restricted = restrict_to_stratum(a, I);
            bool pass = true;
            if (restricted.dim() >= 2) pass = ample_mod_boundary_criterion(restricted);
            out.emplace_back(std::move(I), pass);

            std::size_t i = size;
            bool done = false;
            while (i > 0) {
                --i;
                if (idx[i] != i + c - size) break;
                if (i == 0) done = true;
            }
            if (done) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace logtangent
