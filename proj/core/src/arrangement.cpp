#include "logtangent/arrangement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "logtangent/errors.hpp"

namespace logtangent {

namespace {

bool all_zero(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Enumerates size-m subsets of {0..total-1} in lexicographic order and calls
// f on each; f returns false to abort the walk.
template <typename F>
bool for_each_subset(std::size_t total, std::size_t m, F&& f) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    if (m > total) return true;
    for (;;) {
        if (!f(idx)) return false;
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (idx[i] != i + total - m) break;
            if (i == 0) return true;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

ProjPoint ProjPoint::from_rats(const std::vector<Rat>& v) {
    ProjPoint p{primitive(v)};
    if (all_zero(p.coords)) throw std::invalid_argument("ProjPoint: zero coordinate vector");
    return p;
}

ProjPoint ProjPoint::from_ints(const std::vector<Int>& v) {
    ProjPoint p{primitive_int(v)};
    if (all_zero(p.coords)) throw std::invalid_argument("ProjPoint: zero coordinate vector");
    return p;
}

Hyperplane Hyperplane::from_rats(const std::vector<Rat>& v) {
    Hyperplane h{primitive(v)};
    if (all_zero(h.covector)) throw std::invalid_argument("Hyperplane: zero covector");
    return h;
}

Arrangement::Arrangement(std::size_t n, std::vector<std::vector<Rat>> covectors) : n_(n) {
    if (n < 1) throw std::invalid_argument("Arrangement: ambient dimension must be >= 1");
    if (covectors.empty()) throw std::invalid_argument("Arrangement: needs at least one hyperplane");
    hyperplanes_.reserve(covectors.size());
    for (std::size_t i = 0; i < covectors.size(); ++i) {
        if (covectors[i].size() != n + 1)
            throw std::invalid_argument("Arrangement: covector " + std::to_string(i) +
                                        " has wrong length");
        hyperplanes_.push_back(Hyperplane::from_rats(covectors[i]));
    }
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
        for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j)
            if (hyperplanes_[i] == hyperplanes_[j])
                throw std::invalid_argument("Arrangement: hyperplanes " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
}

std::size_t Arrangement::extra() const {
    if (count() < n_ + 1) throw DegenerateInput("Arrangement: fewer than n+1 hyperplanes");
    return count() - n_ - 1;
}

bool Arrangement::normalized() const {
    if (count() < n_ + 1) return false;
    for (std::size_t i = 0; i <= n_; ++i) {
        const auto& cv = hyperplanes_[i].covector;
        for (std::size_t j = 0; j <= n_; ++j) {
            if (cv[j] != Int(i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

Rat Arrangement::coeff(std::size_t i, std::size_t j) const {
    if (!normalized()) throw DegenerateInput("Arrangement::coeff requires a normalized arrangement");
    if (i > n_ || j >= extra()) throw std::out_of_range("Arrangement::coeff: index out of range");
    return Rat(hyperplanes_[n_ + 1 + j].covector[i]);
}

bool is_general_position(const Arrangement& a) {
    const std::size_t c = a.count();
    const std::size_t m = std::min(c, a.dim() + 1);
    RatMatrix all(c, a.dim() + 1);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j <= a.dim(); ++j) all(i, j) = Rat(a.hyperplane(i).covector[j]);
    if (c <= a.dim() + 1) return rank(all) == c;
    // Every (n+1)-subset of covectors must be independent.
    return for_each_subset(c, m, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> cols(a.dim() + 1);
        for (std::size_t j = 0; j <= a.dim(); ++j) cols[j] = j;
        return !minor_det(all, idx, cols).is_zero();
    });
}

std::pair<Arrangement, RatMatrix> normalize(const Arrangement& a) {
    const std::size_t n = a.dim();
    if (a.count() < n + 1) throw DegenerateInput("normalize: needs at least n+1 hyperplanes");
    if (!is_general_position(a)) throw DegenerateInput("normalize: arrangement not in general position");

    // g has the first n+1 covectors as rows; then l_i(x) = (g x)_i, so in the
    // new coordinates x' = g x hyperplane i becomes Z'_i = 0.
    RatMatrix g(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) g(i, j) = Rat(a.hyperplane(i).covector[j]);
    RatMatrix ginv = inverse(g);

    std::vector<std::vector<Rat>> covs;
    covs.reserve(a.count());
    for (std::size_t i = 0; i < a.count(); ++i) {
        std::vector<Rat> u = to_rat(a.hyperplane(i).covector);
        covs.push_back(vec_mat(u, ginv));
    }
    return {Arrangement(n, std::move(covs)), g};
}

std::vector<ProjPoint> dual_points(const Arrangement& a) {
    std::vector<ProjPoint> pts;
    pts.reserve(a.count());
    for (const Hyperplane& h : a.hyperplanes()) pts.push_back(ProjPoint::from_ints(h.covector));
    return pts;
}

Arrangement restrict_to_stratum(const Arrangement& a, const StratumIndex& I) {
    const std::size_t n = a.dim();
    const std::size_t r = I.indices.size();
    if (r >= n) throw DegenerateInput("restrict_to_stratum: |I| must be < n");
    if (!std::is_sorted(I.indices.begin(), I.indices.end()) ||
        std::adjacent_find(I.indices.begin(), I.indices.end()) != I.indices.end())
        throw std::invalid_argument("restrict_to_stratum: index set must be sorted and distinct");
    for (std::size_t i : I.indices)
        if (i >= a.count()) throw std::out_of_range("restrict_to_stratum: index out of range");
    if (!is_general_position(a))
        throw DegenerateInput("restrict_to_stratum: arrangement not in general position");
    if (r == 0) return a;

    // Coordinate change sending the covectors of I to e_0..e_{r-1}: complete
    // them greedily with standard basis covectors, then invert.
    RatMatrix g(n + 1, n + 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= n; ++j) g(i, j) = Rat(a.hyperplane(I.indices[i]).covector[j]);
    std::size_t next = r;
    for (std::size_t e = 0; e <= n && next <= n; ++e) {
        RatMatrix trial = g;
        trial(next, e) = Rat(1);
        std::size_t need = next + 1;
        RatMatrix top(need, n + 1);
        for (std::size_t i = 0; i < need; ++i)
            for (std::size_t j = 0; j <= n; ++j) top(i, j) = trial(i, j);
        if (rank(top) == need) {
            g = trial;
            ++next;
        }
    }
    if (next != n + 1) throw DegenerateInput("restrict_to_stratum: could not complete coordinate basis");
    RatMatrix ginv = inverse(g);

    std::vector<std::vector<Rat>> covs;
    covs.reserve(a.count() - r);
    for (std::size_t i = 0; i < a.count(); ++i) {
        if (std::binary_search(I.indices.begin(), I.indices.end(), i)) continue;
        std::vector<Rat> u = vec_mat(to_rat(a.hyperplane(i).covector), ginv);
        // Delete the coordinates of the stratum (the first r in new coords).
        std::vector<Rat> v(u.begin() + static_cast<std::ptrdiff_t>(r), u.end());
        covs.push_back(std::move(v));
    }
    return Arrangement(n - r, std::move(covs));
}

Arrangement random_arrangement(std::size_t n, std::size_t c, Rng& rng, long long height) {
    if (c < n + 1) throw std::invalid_argument("random_arrangement: needs c >= n+1");
    for (;;) {
        std::vector<std::vector<Rat>> covs;
        covs.reserve(c);
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<Rat> e(n + 1);
            e[i] = Rat(1);
            covs.push_back(std::move(e));
        }
        for (std::size_t i = n + 1; i < c; ++i) covs.push_back(rng.nonzero_vector(n + 1, height));
        try {
            Arrangement a(n, std::move(covs));
            if (is_general_position(a)) return a;
        } catch (const std::invalid_argument&) {
            // proportional pair; resample
        }
    }
}

}  // namespace logtangent
