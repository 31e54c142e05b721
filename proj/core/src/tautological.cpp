#include "logtangent/tautological.hpp"

#include <algorithm>
#include <stdexcept>

#include "logtangent/errors.hpp"

namespace logtangent {

namespace {

void require_normalized(const Arrangement& a, const char* who) {
    if (!a.normalized()) throw DegenerateInput(std::string(who) + ": arrangement must be normalized");
}

// l_j(1, z) for the extra hyperplane j (0-based), exact.
Rat extra_form_at(const Arrangement& a, std::size_t j, const std::vector<Rat>& z) {
    Rat v = a.coeff(0, j);
    for (std::size_t i = 1; i <= a.dim(); ++i) v += a.coeff(i, j) * z[i - 1];
    return v;
}

std::vector<Int> phi_eval_impl(const Arrangement& a, const LogDirection& d, bool strict) {
    require_normalized(a, "phi_eval");
    const std::size_t n = a.dim();
    const std::size_t k = a.extra();
    if (d.z.size() != n || d.xi.size() != n)
        throw std::invalid_argument("phi_eval: base point and direction must have length n");
    if (std::all_of(d.xi.begin(), d.xi.end(), [](const Rat& x) { return x.is_zero(); }))
        throw std::invalid_argument("phi_eval: zero direction");
    if (strict) {
        for (std::size_t i = 0; i < n; ++i)
            if (d.z[i].is_zero()) throw DegenerateInput("phi_eval: base point on a coordinate hyperplane");
    }
    std::vector<Rat> v(n + k);
    for (std::size_t i = 0; i < n; ++i) v[i] = d.xi[i];
    for (std::size_t j = 0; j < k; ++j) {
        const Rat den = extra_form_at(a, j, d.z);
        if (den.is_zero()) throw DegenerateInput("phi_eval: base point on an arrangement hyperplane");
        Rat num;
        for (std::size_t i = 0; i < n; ++i) num += a.coeff(i + 1, j) * d.xi[i] * d.z[i];
        v[n + j] = num / den;
    }
    std::vector<Int> out = primitive(v);
    if (std::all_of(out.begin(), out.end(), [](const Int& x) { return x == 0; }))
        throw DegenerateInput("phi_eval: evaluation collapsed to zero");
    return out;
}

}  // namespace

std::vector<Int> phi_eval(const Arrangement& a, const LogDirection& d) {
    return phi_eval_impl(a, d, true);
}

std::vector<Int> phi_eval_extended(const Arrangement& a, const LogDirection& d) {
    return phi_eval_impl(a, d, false);
}

RatMatrix fiber_matrix(const Arrangement& a, const std::vector<Rat>& v) {
    require_normalized(a, "fiber_matrix");
    const std::size_t n = a.dim();
    const std::size_t k = a.extra();
    if (v.size() != n + k) throw std::invalid_argument("fiber_matrix: V must have n+k coordinates");
    RatMatrix m(k, n + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i <= n; ++i) {
            const Rat vi = i == 0 ? Rat(0) : v[i - 1];  // V_0 = 0 convention
            m(j, i) = a.coeff(i, j) * (v[n + j] - vi);
        }
    return m;
}

Fiber fiber(const Arrangement& a, const std::vector<Rat>& v) {
    const std::size_t n = a.dim();
    Fiber f;
    RatMatrix m = fiber_matrix(a, v);
    const std::size_t r = rank(m);
    if (r == n + 1) {
        f.in_image = false;
        return f;
    }
    f.in_image = true;
    f.equations = RatMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f.equations(i, j) = -m(i, j);
    f.solution_basis = kernel_basis(f.equations);
    f.forced_xi.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    f.projective_dim = static_cast<long long>(n) - static_cast<long long>(r);
    return f;
}

std::vector<Poly> image_minors(const Arrangement& a) {
    require_normalized(a, "image_minors");
    const std::size_t n = a.dim();
    const std::size_t k = a.extra();
    std::vector<Poly> minors;
    if (k < n + 1) return minors;

    const std::size_t nvars = n + k;  // V_1..V_{n+k}
    std::vector<std::vector<Poly>> sym(k, std::vector<Poly>(n + 1, Poly(nvars)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i <= n; ++i) {
            Poly e = Poly::var(nvars, n + j);  // V_{n+j+1} is variable index n+j
            if (i >= 1) e = e - Poly::var(nvars, i - 1);
            sym[j][i] = e.scaled(a.coeff(i, j));
        }

    // All (n+1)-row subsets, lexicographic.
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    for (;;) {
        std::vector<std::vector<Poly>> sub;
        sub.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) sub.push_back(sym[idx[i]]);
        minors.push_back(poly_det(sub));
        std::size_t i = n + 1;
        bool done = false;
        while (i > 0) {
            --i;
            if (idx[i] != i + k - (n + 1)) break;
            if (i == 0) done = true;
        }
        if (done) break;
        ++idx[i];
        for (std::size_t j = i + 1; j <= n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return minors;
}

LogDirection random_log_direction(const Arrangement& a, Rng& rng, std::size_t on_hyperplane,
                                  long long height) {
    require_normalized(a, "random_log_direction");
    const std::size_t n = a.dim();
    const std::size_t k = a.extra();
    if (on_hyperplane != static_cast<std::size_t>(-1) && (on_hyperplane < 1 || on_hyperplane > n))
        throw std::invalid_argument("random_log_direction: only coordinate hyperplanes 1..n supported");
    for (;;) {
        LogDirection d;
        d.z = rng.rational_vector(n, height);
        if (on_hyperplane != static_cast<std::size_t>(-1)) d.z[on_hyperplane - 1] = Rat(0);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (i + 1 != on_hyperplane && d.z[i].is_zero()) ok = false;
        for (std::size_t j = 0; j < k && ok; ++j)
            if (extra_form_at(a, j, d.z).is_zero()) ok = false;
        if (!ok) continue;
        d.xi = rng.nonzero_vector(n, height);
        return d;
    }
}

BignessResult is_big(const Arrangement& a, Rng& rng, long long height) {
    const std::size_t n = a.dim();
    const std::size_t c = a.count();
    if (c < n + 2) throw DegenerateInput("is_big: needs at least n+2 hyperplanes");
    if (!is_general_position(a)) throw DegenerateInput("is_big: arrangement not in general position");
    const Arrangement nrm = a.normalized() ? a : normalize(a).first;

    BignessResult res;
    res.big = c >= 2 * n + 1;
    // A nonzero minor at one sample certifies the generic rank from below;
    // a handful of samples guards against an unlucky special direction.
    std::size_t best = 0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        const LogDirection d = random_log_direction(nrm, rng, static_cast<std::size_t>(-1), height);
        const std::vector<Int> v = phi_eval(nrm, d);
        best = std::max(best, rank(fiber_matrix(nrm, to_rat(v))));
        if (best == std::min(nrm.extra(), n)) break;
    }
    res.generic_rank = best;
    res.generic_fiber_dim = n - best;
    if (res.big != (res.generic_fiber_dim == 0))
        throw DegenerateInput(
            "is_big: threshold and computed generic fiber dimension disagree; "
            "arrangement appears degenerate");
    return res;
}

}  // namespace logtangent
