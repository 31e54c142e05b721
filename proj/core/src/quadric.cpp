#include "logtangent/quadric.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "logtangent/errors.hpp"

namespace logtangent {

Quadric::Quadric(const RatMatrix& gram) : gram_(gram) {
    if (gram.rows() != gram.cols() || gram.rows() < 1)
        throw std::invalid_argument("Quadric: gram matrix must be square and nonempty");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != gram(j, i)) throw std::invalid_argument("Quadric: gram matrix not symmetric");
    // Canonical primitive-integer scaling.
    std::vector<Rat> entries;
    entries.reserve(gram.rows() * gram.cols());
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j) entries.push_back(gram(i, j));
    std::vector<Int> prim = primitive(entries);
    bool nonzero = false;
    std::size_t k = 0;
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j, ++k) {
            gram_(i, j) = Rat(prim[k]);
            nonzero = nonzero || prim[k] != 0;
        }
    if (!nonzero) throw std::invalid_argument("Quadric: zero gram matrix");
}

std::size_t Quadric::rank() const { return logtangent::rank(gram_); }

Rat Quadric::eval(const std::vector<Rat>& p) const { return dot(p, mat_vec(gram_, p)); }

Rat Quadric::bilinear(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    return dot(u, mat_vec(gram_, v));
}

std::size_t quadric_monomial_count(std::size_t n) { return (n + 1) * (n + 2) / 2; }

std::vector<std::array<std::size_t, 2>> quadric_monomials(std::size_t n) {
    std::vector<std::array<std::size_t, 2>> mons;
    mons.reserve(quadric_monomial_count(n));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) mons.push_back({i, j});
    return mons;
}

std::vector<Rat> veronese_row(const ProjPoint& p, std::size_t n) {
    if (p.coords.size() != n + 1) throw std::invalid_argument("veronese_row: point dimension mismatch");
    std::vector<Rat> row;
    row.reserve(quadric_monomial_count(n));
    for (const auto& [i, j] : quadric_monomials(n)) row.emplace_back(p.coords[i] * p.coords[j]);
    return row;
}

namespace {

// Rows forcing a quadric (in monomial coordinates) to vanish identically on
// the subspace spanned by the rows of `span`: b(w_a, w_b) = 0 for all pairs.
void append_span_conditions(std::vector<std::vector<Rat>>& rows, const RatMatrix& span,
                            std::size_t n) {
    const auto mons = quadric_monomials(n);
    const std::size_t m = mons.size();
    for (std::size_t a = 0; a < span.rows(); ++a) {
        for (std::size_t b = a; b < span.rows(); ++b) {
            std::vector<Rat> row(m);
            for (std::size_t k = 0; k < m; ++k) {
                const auto [i, j] = mons[k];
                // 2 b(w_a, w_b) in monomial coordinates.
                row[k] = i == j ? Rat(2) * span(a, i) * span(b, i)
                                : span(a, i) * span(b, j) + span(a, j) * span(b, i);
            }
            rows.push_back(std::move(row));
        }
    }
}

RatMatrix stacked_conditions(const std::vector<ProjPoint>& points, std::size_t n,
                             const std::vector<RatMatrix>& spans) {
    const std::size_t m = quadric_monomial_count(n);
    std::vector<std::vector<Rat>> rows;
    for (const ProjPoint& p : points) rows.push_back(veronese_row(p, n));
    for (const RatMatrix& span : spans) append_span_conditions(rows, span, n);
    RatMatrix cond(rows.size(), m);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) cond(i, j) = rows[i][j];
    return cond;
}

Quadric quadric_from_monomial_coeffs(const std::vector<Int>& c, std::size_t n) {
    // q = sum c_ij Z_i Z_j (i <= j); gram doubled to stay integral.
    RatMatrix g(n + 1, n + 1);
    const auto mons = quadric_monomials(n);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        const auto [i, j] = mons[k];
        if (i == j) {
            g(i, i) = Rat(2 * c[k]);
        } else {
            g(i, j) = Rat(c[k]);
            g(j, i) = Rat(c[k]);
        }
    }
    return Quadric(g);
}

}  // namespace

std::size_t conditions_rank(const std::vector<ProjPoint>& points, std::size_t n) {
    if (points.empty()) return 0;
    return rank(stacked_conditions(points, n, {}));
}

QuadricSpace quadrics_vanishing_on(const std::vector<ProjPoint>& points, std::size_t n,
                                   const std::vector<RatMatrix>& span_matrices) {
    QuadricSpace space;
    space.n = n;
    const std::size_t m = quadric_monomial_count(n);
    if (points.empty() && span_matrices.empty()) {
        space.conditions_rank = 0;
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Int> v(m, Int(0));
            v[k] = 1;
            space.basis.push_back(quadric_from_monomial_coeffs(v, n));
        }
        return space;
    }
    RatMatrix cond = stacked_conditions(points, n, span_matrices);
    space.conditions_rank = rank(cond);
    for (const auto& v : kernel_basis(cond)) space.basis.push_back(quadric_from_monomial_coeffs(v, n));
    return space;
}

QuadricSpace quadrics_through(const std::vector<ProjPoint>& points, std::size_t n,
                              const std::optional<RatMatrix>& plane) {
    std::vector<RatMatrix> spans;
    if (plane) {
        if (plane->rows() != 2 || plane->cols() != n + 1)
            throw std::invalid_argument("quadrics_through: plane must be a 2 x (n+1) covector matrix");
        if (rank(*plane) != 2)
            throw std::invalid_argument("quadrics_through: plane covectors not independent");
        const auto w = kernel_basis(*plane);  // basis of the (n-2)-plane, n-1 vectors
        RatMatrix span(w.size(), n + 1);
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t j = 0; j <= n; ++j) span(a, j) = Rat(w[a][j]);
        spans.push_back(std::move(span));
    }
    return quadrics_vanishing_on(points, n, spans);
}

bool ample_mod_boundary_criterion(const Arrangement& a) {
    if (!is_general_position(a))
        throw DegenerateInput("ample_mod_boundary_criterion: arrangement not in general position");
    const std::size_t n = a.dim();
    return conditions_rank(dual_points(a), n) >= 4 * n - 2;
}

std::optional<Quadric> low_rank_witness(const QuadricSpace& space, Rng& rng,
                                        const WitnessSearchConfig& cfg) {
    if (space.basis.empty()) return std::nullopt;
    for (const Quadric& q : space.basis)
        if (q.rank() <= cfg.max_rank) return q;
    if (space.basis.size() == 1) return std::nullopt;  // the span is decided exactly

    const std::size_t n = space.n;
    for (std::size_t trial = 0; trial < cfg.budget; ++trial) {
        RatMatrix g(n + 1, n + 1);
        bool nonzero = false;
        for (const Quadric& q : space.basis) {
            const Rat c = rng.rational(cfg.height);
            if (c.is_zero()) continue;
            nonzero = true;
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j) g(i, j) += c * q.gram()(i, j);
        }
        if (!nonzero) continue;
        Quadric candidate(g);
        if (candidate.rank() <= cfg.max_rank) return candidate;
    }
    return std::nullopt;
}

DualSurfaceWitness dual_quadric(const Quadric& q) {
    const std::size_t r = q.rank();
    if (r != 3 && r != 4) throw DegenerateInput("dual_quadric: rank must be 3 or 4");
    const RatMatrix& g = q.gram();
    const std::size_t n = q.ambient_dim();

    std::vector<std::vector<Int>> carrier_eqs = kernel_basis(g);

    // Columns of G at its pivot positions span the column space.
    Rref red = rref(g);
    RatMatrix basis(n + 1, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t i = 0; i <= n; ++i) basis(i, a) = g(i, red.pivot_cols[a]);

    // Solve G w_a = b_a; the dual form on the carrier is S_ab = w_a . b_b.
    RatMatrix w(n + 1, r);
    for (std::size_t a = 0; a < r; ++a) {
        auto sol = solve_particular(g, basis.col(a));
        if (!sol) throw DegenerateInput("dual_quadric: inconsistent restriction solve");
        for (std::size_t i = 0; i <= n; ++i) w(i, a) = (*sol)[i];
        // Restriction composed with its computed inverse must be the identity
        // on the basis: G w_a = b_a exactly.
        std::vector<Rat> check = mat_vec(g, w.col(a));
        for (std::size_t i = 0; i <= n; ++i)
            if (check[i] != basis(i, a)) throw OracleDisagreement("dual_quadric: G w != b");
    }
    RatMatrix s(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) s(a, b) = dot(w.col(a), basis.col(b));

    return DualSurfaceWitness{q, std::move(carrier_eqs), std::move(basis), Quadric(s)};
}

std::size_t rank_locus_tangent_dim(const Quadric& q) {
    const RatMatrix& g = q.gram();
    const std::size_t d = g.rows();
    const auto mons = quadric_monomials(d - 1);
    RatMatrix span(mons.size(), d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            // X = E_rc: (X^T G + G X)_{ij} = delta_{ic} G_{rj} + G_{ir} delta_{jc}.
            const std::size_t colidx = r * d + c;
            for (std::size_t k = 0; k < mons.size(); ++k) {
                const auto [i, j] = mons[k];
                Rat v;
                if (i == c) v += g(r, j);
                if (j == c) v += g(i, r);
                span(k, colidx) = v;
            }
        }
    const std::size_t affine = rank(span);
    if (affine == 0) throw DegenerateInput("rank_locus_tangent_dim: zero tangent span");
    return affine - 1;
}

bool is_perfect_square(const Int& x, Int* root) {
    if (x < 0) return false;
    Int r = boost::multiprecision::sqrt(x);
    if (r * r != x) return false;
    if (root) *root = r;
    return true;
}

namespace {

// Rational square root of a nonnegative rational, if it exists.
std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(x.num(), &rn) || !is_perfect_square(x.den(), &rd)) return std::nullopt;
    return Rat(rn, rd);
}

}  // namespace

std::optional<ProjPoint> rational_point_on(const Quadric& q, Rng& rng, std::size_t budget,
                                           long long height) {
    const std::size_t n = q.ambient_dim();
    auto smooth_point = [&](const std::vector<Rat>& p) -> std::optional<ProjPoint> {
        if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x.is_zero(); }))
            return std::nullopt;
        std::vector<Rat> grad = mat_vec(q.gram(), p);
        if (std::all_of(grad.begin(), grad.end(), [](const Rat& x) { return x.is_zero(); }))
            return std::nullopt;  // vertex of the cone, useless for rulings
        ProjPoint pt = ProjPoint::from_rats(p);
        if (!q.eval(to_rat(pt.coords)).is_zero())
            throw OracleDisagreement("rational_point_on: point off quadric");
        return pt;
    };
    for (std::size_t i = 0; i <= n; ++i) {
        if (q.gram()(i, i).is_zero()) {
            std::vector<Rat> e(n + 1);
            e[i] = Rat(1);
            if (auto pt = smooth_point(e)) return pt;
        }
    }
    for (std::size_t trial = 0; trial < budget; ++trial) {
        std::vector<Rat> r = rng.nonzero_vector(n + 1, height);
        std::vector<Rat> s = rng.nonzero_vector(n + 1, height);
        const Rat qr = q.eval(r), qs = q.eval(s), b = q.bilinear(r, s);
        if (qr.is_zero()) {
            if (auto pt = smooth_point(r)) return pt;
            continue;
        }
        if (qs.is_zero()) {
            if (auto pt = smooth_point(s)) return pt;
            continue;
        }
        // q(r + t s) = qr + 2 t b + t^2 qs
        auto disc = rat_sqrt(b * b - qr * qs);
        if (!disc) continue;
        const Rat t = (-b + *disc) / qs;
        std::vector<Rat> p(n + 1);
        for (std::size_t i = 0; i <= n; ++i) p[i] = r[i] + t * s[i];
        if (auto pt = smooth_point(p)) return pt;
    }
    return std::nullopt;
}

std::optional<std::array<RatMatrix, 2>> rulings_through(const Quadric& q, const ProjPoint& p) {
    const std::size_t n = q.ambient_dim();
    if (p.coords.size() != n + 1) throw std::invalid_argument("rulings_through: dimension mismatch");
    const std::vector<Rat> pr = to_rat(p.coords);
    if (!q.eval(pr).is_zero()) throw std::invalid_argument("rulings_through: point not on the quadric");

    // Tangent covector at p; zero means p is a vertex of the cone.
    std::vector<Rat> grad = mat_vec(q.gram(), pr);
    if (std::all_of(grad.begin(), grad.end(), [](const Rat& x) { return x.is_zero(); }))
        return std::nullopt;

    RatMatrix gradrow(1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) gradrow(0, j) = grad[j];
    const auto tangent = kernel_basis(gradrow);  // n vectors spanning T_p

    // Restrict the form to the tangent hyperplane.
    RatMatrix s(tangent.size(), tangent.size());
    for (std::size_t a = 0; a < tangent.size(); ++a)
        for (std::size_t b = 0; b < tangent.size(); ++b)
            s(a, b) = q.bilinear(to_rat(tangent[a]), to_rat(tangent[b]));
    if (rank(s) != 2) return std::nullopt;  // slice did not split into two hyperplanes

    // The isotropic locus of a rank-2 form is a pair of hyperplanes through
    // its radical; they are rational iff the discriminant is a square.
    const auto radical = kernel_basis(s);  // tangent.size() - 2 vectors
    Rref red = rref(s);
    const std::size_t c0 = red.pivot_cols[0], c1 = red.pivot_cols[1];
    const Rat a2 = s(c0, c0), b2 = s(c0, c1), c2 = s(c1, c1);
    // Null directions x e_{c0} + y e_{c1} of a2 x^2 + 2 b2 x y + c2 y^2 (mod radical).
    std::vector<std::array<Rat, 2>> dirs;
    if (a2.is_zero()) {
        dirs.push_back({Rat(1), Rat(0)});
        dirs.push_back({c2, Rat(-2) * b2});
    } else {
        auto disc = rat_sqrt(b2 * b2 - a2 * c2);
        if (!disc) return std::nullopt;
        dirs.push_back({-b2 + *disc, a2});
        dirs.push_back({-b2 - *disc, a2});
    }

    std::array<RatMatrix, 2> planes = {RatMatrix(tangent.size() - 1, n + 1),
                                       RatMatrix(tangent.size() - 1, n + 1)};
    for (std::size_t d = 0; d < 2; ++d) {
        // Rows: radical basis lifted to ambient, plus the null direction.
        std::size_t row = 0;
        for (const auto& rad : radical) {
            for (std::size_t j = 0; j <= n; ++j) {
                Rat v;
                for (std::size_t a = 0; a < tangent.size(); ++a) v += Rat(rad[a]) * Rat(tangent[a][j]);
                planes[d](row, j) = v;
            }
            ++row;
        }
        for (std::size_t j = 0; j <= n; ++j) {
            Rat v = dirs[d][0] * Rat(tangent[c0][j]) + dirs[d][1] * Rat(tangent[c1][j]);
            planes[d](row, j) = v;
        }
        if (rank(planes[d]) != tangent.size() - 1)
            throw OracleDisagreement("rulings_through: degenerate ruling span");
        // Every point of the plane must lie on the quadric.
        for (std::size_t i = 0; i + 1 < tangent.size(); ++i)
            for (std::size_t j = i; j + 1 < tangent.size(); ++j)
                if (!dot(planes[d].row(i), mat_vec(q.gram(), planes[d].row(j))).is_zero())
                    throw OracleDisagreement("rulings_through: ruling not inside the quadric");
    }
    return planes;
}

}  // namespace logtangent
