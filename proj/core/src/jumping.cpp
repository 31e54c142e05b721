#include "logtangent/jumping.hpp"

#include <algorithm>
#include <stdexcept>

#include "logtangent/errors.hpp"

namespace logtangent {

namespace {

Int dot_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool line_in_hyperplane(const ProjLine& l, const Hyperplane& h) {
    return dot_int(h.covector, l.p.coords) == 0 && dot_int(h.covector, l.q.coords) == 0;
}

std::optional<std::size_t> boundary_index(const Arrangement& a, const ProjLine& l) {
    for (std::size_t i = 0; i < a.count(); ++i)
        if (line_in_hyperplane(l, a.hyperplane(i))) return i;
    return std::nullopt;
}

// v reduced modulo the Euler vector against its first nonzero pivot;
// zero result means v is proportional to Euler.
std::vector<Int> reduce_mod_euler(const std::vector<Int>& v, const std::vector<Int>& euler) {
    std::size_t pivot = 0;
    while (pivot < euler.size() && euler[pivot] == 0) ++pivot;
    std::vector<Int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = euler[pivot] * v[i] - v[pivot] * euler[i];
    return primitive_int(r);
}

}  // namespace

ProjLine ProjLine::through(const ProjPoint& p, const ProjPoint& q) {
    if (p.coords.size() != q.coords.size())
        throw std::invalid_argument("ProjLine: points of different dimension");
    if (p.coords.size() < 3) throw std::invalid_argument("ProjLine: ambient dimension must be >= 2");
    if (p == q) throw std::invalid_argument("ProjLine: points coincide");
    return ProjLine{p, q};
}

RatMatrix ProjLine::dual_plane() const {
    RatMatrix m(2, p.coords.size());
    for (std::size_t j = 0; j < p.coords.size(); ++j) {
        m(0, j) = Rat(p.coords[j]);
        m(1, j) = Rat(q.coords[j]);
    }
    return m;
}

std::vector<Rat> ProjLine::at(const Rat& s, const Rat& t) const {
    std::vector<Rat> x(p.coords.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = s * Rat(p.coords[j]) + t * Rat(q.coords[j]);
    return x;
}

TangencySystem tangency_system(const Arrangement& a, const ProjLine& l) {
    const std::size_t n = a.dim();
    if (l.ambient_dim() != n) throw std::invalid_argument("tangency_system: dimension mismatch");
    if (boundary_index(a, l))
        throw DegenerateInput("tangency_system: line lies inside an arrangement hyperplane");

    TangencySystem sys;
    const std::size_t c = a.count();
    sys.matrix = RatMatrix(c, 2 * (n + 1));
    sys.meeting_params.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
        const auto& cov = a.hyperplane(i).covector;
        // l_i(phi(s,t)) = (l_i . p) s + (l_i . q) t vanishes at (s_i : t_i).
        const Int lp = dot_int(cov, l.p.coords);
        const Int lq = dot_int(cov, l.q.coords);
        std::vector<Int> param = primitive_int({lq, -lp});
        for (std::size_t m = 0; m <= n; ++m) {
            sys.matrix(i, m) = Rat(cov[m] * param[0]);
            sys.matrix(i, n + 1 + m) = Rat(cov[m] * param[1]);
        }
        sys.meeting_params.push_back({param[0], param[1]});
    }
    for (std::size_t i = 0; i < c && !sys.meets_stratum; ++i)
        for (std::size_t j = i + 1; j < c; ++j) {
            const auto& si = sys.meeting_params[i];
            const auto& sj = sys.meeting_params[j];
            if (si[0] * sj[1] - si[1] * sj[0] == 0) {
                sys.meets_stratum = true;
                break;
            }
        }

    sys.euler.resize(2 * (n + 1));
    for (std::size_t m = 0; m <= n; ++m) {
        sys.euler[m] = l.p.coords[m];
        sys.euler[n + 1 + m] = l.q.coords[m];
    }
    // The parametrization solves every tangency condition exactly.
    for (std::size_t i = 0; i < c; ++i) {
        Rat s;
        for (std::size_t k = 0; k < 2 * (n + 1); ++k) s += sys.matrix(i, k) * Rat(sys.euler[k]);
        if (!s.is_zero()) throw OracleDisagreement("tangency_system: Euler vector not in kernel");
    }
    return sys;
}

SuperjumpingResult is_superjumping(const Arrangement& a, const ProjLine& l) {
    SuperjumpingResult res;
    if (boundary_index(a, l)) {
        res.superjumping = true;
        res.boundary = true;
        return res;
    }
    TangencySystem sys = tangency_system(a, l);
    res.meets_stratum = sys.meets_stratum;
    const auto kernel = kernel_basis(sys.matrix);
    res.kernel_dim = kernel.size();
    res.superjumping = kernel.size() >= 2;
    if (res.superjumping) {
        for (const auto& v : kernel) {
            std::vector<Int> reduced = reduce_mod_euler(v, sys.euler);
            if (std::any_of(reduced.begin(), reduced.end(), [](const Int& x) { return x != 0; })) {
                res.witness = std::move(reduced);
                break;
            }
        }
        if (!res.witness) throw OracleDisagreement("is_superjumping: kernel >= 2 but reduces to Euler");
    }
    return res;
}

DualSuperjumpingResult is_superjumping_dual(const Arrangement& a, const ProjLine& l) {
    DualSuperjumpingResult res;
    if (boundary_index(a, l)) {
        res.superjumping = true;
        res.boundary = true;
        return res;
    }
    const QuadricSpace space = quadrics_through(dual_points(a), a.dim(), l.dual_plane());
    res.space_dim = space.basis.size();
    res.superjumping = !space.basis.empty();
    if (res.superjumping) {
        // Any member through the (n-2)-plane l* has rank <= 4; prefer a
        // genuine scroll (rank 3 or 4) over a reducible pair of hyperplanes.
        for (const Quadric& q : space.basis) {
            const std::size_t r = q.rank();
            if (r == 3 || r == 4) {
                res.quadric = q;
                break;
            }
        }
        if (!res.quadric && space.basis.size() > 1) {
            for (std::size_t i = 0; i < space.basis.size() && !res.quadric; ++i) {
                for (std::size_t j = i + 1; j < space.basis.size(); ++j) {
                    RatMatrix g = space.basis[i].gram();
                    for (std::size_t r = 0; r < g.rows(); ++r)
                        for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) += space.basis[j].gram()(r, c);
                    Quadric sum(g);
                    const std::size_t rr = sum.rank();
                    if (rr == 3 || rr == 4) {
                        res.quadric = sum;
                        break;
                    }
                }
            }
        }
        if (!res.quadric) {
            res.reducible_caveat = true;
            res.quadric = space.basis.front();
        }
        if (res.quadric->rank() > 4)
            throw OracleDisagreement("is_superjumping_dual: member of rank > 4 through an (n-2)-plane");
    }
    return res;
}

SuperjumpingCheck superjumping_checked(const Arrangement& a, const ProjLine& l) {
    SuperjumpingCheck check{is_superjumping(a, l), is_superjumping_dual(a, l)};
    if (check.primal.superjumping != check.dual.superjumping)
        throw OracleDisagreement("superjumping tests disagree (tangency kernel vs dual quadric)");
    return check;
}

std::vector<Rat> PsiMap::at(const Rat& s, const Rat& t) const {
    std::vector<Rat> x(forms.size());
    for (std::size_t m = 0; m < forms.size(); ++m) x[m] = forms[m][0] * s + forms[m][1] * t;
    return x;
}

PsiMap build_psi(const Arrangement& a, const ProjLine& l, const std::vector<Int>& witness) {
    const std::size_t n = a.dim();
    if (witness.size() != 2 * (n + 1)) throw std::invalid_argument("build_psi: witness has wrong length");
    TangencySystem sys = tangency_system(a, l);
    for (std::size_t i = 0; i < a.count(); ++i) {
        Rat s;
        for (std::size_t k = 0; k < 2 * (n + 1); ++k) s += sys.matrix(i, k) * Rat(witness[k]);
        if (!s.is_zero())
            throw std::invalid_argument("build_psi: witness does not solve the tangency system");
    }
    std::vector<Int> reduced = reduce_mod_euler(witness, sys.euler);
    if (std::all_of(reduced.begin(), reduced.end(), [](const Int& x) { return x == 0; }))
        throw DegenerateInput("build_psi: witness lies in the Euler family");

    // L_m and phi_m contracted against l_0 both vanish at the H_0 meeting
    // parameter, so both are multiples of the parameter form rho_0; the
    // combination beta L - alpha phi then has identically zero l_0-component
    // and stays of degree one.
    const auto& cov0 = a.hyperplane(0).covector;
    Rat u_alpha, u_beta;  // l_0(L(s,t)) = u_alpha s + u_beta t
    for (std::size_t m = 0; m <= n; ++m) {
        u_alpha += Rat(cov0[m] * witness[m]);
        u_beta += Rat(cov0[m] * witness[n + 1 + m]);
    }
    const Rat v_alpha = Rat(dot_int(cov0, l.p.coords));  // l_0(phi(s,t))
    const Rat v_beta = Rat(dot_int(cov0, l.q.coords));
    const auto& rho = sys.meeting_params[0];  // rho_0(s,t) = t_0 s - s_0 t
    const Rat rho_s = Rat(rho[1]), rho_t = Rat(-rho[0]);
    auto along_rho = [&](const Rat& fs, const Rat& ft) -> Rat {
        // factor c with (fs, ft) = c (rho_s, rho_t)
        if (!rho_s.is_zero()) return fs / rho_s;
        return ft / rho_t;
    };
    // Tangency at the H_0 meeting point makes both contractions proportional
    // to rho_0; verify exactly rather than assume.
    const Rat alpha = along_rho(u_alpha, u_beta);
    const Rat beta = along_rho(v_alpha, v_beta);
    if (u_alpha != alpha * rho_s || u_beta != alpha * rho_t)
        throw OracleDisagreement("build_psi: witness contraction not proportional to rho_0");
    if (v_alpha != beta * rho_s || v_beta != beta * rho_t || beta.is_zero())
        throw OracleDisagreement("build_psi: line contraction degenerate along H_0");

    PsiMap psi;
    psi.forms.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        psi.forms[m][0] = beta * Rat(witness[m]) - alpha * Rat(l.p.coords[m]);
        psi.forms[m][1] = beta * Rat(witness[n + 1 + m]) - alpha * Rat(l.q.coords[m]);
    }

    // l_0(psi) must vanish identically.
    Rat c0s, c0t;
    for (std::size_t m = 0; m <= n; ++m) {
        c0s += Rat(cov0[m]) * psi.forms[m][0];
        c0t += Rat(cov0[m]) * psi.forms[m][1];
    }
    if (!c0s.is_zero() || !c0t.is_zero())
        throw OracleDisagreement("build_psi: image not contained in H_0");

    // Degree exactly one: the coefficient matrix has rank 2, equivalently the
    // induced map is non-constant and everywhere defined.
    RatMatrix coeffs(2, n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        coeffs(0, m) = psi.forms[m][0];
        coeffs(1, m) = psi.forms[m][1];
    }
    if (rank(coeffs) != 2)
        throw DegenerateInput("build_psi: witness induces a constant map (degenerate section)");

    // psi(l ∩ H_i) ∈ H_0 ∩ H_i, exactly, for every i >= 1.
    for (std::size_t i = 1; i < a.count(); ++i) {
        const auto& par = sys.meeting_params[i];
        const std::vector<Rat> img = psi.at(Rat(par[0]), Rat(par[1]));
        Rat v;
        for (std::size_t m = 0; m <= n; ++m) v += Rat(a.hyperplane(i).covector[m]) * img[m];
        if (!v.is_zero()) throw OracleDisagreement("build_psi: incidence psi(l ∩ H_i) ⊂ H_i fails");
    }
    return psi;
}

Quadric scroll_from_psi(const ProjLine& l, const PsiMap& psi, const Arrangement& a) {
    const std::size_t n = a.dim();
    const std::vector<ProjPoint> duals = dual_points(a);
    std::vector<RatMatrix> spans;
    {
        // W = l* itself.
        const auto w = kernel_basis(l.dual_plane());
        RatMatrix span(w.size(), n + 1);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j <= n; ++j) span(i, j) = Rat(w[i][j]);
        spans.push_back(std::move(span));
    }
    QuadricSpace space = quadrics_vanishing_on(duals, n, spans);
    if (space.basis.empty())
        throw DegenerateInput("scroll_from_psi: no quadric through the dual points and l*");

    // Cut the system down with incidence conditions from the family
    // {phi(s,t), psi(s,t)}^perp until a single quadric remains.
    long long t = 0;
    std::size_t added = 0;
    while (space.basis.size() > 1 && added < 4 * n + 8) {
        const Rat s(1), tt(t);
        std::vector<Rat> x = l.at(s, tt);
        std::vector<Rat> y = psi.at(s, tt);
        ++t;
        RatMatrix pair(2, n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            pair(0, j) = x[j];
            pair(1, j) = y[j];
        }
        if (rank(pair) != 2) continue;  // psi fixes this point; no condition
        const auto w = kernel_basis(pair);
        RatMatrix span(w.size(), n + 1);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j <= n; ++j) span(i, j) = Rat(w[i][j]);
        spans.push_back(std::move(span));
        ++added;
        space = quadrics_vanishing_on(duals, n, spans);
        if (space.basis.empty())
            throw DegenerateInput("scroll_from_psi: incidence family inconsistent with the witness");
    }
    const Quadric& found = space.basis.front();
    if (found.rank() > 4)
        throw OracleDisagreement("scroll_from_psi: scroll of rank > 4");
    return found;
}

ProjLine random_line(const Arrangement& a, Rng& rng, long long height) {
    const std::size_t n = a.dim();
    for (;;) {
        const std::vector<Rat> pv = rng.nonzero_vector(n + 1, height);
        const std::vector<Rat> qv = rng.nonzero_vector(n + 1, height);
        ProjPoint p = ProjPoint::from_rats(pv);
        ProjPoint q = ProjPoint::from_rats(qv);
        if (p == q) continue;
        ProjLine l = ProjLine::through(p, q);
        if (!boundary_index(a, l)) return l;
    }
}

LocusSample sample_superjumping_locus(const Arrangement& a, std::size_t trials, Rng& rng,
                                      long long height) {
    LocusSample out;
    out.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        const ProjLine l = random_line(a, rng, height);
        const SuperjumpingCheck check = superjumping_checked(a, l);
        if (check.primal.meets_stratum) ++out.stratum_flagged;
        if (check.primal.superjumping) {
            ++out.hits;
            if (check.primal.witness) out.witnesses.emplace_back(l, *check.primal.witness);
        }
    }
    return out;
}

namespace {

// Ruling (n-2)-planes of the quadric through a smooth rational point on it:
// for rank 3, the single plane spanned by the vertex and the point; for
// rank 4, the two tangent-slice components when they split over Q.
std::vector<RatMatrix> ruling_planes_at(const Quadric& x, const ProjPoint& pt) {
    std::vector<RatMatrix> planes;
    const std::size_t n = x.ambient_dim();
    const std::size_t r = x.rank();
    if (r == 3) {
        const auto vertex = kernel_basis(x.gram());
        RatMatrix span(vertex.size() + 1, n + 1);
        for (std::size_t i = 0; i < vertex.size(); ++i)
            for (std::size_t j = 0; j <= n; ++j) span(i, j) = Rat(vertex[i][j]);
        for (std::size_t j = 0; j <= n; ++j) span(vertex.size(), j) = Rat(pt.coords[j]);
        if (rank(span) == n - 1) planes.push_back(std::move(span));
    } else if (r == 4) {
        if (auto two = rulings_through(x, pt)) {
            planes.push_back((*two)[0]);
            planes.push_back((*two)[1]);
        }
    }
    return planes;
}

}  // namespace

std::vector<ProjLine> witness_lines_from_quadric(const Arrangement& a, const Quadric& x, Rng& rng,
                                                 std::size_t want, std::size_t budget) {
    std::vector<ProjLine> lines;
    const std::size_t n = a.dim();
    if (x.ambient_dim() != n || want == 0) return lines;
    if (x.rank() < 3) return lines;  // reducible: no scroll structure to harvest

    const auto base = rational_point_on(x, rng, budget);
    if (!base) return lines;

    auto try_point = [&](const ProjPoint& pt) {
        for (const RatMatrix& span : ruling_planes_at(x, pt)) {
            if (lines.size() >= want) return;
            const auto kern = kernel_basis(span);
            if (kern.size() != 2) continue;
            ProjLine l = ProjLine::through(ProjPoint::from_ints(kern[0]), ProjPoint::from_ints(kern[1]));
            bool boundary = false;
            for (std::size_t i = 0; i < a.count() && !boundary; ++i) {
                const auto& cov = a.hyperplane(i).covector;
                boundary = dot_int(cov, l.p.coords) == 0 && dot_int(cov, l.q.coords) == 0;
            }
            if (boundary) continue;
            if (std::find(lines.begin(), lines.end(), l) != lines.end()) continue;
            // A ruling dual must be superjumping; disagreement is a bug.
            const SuperjumpingCheck check = superjumping_checked(a, l);
            if (!check.primal.superjumping)
                throw OracleDisagreement("witness_lines_from_quadric: ruling dual not superjumping");
            lines.push_back(std::move(l));
        }
    };

    try_point(*base);
    const std::vector<Rat> basev = to_rat(base->coords);
    for (std::size_t trial = 0; trial < budget && lines.size() < want; ++trial) {
        // Chord trick: the residual intersection of a random line through the
        // base point is again rational.
        const std::vector<Rat> v = rng.nonzero_vector(n + 1, kWitnessHeight);
        const Rat qv = x.eval(v);
        if (qv.is_zero()) continue;
        const Rat b = x.bilinear(basev, v);
        std::vector<Rat> u(n + 1);
        for (std::size_t j = 0; j <= n; ++j) u[j] = qv * basev[j] - Rat(2) * b * v[j];
        if (std::all_of(u.begin(), u.end(), [](const Rat& z) { return z.is_zero(); })) continue;
        ProjPoint pt = ProjPoint::from_rats(u);
        if (!x.eval(to_rat(pt.coords)).is_zero())
            throw OracleDisagreement("witness_lines_from_quadric: chord point off the quadric");
        const std::vector<Rat> grad = mat_vec(x.gram(), to_rat(pt.coords));
        if (std::all_of(grad.begin(), grad.end(), [](const Rat& z) { return z.is_zero(); })) continue;
        try_point(pt);
    }
    return lines;
}

}  // namespace logtangent
