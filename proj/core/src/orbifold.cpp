#include "logtangent/orbifold.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "logtangent/errors.hpp"
#include "logtangent/series.hpp"
#include "logtangent/tautological.hpp"

namespace logtangent {

OrbifoldDivisor OrbifoldDivisor::with_constant(const Arrangement& a, long long m) {
    if (m < 1) throw std::invalid_argument("OrbifoldDivisor: multiplicity must be >= 1");
    return OrbifoldDivisor{a, std::vector<std::optional<long long>>(a.count(), m)};
}

std::vector<std::size_t> default_form_tuple(std::size_t n) {
    std::vector<std::size_t> t(2 * n + 1);
    std::iota(t.begin(), t.end(), 0);
    return t;
}

namespace {

Rat dot_cov(const std::vector<Int>& cov, const std::vector<Rat>& x) {
    Rat s;
    for (std::size_t i = 0; i < cov.size(); ++i) s += Rat(cov[i]) * x[i];
    return s;
}

int permutation_parity(const std::vector<std::size_t>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SymmetricFormWitness build_form(const Arrangement& a, const std::vector<std::size_t>& tuple,
                                Rng& rng, std::size_t identity_samples) {
    const std::size_t n = a.dim();
    const std::size_t c = a.count();
    if (c < n + 2) throw DegenerateInput("build_form: needs at least n+2 hyperplanes");
    if (c < 2 * n + 1)
        throw DegenerateInput("build_form: fiber matrix has no n x n minors (k < n)");
    if (tuple.size() != 2 * n + 1)
        throw std::invalid_argument("build_form: tuple must list 2n+1 hyperplane indices");
    if (std::set<std::size_t>(tuple.begin(), tuple.end()).size() != tuple.size())
        throw std::invalid_argument("build_form: tuple indices must be distinct");
    for (std::size_t i : tuple)
        if (i >= c) throw std::out_of_range("build_form: tuple index out of range");

    // Reorder so the first n+1 tuple entries become the coordinate
    // hyperplanes and the next n supply the minor rows, then normalize.
    std::vector<std::size_t> order = tuple;
    for (std::size_t i = 0; i < c; ++i)
        if (std::find(tuple.begin(), tuple.end(), i) == tuple.end()) order.push_back(i);
    std::vector<std::vector<Rat>> covs;
    covs.reserve(c);
    for (std::size_t i : order) covs.push_back(to_rat(a.hyperplane(i).covector));
    Arrangement permuted(n, std::move(covs));
    auto [working, g] = normalize(permuted);

    SymmetricFormWitness w(working);
    w.index_map = order;
    w.distinguished = 1;
    for (std::size_t i = 0; i <= n; ++i)
        if (i != 1) w.kept_columns.push_back(i);
    for (std::size_t j = 1; j <= n; ++j) w.row_hyperplanes.push_back(n + j);
    w.power = 2 * n;
    w.pole_support = w.kept_columns;
    w.pole_support.insert(w.pole_support.end(), w.row_hyperplanes.begin(), w.row_hyperplanes.end());

    // Minor of the fiber matrix with the distinguished column dropped, rows
    // j = 1..n, as a polynomial in V_1..V_{n+k}.
    const std::size_t k = working.extra();
    const std::size_t nvars = n + k;
    std::vector<std::vector<Poly>> sub(n, std::vector<Poly>(n, Poly(nvars)));
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t ci = 0; ci < w.kept_columns.size(); ++ci) {
            const std::size_t i = w.kept_columns[ci];
            Poly e = Poly::var(nvars, n + j - 1);  // V_{n+j}
            if (i >= 1) e = e - Poly::var(nvars, i - 1);
            sub[j - 1][ci] = e.scaled(working.coeff(i, j - 1));
        }
    }
    w.minor_poly = poly_det(sub);
    if (w.minor_poly.is_zero()) throw DegenerateInput("build_form: minor vanishes identically");

    // The minor composed with the evaluation morphism must vanish exactly on
    // the bundle over the distinguished hyperplane.
    for (std::size_t s = 0; s < identity_samples; ++s) {
        const LogDirection d = random_log_direction(working, rng, /*on_hyperplane=*/1);
        const std::vector<Int> v = phi_eval_extended(working, d);
        if (!w.minor_poly.eval(to_rat(v)).is_zero())
            throw DegenerateInput("build_form: boundary-image identity failed (degenerate arrangement)");
    }
    w.identity_samples = identity_samples;

    w.pole_profile = audit_poles(w, rng);
    for (const auto& [h, audit] : w.pole_profile) {
        if (audit.per_monomial_max > 1)
            throw DegenerateInput("build_form: monomial with pole order > 1");
        if (h == w.distinguished && audit.total > 0)
            throw DegenerateInput("build_form: residual pole along the distinguished hyperplane");
    }
    return w;
}

std::map<std::size_t, PoleAudit> audit_poles(const SymmetricFormWitness& w, Rng& rng,
                                             std::size_t trunc_order) {
    const Arrangement& a = w.working;
    const std::size_t n = a.dim();
    const std::size_t c = a.count();
    const std::size_t T = trunc_order == 0 ? 4 * n + 2 : trunc_order;

    std::map<std::size_t, PoleAudit> profile;
    for (std::size_t h = 0; h < c; ++h) {
        const auto& covh = a.hyperplane(h).covector;
        bool done = false;
        for (int attempt = 0; attempt < 32 && !done; ++attempt) {
            // Transverse line Z(t) = P + tQ with Z(0) on H_h and off every
            // other hyperplane, plus a generic constant direction R.
            RatMatrix hrow(1, n + 1);
            for (std::size_t j = 0; j <= n; ++j) hrow(0, j) = Rat(covh[j]);
            const auto kern = kernel_basis(hrow);
            std::vector<Rat> P(n + 1);
            for (const auto& b : kern) {
                const Rat cchoice = rng.rational(kDefaultHeight);
                for (std::size_t j = 0; j <= n; ++j) P[j] += cchoice * Rat(b[j]);
            }
            const std::vector<Rat> Q = rng.nonzero_vector(n + 1, kDefaultHeight);
            const std::vector<Rat> R = rng.nonzero_vector(n + 1, kDefaultHeight);

            bool ok = !dot_cov(covh, Q).is_zero();
            for (std::size_t o = 0; o < c && ok; ++o) {
                if (o == h) continue;
                if (dot_cov(a.hyperplane(o).covector, P).is_zero()) ok = false;
            }
            if (!ok) continue;

            auto line_form = [&](const std::vector<Int>& cov) {
                return TruncSeries({dot_cov(cov, P), dot_cov(cov, Q)}, T);
            };
            auto coord_form = [&](std::size_t i) {
                return TruncSeries({P[i], Q[i]}, T);
            };

            // Denominator valuation, common to every monomial: one factor per
            // minor row, one per kept column, one for the twist.
            long long v_den = 0;
            bool degenerate = false;
            auto add_val = [&](const TruncSeries& s) {
                const auto val = s.valuation();
                if (!val || *val > 1) {
                    degenerate = true;
                    return;
                }
                v_den += static_cast<long long>(*val);
            };
            std::vector<TruncSeries> row_den;
            for (std::size_t rh : w.row_hyperplanes) {
                row_den.push_back(line_form(a.hyperplane(rh).covector));
                add_val(row_den.back());
            }
            std::vector<TruncSeries> col_den;
            for (std::size_t i : w.kept_columns) {
                col_den.push_back(coord_form(i));
                add_val(col_den.back());
            }
            add_val(line_form(a.hyperplane(w.distinguished).covector));
            if (degenerate) continue;

            // Numerator factors a_i^j (l_row(R) Z_i(t) - R_i l_row(Z(t))).
            std::vector<std::vector<TruncSeries>> num(n, std::vector<TruncSeries>(n, TruncSeries::zero(T)));
            bool zero_factor = false;
            for (std::size_t j = 0; j < n; ++j) {
                const auto& rowcov = a.hyperplane(w.row_hyperplanes[j]).covector;
                const Rat lR = dot_cov(rowcov, R);
                for (std::size_t ci = 0; ci < n; ++ci) {
                    const std::size_t i = w.kept_columns[ci];
                    const Rat acoef = a.coeff(i, j);
                    TruncSeries f = coord_form(i).scaled(lR) - line_form(rowcov).scaled(R[i]);
                    num[j][ci] = f.scaled(acoef);
                    if (!acoef.is_zero() && num[j][ci].is_zero()) zero_factor = true;
                }
            }
            if (zero_factor) continue;

            // Permutation expansion: track the worst single monomial and the
            // exact sum.
            long long per_mono = std::numeric_limits<long long>::min();
            TruncSeries total = TruncSeries::zero(T);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            bool truncated = false;
            do {
                TruncSeries prod = TruncSeries::constant(Rat(1), T);
                bool zero = false;
                for (std::size_t j = 0; j < n && !zero; ++j) {
                    if (num[j][perm[j]].is_zero()) zero = true;
                    else prod = prod * num[j][perm[j]];
                }
                if (zero) continue;
                const auto val = prod.valuation();
                if (!val) {
                    truncated = true;
                    break;
                }
                per_mono = std::max(per_mono, v_den - static_cast<long long>(*val));
                total = permutation_parity(perm) > 0 ? total + prod : total - prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (truncated) continue;

            const auto tval = total.valuation();
            if (!tval) continue;  // degenerate sample; the sum must be generically nonzero
            if (per_mono == std::numeric_limits<long long>::min()) continue;
            profile[h] = PoleAudit{per_mono, v_den - static_cast<long long>(*tval)};
            done = true;
        }
        if (!done)
            throw DegenerateInput("audit_poles: persistent degenerate samples; increase truncation order");
    }
    return profile;
}

OrbifoldCertificate orbifold_certificate(const OrbifoldDivisor& d, Rng& rng) {
    const Arrangement& a = d.arrangement;
    if (d.multiplicities.size() != a.count())
        throw std::invalid_argument("orbifold_certificate: one multiplicity per hyperplane required");
    OrbifoldCertificate cert;
    cert.n = a.dim();
    cert.c = a.count();
    cert.rank_threshold = 4 * cert.n - 2;

    const long long bound = 2 * static_cast<long long>(cert.n);
    cert.min_finite_multiplicity = 0;
    bool any_finite = false;
    for (std::size_t i = 0; i < d.multiplicities.size(); ++i) {
        const auto& m = d.multiplicities[i];
        if (!m) continue;
        if (*m < 1) throw std::invalid_argument("orbifold_certificate: multiplicities must be >= 1");
        if (!any_finite || *m < cert.min_finite_multiplicity) cert.min_finite_multiplicity = *m;
        any_finite = true;
        if (*m < bound && cert.failed_clause == 0) {
            cert.failed_clause = 1;
            cert.refusal = "multiplicity m_" + std::to_string(i) + " = " + std::to_string(*m) +
                           " is below the bound 2n = " + std::to_string(bound);
        }
    }
    if (cert.failed_clause != 0) return cert;

    if (!is_general_position(a)) {
        cert.failed_clause = 2;
        cert.refusal = "arrangement not in general position: rank criterion undefined";
        return cert;
    }
    cert.conditions_rank = conditions_rank(dual_points(a), cert.n);
    if (cert.conditions_rank < cert.rank_threshold) {
        cert.failed_clause = 2;
        cert.refusal = "dual points impose only " + std::to_string(cert.conditions_rank) +
                       " conditions on quadrics; need at least " + std::to_string(cert.rank_threshold);
        return cert;
    }

    cert.strata = check_strata(a, cert.n - 1);
    for (const auto& [I, pass] : cert.strata) {
        if (!pass) {
            cert.failed_clause = 3;
            std::string idx;
            for (std::size_t i : I.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
            cert.refusal = "stratum restriction {" + idx + "} fails the rank criterion";
            return cert;
        }
    }

    cert.issued = true;
    if (cert.c >= 2 * cert.n + 1) cert.form = build_form(a, default_form_tuple(cert.n), rng);
    return cert;
}

FermatCover fermat_cover(const OrbifoldDivisor& d, Rng& rng) {
    const Arrangement& a = d.arrangement;
    if (d.multiplicities.size() != a.count())
        throw std::invalid_argument("fermat_cover: one multiplicity per hyperplane required");
    if (d.multiplicities.empty() || !d.multiplicities.front())
        throw std::invalid_argument("fermat_cover: multiplicities must be constant and finite");
    const long long m = *d.multiplicities.front();
    for (const auto& mi : d.multiplicities)
        if (!mi || *mi != m)
            throw std::invalid_argument("fermat_cover: multiplicities must be constant and finite");
    if (!a.normalized()) throw DegenerateInput("fermat_cover: arrangement must be normalized");

    FermatCover cover;
    cover.m = m;
    cover.n = a.dim();
    cover.k = a.extra();
    const std::size_t nvars = cover.n + cover.k + 1;
    for (std::size_t j = 0; j < cover.k; ++j) {
        Poly eq(nvars);
        Poly::Exponents e(nvars, 0);
        e[cover.n + 1 + j] = static_cast<std::uint32_t>(m);
        eq.add_term(e, Rat(1));
        for (std::size_t i = 0; i <= cover.n; ++i) {
            Poly::Exponents ei(nvars, 0);
            ei[i] = static_cast<std::uint32_t>(m);
            eq.add_term(ei, -a.coeff(i, j));
        }
        cover.equations.push_back(std::move(eq));
    }

    cover.base_certificate = orbifold_certificate(d, rng);
    const std::size_t need = 4 * cover.n - 2;
    if (!cover.base_certificate.issued) {
        cover.refusal = cover.base_certificate.refusal;
    } else if (a.count() < need) {
        cover.refusal = "only " + std::to_string(a.count()) + " hyperplanes; need at least " +
                        std::to_string(need);
    } else {
        cover.hyperbolicity_certificate = true;
    }
    return cover;
}

}  // namespace logtangent
