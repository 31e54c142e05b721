#include "logtangent/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace logtangent {

using Json = nlohmann::ordered_json;

namespace {

Json json_int_vec(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

Json json_rat_vec(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
}

Json json_matrix(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_quadric(const Quadric& q) {
    Json j;
    j["n"] = q.ambient_dim();
    j["rank"] = q.rank();
    j["gram"] = json_matrix(q.gram());
    return j;
}

Json json_line(const ProjLine& l) {
    Json j;
    j["p"] = json_int_vec(l.p.coords);
    j["q"] = json_int_vec(l.q.coords);
    return j;
}

Json json_dual_surface(const DualSurfaceWitness& w) {
    Json j;
    j["source"] = json_quadric(w.source);
    Json eqs = Json::array();
    for (const auto& e : w.carrier_equations) eqs.push_back(json_int_vec(e));
    j["carrier_equations"] = std::move(eqs);
    j["carrier_basis"] = json_matrix(w.carrier_basis);
    j["surface"] = json_quadric(w.surface);
    return j;
}

Json json_poly(const Poly& p) {
    Json j;
    j["nvars"] = p.nvars();
    j["degree"] = p.total_degree();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        Json exps = Json::array();
        for (std::uint32_t x : e) exps.push_back(x);
        t["exponents"] = std::move(exps);
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json json_form_witness(const SymmetricFormWitness& w) {
    Json j;
    Json map = Json::array();
    for (std::size_t i : w.index_map) map.push_back(i);
    j["index_map"] = std::move(map);
    j["distinguished_working_index"] = w.distinguished;
    j["distinguished_original_index"] = w.index_map.at(w.distinguished);
    Json cols = Json::array();
    for (std::size_t i : w.kept_columns) cols.push_back(i);
    j["kept_columns"] = std::move(cols);
    Json rows = Json::array();
    for (std::size_t i : w.row_hyperplanes) rows.push_back(i);
    j["row_hyperplanes"] = std::move(rows);
    j["minor"] = json_poly(w.minor_poly);
    j["identity_samples"] = w.identity_samples;
    j["power"] = w.power;
    Json profile = Json::array();
    for (const auto& [h, audit] : w.pole_profile) {
        Json row;
        row["working_index"] = h;
        row["original_index"] = w.index_map.at(h);
        row["per_monomial_max"] = audit.per_monomial_max;
        row["total"] = audit.total;
        profile.push_back(std::move(row));
    }
    j["pole_profile"] = std::move(profile);
    return j;
}

Json json_sampling(const LocusSample& s) {
    Json j;
    j["trials"] = s.trials;
    j["hits"] = s.hits;
    j["stratum_flagged"] = s.stratum_flagged;
    j["witnesses"] = s.witnesses.size();
    return j;
}

Json json_strata(const std::vector<std::pair<StratumIndex, bool>>& strata) {
    Json rows = Json::array();
    for (const auto& [I, pass] : strata) {
        Json r;
        Json idx = Json::array();
        for (std::size_t i : I.indices) idx.push_back(i);
        r["indices"] = std::move(idx);
        r["pass"] = pass;
        rows.push_back(std::move(r));
    }
    return rows;
}

Json header_doc(const DocHeader& h) {
    Json j;
    j["schema"] = "logtangent/1";
    j["command"] = h.command;
    j["seed"] = h.seed;
    if (!h.input.empty()) j["input"] = h.input;
    return j;
}

Json json_certificate(const OrbifoldCertificate& c) {
    Json j;
    j["issued"] = c.issued;
    if (!c.issued) {
        j["failed_clause"] = c.failed_clause;
        j["refusal"] = c.refusal;
    }
    j["n"] = c.n;
    j["c"] = c.c;
    j["min_finite_multiplicity"] = c.min_finite_multiplicity;
    j["conditions_rank"] = c.conditions_rank;
    j["rank_threshold"] = c.rank_threshold;
    j["strata"] = json_strata(c.strata);
    if (c.form) j["form"] = json_form_witness(*c.form);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Arrangement arrangement_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("arrangement file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes"))
        throw std::invalid_argument("arrangement file: expected object with \"n\" and \"hyperplanes\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw std::invalid_argument("arrangement file: \"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["hyperplanes"].is_array() || j["hyperplanes"].empty())
        throw std::invalid_argument("arrangement file: \"hyperplanes\" must be a nonempty array");

    std::vector<std::vector<Rat>> covs;
    std::size_t idx = 0;
    for (const auto& row : j["hyperplanes"]) {
        if (!row.is_array() || row.size() != n + 1)
            throw std::invalid_argument("hyperplane " + std::to_string(idx) + ": expected " +
                                        std::to_string(n + 1) + " coefficients");
        std::vector<Rat> cov;
        for (const auto& entry : row) {
            if (!entry.is_string())
                throw std::invalid_argument("hyperplane " + std::to_string(idx) +
                                            ": coefficients must be strings like \"3\" or \"-1/2\"");
            try {
                cov.push_back(Rat::parse(entry.get<std::string>()));
            } catch (const std::exception& e) {
                throw std::invalid_argument("hyperplane " + std::to_string(idx) + ": " + e.what());
            }
        }
        covs.push_back(std::move(cov));
        ++idx;
    }
    try {
        return Arrangement(n, std::move(covs));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("arrangement file: ") + e.what());
    }
}

Arrangement arrangement_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return arrangement_from_json(ss.str());
}

std::string to_json(const PositivityReport& r, const DocHeader& h) {
    Json j = header_doc(h);
    Json rep;
    rep["n"] = r.n;
    rep["c"] = r.c;
    rep["general_position"] = r.general_position;
    if (r.general_position) {
        rep["conditions_rank"] = r.conditions_rank;
        rep["rank_threshold"] = r.rank_threshold;
        rep["big"] = r.big;
        if (r.generic_fiber_dim) rep["generic_fiber_dim"] = *r.generic_fiber_dim;
        rep["ample_mod_boundary"] = r.ample_mod_boundary;
        rep["almost_ample"] = r.almost_ample;
        Json bl;
        switch (r.base_locus_image.kind) {
            case BaseLocusKind::Empty:
                bl["kind"] = "empty";
                break;
            case BaseLocusKind::Exact:
                bl["kind"] = "exact";
                bl["dim"] = r.base_locus_image.dim;
                break;
            case BaseLocusKind::Full:
                bl["kind"] = "full";
                bl["dim"] = r.base_locus_image.dim;
                break;
            case BaseLocusKind::Interval:
                bl["kind"] = "interval";
                bl["lower"] = r.base_locus_image.lower;
                bl["upper"] = r.base_locus_image.upper;
                break;
        }
        rep["base_locus_image"] = std::move(bl);
        if (r.upstairs_dim_bound) rep["upstairs_dim_bound"] = *r.upstairs_dim_bound;
        Json wit;
        Json quads = Json::array();
        for (const Quadric& q : r.quadric_witnesses) quads.push_back(json_quadric(q));
        wit["quadrics"] = std::move(quads);
        Json surfs = Json::array();
        for (const DualSurfaceWitness& s : r.dual_surfaces) surfs.push_back(json_dual_surface(s));
        wit["dual_surfaces"] = std::move(surfs);
        Json lines = Json::array();
        for (const ProjLine& l : r.line_witnesses) lines.push_back(json_line(l));
        wit["superjumping_lines"] = std::move(lines);
        rep["witnesses"] = std::move(wit);
        if (r.sampling.trials > 0) rep["sampling"] = json_sampling(r.sampling);
    }
    Json flags = Json::array();
    for (const std::string& f : r.flags) flags.push_back(f);
    rep["flags"] = std::move(flags);
    j["report"] = std::move(rep);
    return dump(j);
}

std::string to_text(const PositivityReport& r) {
    std::ostringstream os;
    os << "arrangement: c = " << r.c << " hyperplanes in P^" << r.n << "\n";
    if (!r.general_position) {
        os << "general position: NO — no classification\n";
        for (const auto& f : r.flags) os << "flag: " << f << "\n";
        return os.str();
    }
    os << "general position: yes\n";
    os << "quadric conditions rank: " << r.conditions_rank << " (threshold 4n-2 = " << r.rank_threshold
       << ")\n";
    os << "big: " << (r.big ? "yes" : "no") << " (threshold c >= 2n+1 = " << 2 * r.n + 1 << ")";
    if (r.generic_fiber_dim) os << ", generic fiber dimension " << *r.generic_fiber_dim;
    os << "\n";
    os << "ample modulo boundary: " << (r.ample_mod_boundary ? "yes" : "no") << "\n";
    os << "almost ample: " << (r.almost_ample ? "yes" : "no") << "\n";
    os << "base locus image off the boundary: ";
    switch (r.base_locus_image.kind) {
        case BaseLocusKind::Empty:
            os << "empty (boundary only)";
            break;
        case BaseLocusKind::Exact:
            os << "dimension " << r.base_locus_image.dim << " (4n-1-c)";
            break;
        case BaseLocusKind::Full:
            os << "all of P^" << r.n;
            break;
        case BaseLocusKind::Interval:
            os << "dimension in [" << r.base_locus_image.lower << ", " << r.base_locus_image.upper << "]";
            break;
    }
    os << "\n";
    if (r.upstairs_dim_bound)
        os << "upstairs base locus dimension bound: <= " << *r.upstairs_dim_bound << "\n";
    if (!r.quadric_witnesses.empty()) {
        os << "witness quadrics: " << r.quadric_witnesses.size()
           << " (first has rank " << r.quadric_witnesses.front().rank() << ")\n";
    }
    if (!r.dual_surfaces.empty()) os << "dual surface witnesses: " << r.dual_surfaces.size() << "\n";
    if (!r.line_witnesses.empty()) os << "superjumping line witnesses: " << r.line_witnesses.size() << "\n";
    if (r.sampling.trials > 0)
        os << "line sampling: " << r.sampling.hits << "/" << r.sampling.trials << " superjumping\n";
    for (const auto& f : r.flags) os << "flag: " << f << "\n";
    return os.str();
}

std::string to_json(const SuperjumpingDoc& d, const DocHeader& h) {
    Json j = header_doc(h);
    j["line"] = json_line(d.line);
    Json primal;
    primal["superjumping"] = d.check.primal.superjumping;
    primal["boundary"] = d.check.primal.boundary;
    primal["meets_stratum"] = d.check.primal.meets_stratum;
    primal["kernel_dim"] = d.check.primal.kernel_dim;
    if (d.check.primal.witness) primal["witness"] = json_int_vec(*d.check.primal.witness);
    j["tangency_test"] = std::move(primal);
    Json dual;
    dual["superjumping"] = d.check.dual.superjumping;
    dual["space_dim"] = d.check.dual.space_dim;
    dual["reducible_caveat"] = d.check.dual.reducible_caveat;
    if (d.check.dual.quadric) dual["quadric"] = json_quadric(*d.check.dual.quadric);
    j["dual_test"] = std::move(dual);
    j["superjumping"] = d.check.primal.superjumping;
    j["tests_agree"] = d.check.primal.superjumping == d.check.dual.superjumping;
    if (d.psi) {
        Json forms = Json::array();
        for (const auto& f : d.psi->forms) {
            Json pair = Json::array();
            pair.push_back(f[0].str());
            pair.push_back(f[1].str());
            forms.push_back(std::move(pair));
        }
        j["psi"] = std::move(forms);
    }
    if (d.scroll) j["scroll"] = json_quadric(*d.scroll);
    return dump(j);
}

std::string to_text(const SuperjumpingDoc& d) {
    std::ostringstream os;
    os << "line through ";
    os << "[";
    for (std::size_t i = 0; i < d.line.p.coords.size(); ++i)
        os << (i ? ":" : "") << d.line.p.coords[i].str();
    os << "] and [";
    for (std::size_t i = 0; i < d.line.q.coords.size(); ++i)
        os << (i ? ":" : "") << d.line.q.coords[i].str();
    os << "]\n";
    os << "superjumping: " << (d.check.primal.superjumping ? "yes" : "no");
    if (d.check.primal.boundary) os << " (contained in the boundary)";
    os << "\n";
    os << "tangency kernel dimension: " << d.check.primal.kernel_dim
       << " (superjumping iff >= 2)\n";
    os << "dual quadric system dimension: " << d.check.dual.space_dim << "\n";
    os << "tests agree: " << (d.check.primal.superjumping == d.check.dual.superjumping ? "yes" : "NO")
       << "\n";
    if (d.check.primal.meets_stratum)
        os << "flag: line meets a stratum; kernel count not certified there\n";
    if (d.check.dual.reducible_caveat)
        os << "flag: only reducible quadrics found through the dual configuration\n";
    if (d.psi) os << "degree-1 map to H_0 constructed; incidences verified exactly\n";
    if (d.scroll) os << "scroll quadric recovered (rank " << d.scroll->rank() << ")\n";
    return os.str();
}

std::string to_json(const QuadricsDoc& d, const DocHeader& h) {
    Json j = header_doc(h);
    j["n"] = d.n;
    j["c"] = d.c;
    j["conditions_rank"] = d.conditions_rank;
    j["rank_threshold"] = d.threshold;
    j["ample_mod_boundary"] = d.ample_mod_boundary;
    j["quadrics_through_duals_dim"] = d.space_dim;
    if (d.witness) j["witness"] = json_quadric(*d.witness);
    if (d.dual_surface) j["dual_surface"] = json_dual_surface(*d.dual_surface);
    return dump(j);
}

std::string to_text(const QuadricsDoc& d) {
    std::ostringstream os;
    os << "dual points: " << d.c << " in P^" << d.n << "\n";
    os << "conditions imposed on quadrics: " << d.conditions_rank << " (threshold 4n-2 = " << d.threshold
       << ")\n";
    os << "ample modulo boundary: " << (d.ample_mod_boundary ? "yes" : "no") << "\n";
    os << "linear system of quadrics through the dual points: dimension " << d.space_dim << "\n";
    if (d.witness) os << "low-rank witness found: rank " << d.witness->rank() << "\n";
    if (d.dual_surface) os << "dual surface computed on a P^" << d.dual_surface->surface.ambient_dim()
                           << " carrier\n";
    return os.str();
}

std::string to_json(const FormsDoc& d, const DocHeader& h) {
    Json j = header_doc(h);
    j["form"] = json_form_witness(d.witness);
    if (d.multiplicity) {
        j["multiplicity"] = *d.multiplicity;
        const long long expo = *d.multiplicity - static_cast<long long>(d.witness.power);
        j["holomorphy_exponent"] = expo;
        j["holomorphic_on_cover"] = expo >= 0;
    }
    return dump(j);
}

std::string to_text(const FormsDoc& d) {
    std::ostringstream os;
    const auto& w = d.witness;
    os << "symmetric form witness: minor of degree " << w.minor_poly.total_degree() << " in "
       << w.minor_poly.nvars() << " variables, " << w.minor_poly.term_count() << " terms\n";
    os << "distinguished hyperplane (original index): " << w.index_map.at(w.distinguished) << "\n";
    os << "boundary identity verified on " << w.identity_samples << " seeded points\n";
    os << "pole orders (per monomial max / total):\n";
    for (const auto& [hidx, audit] : w.pole_profile)
        os << "  H_" << w.index_map.at(hidx) << ": " << audit.per_monomial_max << " / " << audit.total
           << "\n";
    if (d.multiplicity) {
        const long long expo = *d.multiplicity - static_cast<long long>(w.power);
        os << "twist exponent m - 2n = " << expo << (expo >= 0 ? " (holomorphic on the cover)" : " (fails)")
           << "\n";
    }
    return os.str();
}

std::string to_json(const OrbifoldCertificate& c, const DocHeader& h) {
    Json j = header_doc(h);
    j["certificate"] = json_certificate(c);
    return dump(j);
}

std::string to_text(const OrbifoldCertificate& c) {
    std::ostringstream os;
    os << "orbifold certificate: " << (c.issued ? "ISSUED" : "REFUSED") << "\n";
    if (!c.issued) os << "clause " << c.failed_clause << ": " << c.refusal << "\n";
    os << "conditions rank " << c.conditions_rank << " / threshold " << c.rank_threshold << "\n";
    os << "strata checked: " << c.strata.size() << "\n";
    if (c.form) os << "symmetric form witness attached\n";
    return os.str();
}

std::string to_json(const FermatCover& f, const DocHeader& h) {
    Json j = header_doc(h);
    j["m"] = f.m;
    j["n"] = f.n;
    j["k"] = f.k;
    j["variables"] = f.n + f.k + 1;
    Json eqs = Json::array();
    for (const Poly& p : f.equations) eqs.push_back(json_poly(p));
    j["equations"] = std::move(eqs);
    j["hyperbolicity_certificate"] = f.hyperbolicity_certificate;
    if (!f.hyperbolicity_certificate) j["refusal"] = f.refusal;
    j["certificate"] = json_certificate(f.base_certificate);
    return dump(j);
}

std::string to_text(const FermatCover& f) {
    std::ostringstream os;
    os << "Fermat cover: " << f.k << " equations of degree " << f.m << " in P^" << f.n + f.k << "\n";
    for (std::size_t j = 0; j < f.equations.size(); ++j)
        os << "  equation " << j + 1 << ": " << f.equations[j].term_count() << " terms\n";
    os << "hyperbolicity certificate: " << (f.hyperbolicity_certificate ? "ISSUED" : "REFUSED") << "\n";
    if (!f.hyperbolicity_certificate) os << "reason: " << f.refusal << "\n";
    return os.str();
}

std::string to_json(const StrataDoc& d, const DocHeader& h) {
    Json j = header_doc(h);
    j["n"] = d.n;
    j["c"] = d.c;
    j["depth"] = d.depth;
    j["ambient_pass"] = d.ambient_pass;
    bool all = d.ambient_pass;
    for (const auto& [I, pass] : d.strata) all = all && pass;
    j["all_pass"] = all;
    j["strata"] = json_strata(d.strata);
    return dump(j);
}

std::string to_text(const StrataDoc& d) {
    std::ostringstream os;
    os << "ambient rank criterion: " << (d.ambient_pass ? "pass" : "fail") << "\n";
    std::size_t passes = 0;
    for (const auto& [I, pass] : d.strata) passes += pass ? 1 : 0;
    os << "strata up to depth " << d.depth << ": " << passes << "/" << d.strata.size() << " pass\n";
    for (const auto& [I, pass] : d.strata) {
        if (pass) continue;
        os << "  FAIL at {";
        for (std::size_t i = 0; i < I.indices.size(); ++i) os << (i ? "," : "") << I.indices[i];
        os << "}\n";
    }
    return os.str();
}

}  // namespace logtangent
