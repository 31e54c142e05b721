#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logtangent/jumping.hpp"
#include "logtangent/orbifold.hpp"
#include "logtangent/report.hpp"

namespace logtangent {

/// Parses the arrangement file format: a JSON object
///   {"n": <int>, "hyperplanes": [["p/q", ...], ...]}
/// with every coefficient a rational or integer literal in a string.
/// Hyperplane order is significant. Errors name the offending hyperplane.
Arrangement arrangement_from_json(const std::string& text);
Arrangement arrangement_from_file(const std::string& path);

/// Common document header; every JSON document carries the schema tag
/// "logtangent/1" and the seed it was produced with.
struct DocHeader {
    std::string command;
    std::uint64_t seed = 0;
    std::string input;
};

std::string to_json(const PositivityReport& r, const DocHeader& h);
std::string to_text(const PositivityReport& r);

struct SuperjumpingDoc {
    ProjLine line;
    SuperjumpingCheck check;
    std::optional<PsiMap> psi;
    std::optional<Quadric> scroll;
};
std::string to_json(const SuperjumpingDoc& d, const DocHeader& h);
std::string to_text(const SuperjumpingDoc& d);

struct QuadricsDoc {
    std::size_t n = 0, c = 0;
    std::size_t conditions_rank = 0;
    std::size_t threshold = 0;
    bool ample_mod_boundary = false;
    std::size_t space_dim = 0;
    std::optional<Quadric> witness;
    std::optional<DualSurfaceWitness> dual_surface;
};
std::string to_json(const QuadricsDoc& d, const DocHeader& h);
std::string to_text(const QuadricsDoc& d);

struct FormsDoc {
    SymmetricFormWitness witness;
    std::optional<long long> multiplicity;  // for the holomorphy exponent
};
std::string to_json(const FormsDoc& d, const DocHeader& h);
std::string to_text(const FormsDoc& d);

std::string to_json(const OrbifoldCertificate& c, const DocHeader& h);
std::string to_text(const OrbifoldCertificate& c);

std::string to_json(const FermatCover& f, const DocHeader& h);
std::string to_text(const FermatCover& f);

struct StrataDoc {
    std::size_t n = 0, c = 0;
    std::size_t depth = 0;
    bool ambient_pass = false;
    std::vector<std::pair<StratumIndex, bool>> strata;
};
std::string to_json(const StrataDoc& d, const DocHeader& h);
std::string to_text(const StrataDoc& d);

}  // namespace logtangent
