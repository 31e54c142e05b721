#include "logtangent/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace logtangent {

TruncSeries::TruncSeries(std::vector<Rat> coeffs, std::size_t trunc_order) : coeff_(std::move(coeffs)) {
    if (trunc_order < 1) throw std::invalid_argument("TruncSeries: truncation order must be >= 1");
    coeff_.resize(trunc_order);
}

TruncSeries TruncSeries::constant(const Rat& c, std::size_t trunc_order) {
    TruncSeries s({}, trunc_order);
    s.coeff_[0] = c;
    return s;
}

std::optional<std::size_t> TruncSeries::valuation() const {
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        if (!coeff_[i].is_zero()) return i;
    return std::nullopt;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (Rat& c : s.coeff_) c = -c;
    return s;
}

static std::size_t common_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.trunc_order() != b.trunc_order())
        throw std::invalid_argument("TruncSeries: mixed truncation orders");
    return a.trunc_order();
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t t = common_order(a, b);
    std::vector<Rat> c(t);
    for (std::size_t i = 0; i < t; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return TruncSeries(std::move(c), t);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t t = common_order(a, b);
    std::vector<Rat> c(t);
    for (std::size_t i = 0; i < t; ++i) c[i] = a.coeff(i) - b.coeff(i);
    return TruncSeries(std::move(c), t);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t t = common_order(a, b);
    std::vector<Rat> c(t);
    for (std::size_t i = 0; i < t; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; i + j < t; ++j) {
            if (b.coeff(j).is_zero()) continue;
            c[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return TruncSeries(std::move(c), t);
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries s = *this;
    for (Rat& x : s.coeff_) x *= c;
    return s;
}

}  // namespace logtangent
