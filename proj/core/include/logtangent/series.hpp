#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logtangent/rat.hpp"

namespace logtangent {

/// Truncated univariate power series over Q: c_0 + c_1 t + ... + c_{T-1} t^{T-1}
/// modulo t^T. Used for valuation (pole order) bookkeeping along formal line
/// parametrizations.
class TruncSeries {
  public:
    /// Coefficients are truncated or zero-padded to length trunc_order.
    TruncSeries(std::vector<Rat> coeffs, std::size_t trunc_order);

    static TruncSeries zero(std::size_t trunc_order) { return TruncSeries({}, trunc_order); }
    static TruncSeries constant(const Rat& c, std::size_t trunc_order);

    std::size_t trunc_order() const { return coeff_.size(); }
    const Rat& coeff(std::size_t i) const { return coeff_[i]; }
    const std::vector<Rat>& coeffs() const { return coeff_; }

    /// Smallest index with nonzero coefficient; nullopt when the series is
    /// zero to the truncation order (the +infinity sentinel).
    std::optional<std::size_t> valuation() const;

    bool is_zero() const { return !valuation().has_value(); }

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rat& c) const;

    bool operator==(const TruncSeries& o) const = default;

  private:
    std::vector<Rat> coeff_;
};

}  // namespace logtangent
