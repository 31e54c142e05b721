#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "logtangent/rat.hpp"

namespace logtangent {

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept in an ordered map keyed by exponent vector, so iteration
/// and serialization are deterministic.
class Poly {
  public:
    using Exponents = std::vector<std::uint32_t>;

    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rat& c);
    static Poly var(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rat& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rat& c) const;

    Rat eval(const std::vector<Rat>& values) const;

    bool operator==(const Poly& o) const = default;

  private:
    std::size_t nvars_;
    std::map<Exponents, Rat> terms_;
};

/// Determinant of a square matrix of polynomials by expansion along the first
/// row with memoization on column subsets. Sizes here are small (<= 6).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace logtangent
