#include "logtangent/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace logtangent {

Poly Poly::constant(std::size_t nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("Poly::var: variable index out of range");
    Poly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t t = 0;
        for (std::uint32_t x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) throw std::invalid_argument("Poly::add_term: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: arity mismatch");
    Poly p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
}

Poly operator-(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: arity mismatch");
    Poly p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: arity mismatch");
    Poly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponents e(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Poly Poly::scaled(const Rat& c) const {
    Poly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
    return p;
}

Rat Poly::eval(const std::vector<Rat>& values) const {
    if (values.size() != nvars_) throw std::invalid_argument("Poly::eval: arity mismatch");
    Rat sum;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= values[i];
        }
        sum += t;
    }
    return sum;
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& m, std::size_t row, std::uint64_t col_mask,
             std::map<std::uint64_t, Poly>& memo, std::size_t nvars) {
    auto it = memo.find(col_mask);
    if (it != memo.end()) return it->second;
    const std::size_t n = m.size();
    Poly det(nvars);
    if (row == n) {
        det = Poly::constant(nvars, Rat(1));
    } else {
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(col_mask & (std::uint64_t(1) << c))) continue;  // sign tracks available columns only
            if (!m[row][c].is_zero()) {
                Poly sub = det_rec(m, row + 1, col_mask & ~(std::uint64_t(1) << c), memo, nvars);
                Poly term = m[row][c] * sub;
                det = sign > 0 ? det + term : det - term;
            }
            sign = -sign;
        }
    }
    memo.emplace(col_mask, det);
    return det;
}

}  // namespace

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    if (n > 63) throw std::invalid_argument("poly_det: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det: matrix not square");
    const std::size_t nvars = m[0][0].nvars();
    std::map<std::uint64_t, Poly> memo;
    const std::uint64_t full = n == 63 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    return det_rec(m, 0, full, memo, nvars);
}

}  // namespace logtangent
