#include "logtangent/rng.hpp"

#include <stdexcept>

namespace logtangent {

long long Rng::int_in(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::int_in: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng_() % span);
}

Rat Rng::rational(long long height) {
    if (height < 1) throw std::invalid_argument("Rng::rational: height must be >= 1");
    Int num(int_in(-height, height));
    Int den(int_in(1, height));
    return Rat(std::move(num), std::move(den));
}

Rat Rng::nonzero_rational(long long height) {
    for (;;) {
        Rat r = rational(height);
        if (!r.is_zero()) return r;
    }
}

std::vector<Rat> Rng::rational_vector(std::size_t len, long long height) {
    std::vector<Rat> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) v.push_back(rational(height));
    return v;
}

std::vector<Rat> Rng::nonzero_vector(std::size_t len, long long height) {
    for (;;) {
        std::vector<Rat> v = rational_vector(len, height);
        for (const Rat& x : v)
            if (!x.is_zero()) return v;
    }
}

}  // namespace logtangent
