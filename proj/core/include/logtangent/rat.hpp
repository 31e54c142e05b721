#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace logtangent {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Zero is canonically 0/1, so componentwise equality is exact
/// value equality.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(Int n, Int d);

    /// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed
    /// input or zero denominator.
    static Rat parse(std::string_view s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
    Rat abs() const { return num_ >= 0 ? *this : -*this; }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    bool operator==(const Rat& o) const = default;
    std::strong_ordering operator<=>(const Rat& o) const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

  private:
    void reduce();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Clears denominators and divides out the content so the result is an
/// integer vector with gcd 1 and positive first nonzero entry. The zero
/// vector maps to itself.
std::vector<Int> primitive(const std::vector<Rat>& v);
std::vector<Int> primitive_int(const std::vector<Int>& v);

std::vector<Rat> to_rat(const std::vector<Int>& v);

}  // namespace logtangent
