#include "logtangent/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace logtangent {

namespace {

Int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("bad digit in integer literal: " + std::string(s));
    }
    return Int(std::string(s));
}

}  // namespace

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational literal with zero denominator: " + std::string(s));
    return Rat(std::move(n), std::move(d));
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::vector<Int> primitive(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, x.den());
    std::vector<Int> w;
    w.reserve(v.size());
    for (const Rat& x : v) w.push_back(x.num() * (lcm / x.den()));
    return primitive_int(w);
}

std::vector<Int> primitive_int(const std::vector<Int>& v) {
    Int g = 0;
    int first_sign = 0;
    for (const Int& x : v) {
        if (x != 0 && first_sign == 0) first_sign = x > 0 ? 1 : -1;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    }
    if (g == 0) return v;  // zero vector
    std::vector<Int> w;
    w.reserve(v.size());
    for (const Int& x : v) w.push_back(first_sign < 0 ? Int(-x / g) : Int(x / g));
    return w;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
    std::vector<Rat> w;
    w.reserve(v.size());
    for (const Int& x : v) w.emplace_back(x);
    return w;
}

}  // namespace logtangent
