#include "ecid/rational.hpp"

#include "ecid/errors.hpp"

namespace ecid {

Rational::Rational(u64 num, u64 den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    const u64 g = gcd(num, den);
    num_ = num / (g == 0 ? 1 : g);
    den_ = den / (g == 0 ? 1 : g);
    if (num == 0) den_ = 1;
}

Rational Rational::operator*(const Rational& o) const {
    const u64 g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    return {checked_mul(num_ / (g1 ? g1 : 1), o.num_ / (g2 ? g2 : 1)),
            checked_mul(den_ / (g2 ? g2 : 1), o.den_ / (g1 ? g1 : 1))};
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    using u128 = unsigned __int128;
    const u128 l = static_cast<u128>(num_) * o.den_;
    const u128 r = static_cast<u128>(o.num_) * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(std::stoull(text));
        return Rational(std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ParseError("rational: cannot parse \"" + text + "\"");
    }
}

}  // namespace ecid
