#pragma once

#include <compare>
#include <string>

#include "ecid/numeric.hpp"

namespace ecid {

/// Non-negative exact rational in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(u64 num, u64 den = 1);

    u64 num() const { return num_; }
    u64 den() const { return den_; }
    u64 ceil() const { return num_ / den_ + (num_ % den_ != 0); }

    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;
    bool less_than_integer(u64 n) const { return *this < Rational(n); }

    /// "24/5" or "8".
    std::string to_string() const;
    static Rational parse(const std::string& text);

private:
    u64 num_ = 0;
    u64 den_ = 1;
};

}  // namespace ecid
