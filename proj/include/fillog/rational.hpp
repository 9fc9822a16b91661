#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fillog {

// Exact rational in [0,1], canonical (gcd 1, positive denominator).
class UnitRational {
public:
    using Rep = boost::rational<std::int64_t>;

    constexpr UnitRational() = default;
    UnitRational(std::int64_t num, std::int64_t den = 1);
    static UnitRational from_rep(const Rep& r);

    static UnitRational zero() { return UnitRational(); }
    static UnitRational one() { return UnitRational(1); }
    static UnitRational half() { return UnitRational(1, 2); }

    // Accepts "0", "1", "n/d". Throws std::invalid_argument.
    static UnitRational parse(std::string_view text);

    std::int64_t numerator() const { return rep_.numerator(); }
    std::int64_t denominator() const { return rep_.denominator(); }
    const Rep& rep() const { return rep_; }

    UnitRational complement() const { return from_rep(Rep(1) - rep_); }
    bool is_zero() const { return rep_.numerator() == 0; }
    bool is_one() const { return rep_ == Rep(1); }

    std::string str() const;

    friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.rep_ == b.rep_; }
    friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) {
        if (a.rep_ < b.rep_) return std::strong_ordering::less;
        if (b.rep_ < a.rep_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rep rep_{0};
};

// Midpoint-style interpolation: lo + (hi - lo) * j / k.
UnitRational interpolate(const UnitRational& lo, const UnitRational& hi, std::int64_t j, std::int64_t k);

}  // namespace fillog
