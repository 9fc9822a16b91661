#include "fillog/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace fillog {

namespace {

void require_unit(const UnitRational::Rep& r) {
    if (r < UnitRational::Rep(0) || r > UnitRational::Rep(1))
        throw std::domain_error("value outside [0,1]");
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return out;
}

}  // namespace

UnitRational::UnitRational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    rep_ = Rep(num, den);
    require_unit(rep_);
}

UnitRational UnitRational::from_rep(const Rep& r) {
    require_unit(r);
    UnitRational out;
    out.rep_ = r;
    return out;
}

UnitRational UnitRational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return UnitRational(parse_int(text));
        return UnitRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument("bad rational '" + std::string(text) + "': " + e.what());
    }
}

std::string UnitRational::str() const {
    if (rep_.denominator() == 1) return std::to_string(rep_.numerator());
    return std::to_string(rep_.numerator()) + "/" + std::to_string(rep_.denominator());
}

UnitRational interpolate(const UnitRational& lo, const UnitRational& hi, std::int64_t j, std::int64_t k) {
    return UnitRational::from_rep(lo.rep() + (hi.rep() - lo.rep()) * UnitRational::Rep(j, k));
}

}  // namespace fillog
