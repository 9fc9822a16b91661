#include "fillog/filters.hpp"

#include <array>

namespace fillog {

namespace {

bool above(const UnitRational& a, const UnitRational& bound, bool strict) { return strict ? a > bound : a >= bound; }
bool below(const UnitRational& b, const UnitRational& bound, bool strict) { return strict ? b < bound : b <= bound; }

std::string trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

Filter01 Filter01::make(UnitRational bound, bool strict) {
    if (!strict && bound.is_zero()) throw FilterError("[0,1] is not a proper filter");
    if (strict && bound.is_one()) throw FilterError("(1,1] is empty");
    return {bound, strict};
}

FilterJoin FilterJoin::make(UnitRational x, bool x_strict, UnitRational y, bool y_strict) {
    if (!x_strict && x.is_zero() && !y_strict && y.is_one()) throw FilterError("bi[0,1] is not a proper filter");
    if (x_strict && x.is_one()) throw FilterError("strict x-bound 1 gives an empty set");
    if (y_strict && y.is_zero()) throw FilterError("strict y-bound 0 gives an empty set");
    return {x, x_strict, y, y_strict};
}

Filter parse_filter(std::string_view raw) {
    std::string text = trim(raw);
    bool join = text.rfind("bi", 0) == 0;
    std::string body = join ? trim(std::string_view(text).substr(2)) : text;
    if (body.size() < 5) throw FilterError("malformed filter '" + text + "'");
    char open = body.front(), close = body.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')'))
        throw FilterError("filter must be bracketed: '" + text + "'");
    auto inner = std::string_view(body).substr(1, body.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw FilterError("filter needs two bounds: '" + text + "'");
    UnitRational lo, hi;
    try {
        lo = UnitRational::parse(inner.substr(0, comma));
        hi = UnitRational::parse(inner.substr(comma + 1));
    } catch (const std::invalid_argument& e) {
        throw FilterError(e.what());
    }
    if (join) return FilterJoin::make(lo, open == '(', hi, close == ')');
    if (!hi.is_one() || close != ']') throw FilterError("filters on [0,1] have the form [c,1] or (c,1]");
    return Filter01::make(lo, open == '(');
}

std::string to_string(const Filter& d) {
    if (const auto* f = std::get_if<Filter01>(&d))
        return std::string(f->strict ? "(" : "[") + f->bound.str() + ",1]";
    const auto& j = std::get<FilterJoin>(d);
    return std::string("bi") + (j.x_strict ? "(" : "[") + j.x.str() + "," + j.y.str() + (j.y_strict ? ")" : "]");
}

bool member01(const Filter01& d, const UnitRational& a) { return above(a, d.bound, d.strict); }

bool member_join(const FilterJoin& d, const ValuePair& p) {
    return above(p.first, d.x, d.x_strict) && below(p.second, d.y, d.y_strict);
}

bool is_paraconsistent(const FilterJoin& d) {
    // Need some t with t >(=) x and t <(=) y.
    if (d.x < d.y) return true;
    return d.x == d.y && !d.x_strict && !d.y_strict;
}

bool is_value_prime(const FilterJoin& d) {
    const auto one = UnitRational::one(), zero = UnitRational::zero();
    return member_join(d, {one, one}) || member_join(d, {zero, zero});
}

bool is_validity_stable(const Filter& d, Language lang) {
    require_carrier(d, lang);
    if (lang == Language::Gsquare) {
        const auto& j = std::get<FilterJoin>(d);
        return !(j.x.is_zero() && j.y.is_one());
    }
    const auto& f = std::get<Filter01>(d);
    if (lang == Language::BiG) return !(f.strict && f.bound.is_zero());
    return f.bound > UnitRational::half();
}

FilterJoin conflate(const FilterJoin& d) { return {d.y.complement(), d.y_strict, d.x.complement(), d.x_strict}; }

void require_carrier(const Filter& d, Language lang) {
    bool pairs = std::holds_alternative<FilterJoin>(d);
    if (pairs != (lang == Language::Gsquare))
        throw FilterError("filter " + to_string(d) + " does not live on the carrier of " + to_string(lang));
}

// ── classes ──

namespace {

struct ClassInfo {
    Language lang;
    ClassId id;
    const char* name;
    const char* label;
    const char* representative;
};

const std::array<ClassInfo, 20> kClasses{{
    {Language::BiG, ClassId::One, "one", "[1,1]", "[1,1]"},
    {Language::BiG, ClassId::Order, "order", "[x,1], (x,1] with 0<x<1", "[1/2,1]"},
    {Language::BiG, ClassId::NoZero, "no-zero", "(0,1]", "(0,1]"},
    {Language::Ginv, ClassId::One, "one", "[1,1]", "[1,1]"},
    {Language::Ginv, ClassId::UpperOpen, "upper-open", "[x,1], (x,1] with x>1/2", "[3/4,1]"},
    {Language::Ginv, ClassId::HalfOpen, "half-open", "(1/2,1]", "(1/2,1]"},
    {Language::Ginv, ClassId::HalfClosed, "half-closed", "[1/2,1]", "[1/2,1]"},
    {Language::Ginv, ClassId::LowerOpen, "lower-open", "[x,1], (x,1] with 0<x<1/2", "[1/4,1]"},
    {Language::Ginv, ClassId::NoZero, "no-zero", "(0,1]", "(0,1]"},
    {Language::Gsquare, ClassId::Order, "order", "<x,1> (order)", "bi[1/2,1]"},
    {Language::Gsquare, ClassId::OneOne, "one-one", "<1,1>", "bi[1,1]"},
    {Language::Gsquare, ClassId::OneZero, "one-zero", "<1,0>", "bi[1,0]"},
    {Language::Gsquare, ClassId::OneDim, "one-dim", "<1,y>", "bi[1/2,0]"},
    {Language::Gsquare, ClassId::SharpOneOne, "sharp-one-one", "<1,1>#", "bi[1,1)"},
    {Language::Gsquare, ClassId::NonParaconsistent, "non-paraconsistent", "<x,y> x>y", "bi[2/3,1/3]"},
    {Language::Gsquare, ClassId::Diagonal, "diagonal", "<x,x>", "bi[1/2,1/2]"},
    {Language::Gsquare, ClassId::Paraconsistent, "paraconsistent", "<y,x> y<x", "bi[1/3,2/3]"},
    {Language::Gsquare, ClassId::OpenTop, "open-top", "<x°,1°>", "bi(1/3,1)"},
    {Language::Gsquare, ClassId::EdgeHalf, "edge-half", "<0°,1•>", "bi(0,1]"},
    {Language::Gsquare, ClassId::EdgeOpen, "edge-open", "<0°,1°>", "bi(0,1)"},
}};

const ClassInfo& info(const EntailmentClass& c) {
    for (const auto& ci : kClasses)
        if (ci.lang == c.lang && ci.id == c.id) return ci;
    throw std::invalid_argument("class not defined for language " + to_string(c.lang));
}

EntailmentClass classify_join(const FilterJoin& d) {
    const auto& x = d.x;
    const auto& y = d.y;
    auto cls = [](ClassId id) { return EntailmentClass{Language::Gsquare, id}; };
    // Degenerate first coordinate 1 or second coordinate 0.
    if (x.is_one()) {
        if (y.is_zero()) return cls(ClassId::OneZero);
        if (y.is_one()) return cls(d.y_strict ? ClassId::SharpOneOne : ClassId::OneOne);
        return cls(ClassId::OneDim);
    }
    if (y.is_zero()) {
        if (x.is_zero()) return cls(d.x_strict ? ClassId::SharpOneOne : ClassId::OneOne);
        return cls(ClassId::OneDim);
    }
    // Two-dimensional: 0 <= x < 1, 0 < y <= 1.
    if (x.is_zero() && y.is_one())
        return cls(d.x_strict && d.y_strict ? ClassId::EdgeOpen : ClassId::EdgeHalf);
    if (y.is_one()) return cls(d.y_strict ? ClassId::OpenTop : ClassId::Order);
    if (x.is_zero()) return cls(d.x_strict ? ClassId::OpenTop : ClassId::Order);
    if (x > y) return cls(ClassId::NonParaconsistent);
    if (x < y) return cls(ClassId::Paraconsistent);
    return cls(!d.x_strict && !d.y_strict ? ClassId::Diagonal : ClassId::NonParaconsistent);
}

}  // namespace

std::string EntailmentClass::name() const { return info(*this).name; }
std::string EntailmentClass::label() const { return info(*this).label; }

std::vector<EntailmentClass> all_classes(Language lang) {
    std::vector<EntailmentClass> out;
    for (const auto& ci : kClasses)
        if (ci.lang == lang) out.push_back({ci.lang, ci.id});
    return out;
}

EntailmentClass parse_class(Language lang, std::string_view name) {
    for (const auto& ci : kClasses)
        if (ci.lang == lang && name == ci.name) return {ci.lang, ci.id};
    throw std::invalid_argument("unknown class '" + std::string(name) + "' for " + to_string(lang));
}

EntailmentClass classify(const Filter& d, Language lang) {
    require_carrier(d, lang);
    if (lang == Language::Gsquare) return classify_join(std::get<FilterJoin>(d));
    const auto& f = std::get<Filter01>(d);
    const auto half = UnitRational::half();
    auto cls = [lang](ClassId id) { return EntailmentClass{lang, id}; };
    if (f.bound.is_one()) return cls(ClassId::One);
    if (f.bound.is_zero()) return cls(ClassId::NoZero);
    if (lang == Language::BiG) return cls(ClassId::Order);
    if (f.bound > half) return cls(ClassId::UpperOpen);
    if (f.bound == half) return cls(f.strict ? ClassId::HalfOpen : ClassId::HalfClosed);
    return cls(ClassId::LowerOpen);
}

Filter canonical_representative(const EntailmentClass& cls) { return parse_filter(info(cls).representative); }

}  // namespace fillog
