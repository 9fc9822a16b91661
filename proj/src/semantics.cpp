#include "fillog/semantics.hpp"

#include <algorithm>

namespace fillog {

std::string ValuePair::str() const { return "<" + first.str() + ", " + second.str() + ">"; }

bool truth_leq(const ValuePair& a, const ValuePair& b) { return a.first <= b.first && a.second >= b.second; }

std::string to_string(const Value& v) {
    if (const auto* r = std::get_if<UnitRational>(&v)) return r->str();
    return std::get<ValuePair>(v).str();
}

std::string to_string(const Valuation& v) {
    std::string out;
    auto sep = [&] { if (!out.empty()) out += ','; };
    if (const auto* v1 = std::get_if<Valuation1>(&v)) {
        for (const auto& [k, x] : *v1) { sep(); out += k + "=" + x.str(); }
    } else {
        for (const auto& [k, x] : std::get<Valuation2>(v)) {
            sep();
            out += k + "=" + x.first.str() + ":" + x.second.str();
        }
    }
    return out;
}

UnitRational godel_impl(const UnitRational& a, const UnitRational& b) { return a <= b ? UnitRational::one() : b; }
UnitRational godel_coimpl(const UnitRational& a, const UnitRational& b) { return a <= b ? UnitRational::zero() : a; }
UnitRational godel_neg(const UnitRational& a) { return a.is_zero() ? UnitRational::one() : UnitRational::zero(); }
UnitRational godel_delta(const UnitRational& a) { return a.is_one() ? UnitRational::one() : UnitRational::zero(); }
UnitRational godel_and(const UnitRational& a, const UnitRational& b) { return std::min(a, b); }
UnitRational godel_or(const UnitRational& a, const UnitRational& b) { return std::max(a, b); }

namespace {

UnitRational eval1(const Formula& f, const Valuation1& v) {
    switch (f.kind()) {
        case Kind::Var: {
            auto it = v.find(f.name());
            if (it == v.end()) throw UnboundVariable(f.name());
            return it->second;
        }
        case Kind::Const0: return UnitRational::zero();
        case Kind::Const1: return UnitRational::one();
        case Kind::GNeg: return godel_neg(eval1(f.child(), v));
        case Kind::Delta: return godel_delta(eval1(f.child(), v));
        case Kind::InvNeg: return eval1(f.child(), v).complement();
        case Kind::And: return godel_and(eval1(f.left(), v), eval1(f.right(), v));
        case Kind::Or: return godel_or(eval1(f.left(), v), eval1(f.right(), v));
        case Kind::Impl: return godel_impl(eval1(f.left(), v), eval1(f.right(), v));
        case Kind::Coimpl: return godel_coimpl(eval1(f.left(), v), eval1(f.right(), v));
        case Kind::StrongNeg: break;
    }
    throw LanguageError("strong negation has no one-dimensional semantics");
}

ValuePair eval2(const Formula& f, const Valuation2& v) {
    const auto one = UnitRational::one();
    switch (f.kind()) {
        case Kind::Var: {
            auto it = v.find(f.name());
            if (it == v.end()) throw UnboundVariable(f.name());
            return it->second;
        }
        case Kind::Const0: return {UnitRational::zero(), one};
        case Kind::Const1: return {one, UnitRational::zero()};
        case Kind::StrongNeg: {
            auto c = eval2(f.child(), v);
            return {c.second, c.first};
        }
        case Kind::GNeg: {
            auto c = eval2(f.child(), v);
            return {godel_neg(c.first), godel_coimpl(one, c.second)};
        }
        case Kind::Delta: {
            auto c = eval2(f.child(), v);
            return {godel_delta(c.first), godel_neg(godel_neg(c.second))};
        }
        case Kind::And: {
            auto a = eval2(f.left(), v), b = eval2(f.right(), v);
            return {godel_and(a.first, b.first), godel_or(a.second, b.second)};
        }
        case Kind::Or: {
            auto a = eval2(f.left(), v), b = eval2(f.right(), v);
            return {godel_or(a.first, b.first), godel_and(a.second, b.second)};
        }
        case Kind::Impl: {
            auto a = eval2(f.left(), v), b = eval2(f.right(), v);
            return {godel_impl(a.first, b.first), godel_coimpl(b.second, a.second)};
        }
        case Kind::Coimpl: {
            auto a = eval2(f.left(), v), b = eval2(f.right(), v);
            return {godel_coimpl(a.first, b.first), godel_impl(b.second, a.second)};
        }
        case Kind::InvNeg: break;
    }
    throw LanguageError("involutive negation has no G2 semantics");
}

}  // namespace

UnitRational eval_big(const Formula& f, const Valuation1& v) {
    require_language(f, Language::BiG);
    return eval1(f, v);
}

UnitRational eval_ginv(const Formula& f, const Valuation1& v) {
    require_language(f, Language::Ginv);
    return eval1(f, v);
}

ValuePair eval_g2(const Formula& f, const Valuation2& v) {
    require_language(f, Language::Gsquare);
    return eval2(f, v);
}

Value eval(const Formula& f, const Valuation& v, Language lang) {
    if (lang == Language::Gsquare) {
        const auto* v2 = std::get_if<Valuation2>(&v);
        if (!v2) throw std::invalid_argument("G2 needs pair-valued valuations");
        return eval_g2(f, *v2);
    }
    const auto* v1 = std::get_if<Valuation1>(&v);
    if (!v1) throw std::invalid_argument("biG/Ginv need single-valued valuations");
    return lang == Language::BiG ? eval_big(f, *v1) : eval_ginv(f, *v1);
}

ValuePair conflate(const ValuePair& p) { return {p.second.complement(), p.first.complement()}; }

Valuation2 conflate(const Valuation2& v) {
    Valuation2 out;
    for (const auto& [k, p] : v) out.emplace(k, conflate(p));
    return out;
}

UnitRational inf_premises(const std::vector<Formula>& gamma, const Valuation1& v, Language lang) {
    UnitRational acc = UnitRational::one();
    for (const auto& g : gamma) {
        auto x = lang == Language::BiG ? eval_big(g, v) : eval_ginv(g, v);
        acc = std::min(acc, x);
    }
    return acc;
}

ValuePair inf_premises(const std::vector<Formula>& gamma, const Valuation2& v) {
    ValuePair acc{UnitRational::one(), UnitRational::zero()};
    for (const auto& g : gamma) {
        auto x = eval_g2(g, v);
        acc.first = std::min(acc.first, x.first);
        acc.second = std::max(acc.second, x.second);
    }
    return acc;
}

Valuation parse_valuation(std::string_view text, Language lang) {
    Valuation1 v1;
    Valuation2 v2;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected name=value in '" + std::string(item) + "'");
        std::string name(item.substr(0, eq));
        while (!name.empty() && name.back() == ' ') name.pop_back();
        auto value = item.substr(eq + 1);
        auto colon = value.find(':');
        if (lang == Language::Gsquare) {
            if (colon == std::string_view::npos)
                throw std::invalid_argument("G2 values are written n/d:n/d, got '" + std::string(value) + "'");
            v2[name] = {UnitRational::parse(value.substr(0, colon)), UnitRational::parse(value.substr(colon + 1))};
        } else {
            if (colon != std::string_view::npos) throw std::invalid_argument("pair value outside G2");
            v1[name] = UnitRational::parse(value);
        }
    }
    if (lang == Language::Gsquare) return v2;
    return v1;
}

}  // namespace fillog
