#pragma once

#include "fillog/rational.hpp"
#include "fillog/syntax.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fillog {

struct ValuePair {
    UnitRational first;   // support of truth
    UnitRational second;  // support of falsity

    friend bool operator==(const ValuePair&, const ValuePair&) = default;
    std::string str() const;  // "<a, b>"
};

// Truth order on pairs: first grows, second shrinks.
bool truth_leq(const ValuePair& a, const ValuePair& b);

using Valuation1 = std::map<std::string, UnitRational>;
using Valuation2 = std::map<std::string, ValuePair>;
using Valuation = std::variant<Valuation1, Valuation2>;
using Value = std::variant<UnitRational, ValuePair>;

std::string to_string(const Value& v);
std::string to_string(const Valuation& v);

class UnboundVariable : public std::out_of_range {
public:
    explicit UnboundVariable(const std::string& name) : std::out_of_range("no value for variable '" + name + "'") {}
};

// Standard operations on [0,1].
UnitRational godel_impl(const UnitRational& a, const UnitRational& b);
UnitRational godel_coimpl(const UnitRational& a, const UnitRational& b);
UnitRational godel_neg(const UnitRational& a);
UnitRational godel_delta(const UnitRational& a);
UnitRational godel_and(const UnitRational& a, const UnitRational& b);
UnitRational godel_or(const UnitRational& a, const UnitRational& b);

UnitRational eval_big(const Formula& f, const Valuation1& v);
UnitRational eval_ginv(const Formula& f, const Valuation1& v);
ValuePair eval_g2(const Formula& f, const Valuation2& v);

// Dispatches on lang; the valuation alternative must match (Valuation2 iff Gsquare).
Value eval(const Formula& f, const Valuation& v, Language lang);

// v*(p) = <1 - v2(p), 1 - v1(p)>.
Valuation2 conflate(const Valuation2& v);
ValuePair conflate(const ValuePair& p);

// Infimum of premise values; 1 (resp. <1,0>) for empty premises.
UnitRational inf_premises(const std::vector<Formula>& gamma, const Valuation1& v, Language lang);
ValuePair inf_premises(const std::vector<Formula>& gamma, const Valuation2& v);

// "p=2/3,q=1/2" or "p=1/2:1/3,q=0:1". Throws std::invalid_argument.
Valuation parse_valuation(std::string_view text, Language lang);

}  // namespace fillog
