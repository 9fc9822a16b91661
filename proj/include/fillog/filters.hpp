#pragma once

#include "fillog/rational.hpp"
#include "fillog/semantics.hpp"
#include "fillog/syntax.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fillog {

class FilterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// [bound,1] or (bound,1].
struct Filter01 {
    UnitRational bound;
    bool strict = false;

    static Filter01 make(UnitRational bound, bool strict);  // validates
    friend bool operator==(const Filter01&, const Filter01&) = default;
};

// {<a,b> : a >(=) x and b <(=) y}, order-filter on the truth order of pairs.
struct FilterJoin {
    UnitRational x;
    bool x_strict = false;
    UnitRational y;
    bool y_strict = false;

    static FilterJoin make(UnitRational x, bool x_strict, UnitRational y, bool y_strict);  // validates
    friend bool operator==(const FilterJoin&, const FilterJoin&) = default;
};

using Filter = std::variant<Filter01, FilterJoin>;

// "[c,1]", "(c,1]", "bi[x,y]", "bi(x,y)", "bi(x,y]", "bi[x,y)".
Filter parse_filter(std::string_view text);
std::string to_string(const Filter& d);

bool member01(const Filter01& d, const UnitRational& a);
bool member_join(const FilterJoin& d, const ValuePair& p);

bool is_paraconsistent(const FilterJoin& d);
bool is_value_prime(const FilterJoin& d);
bool is_validity_stable(const Filter& d, Language lang);

// D* = {<1-y, 1-x> : <x,y> in D}.
FilterJoin conflate(const FilterJoin& d);

// Throws FilterError when the filter does not live on lang's carrier.
void require_carrier(const Filter& d, Language lang);

enum class ClassId {
    // biG and Ginv
    One,
    Order,
    NoZero,
    UpperOpen,
    HalfOpen,
    HalfClosed,
    LowerOpen,
    // G2
    OneOne,           // <1,1>
    OneZero,          // <1,0>
    OneDim,           // <1,y>, <x,0>, their sharp versions
    SharpOneOne,      // <1,1> sharp, <0,0> sharp
    NonParaconsistent,  // <x,y>, x > y
    Diagonal,         // <x,x>
    Paraconsistent,   // <y,x>, y < x
    OpenTop,          // <x°,1°>
    EdgeHalf,         // <0°,1•>, <0•,1°>
    EdgeOpen,         // <0°,1°>
};

struct EntailmentClass {
    Language lang = Language::BiG;
    ClassId id = ClassId::Order;

    std::string name() const;   // stable identifier, e.g. "half-closed"
    std::string label() const;  // human-readable shape, e.g. "[1/2,1]"
    friend bool operator==(const EntailmentClass&, const EntailmentClass&) = default;
};

std::vector<EntailmentClass> all_classes(Language lang);
EntailmentClass parse_class(Language lang, std::string_view name);

EntailmentClass classify(const Filter& d, Language lang);
Filter canonical_representative(const EntailmentClass& cls);

}  // namespace fillog
