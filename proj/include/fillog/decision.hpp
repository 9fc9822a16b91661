#pragma once

#include "fillog/filters.hpp"
#include "fillog/rational.hpp"
#include "fillog/semantics.hpp"
#include "fillog/syntax.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fillog {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SymbolicPoint {
    enum class Tag { Var, Mirror, Coord, Const };

    Tag tag = Tag::Const;
    std::string var;    // Var, Mirror, Coord
    int coord = 0;      // Coord: 1 or 2
    UnitRational value; // Const

    static SymbolicPoint variable(std::string v) { return {Tag::Var, std::move(v), 0, {}}; }
    static SymbolicPoint mirror(std::string v) { return {Tag::Mirror, std::move(v), 0, {}}; }
    static SymbolicPoint coordinate(std::string v, int c) { return {Tag::Coord, std::move(v), c, {}}; }
    static SymbolicPoint constant(UnitRational c) { return {Tag::Const, {}, 0, c}; }

    std::string str() const;
    friend bool operator==(const SymbolicPoint&, const SymbolicPoint&) = default;
};

// Ranked partition of symbolic points. Point layout: constants in increasing
// order, then per variable one slot (biG), {v, 1-v} (Ginv) or {v1, v2} (G2).
class OrderConfig {
public:
    OrderConfig() = default;
    OrderConfig(Language lang, std::vector<std::string> vars, std::vector<UnitRational> consts);

    Language language() const { return lang_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<UnitRational>& constants() const { return consts_; }
    const std::vector<int>& ranks() const { return ranks_; }
    std::vector<int>& mutable_ranks() { return ranks_; }

    std::size_t slots_per_var() const { return lang_ == Language::BiG ? 1 : 2; }
    std::size_t point_count() const { return consts_.size() + vars_.size() * slots_per_var(); }
    std::vector<SymbolicPoint> points() const;

    int top() const { return ranks_[consts_.size() - 1]; }
    int const_rank(const UnitRational& c) const;
    int slot_rank(std::size_t var_index, std::size_t slot) const {
        return ranks_[consts_.size() + var_index * slots_per_var() + slot];
    }
    int rank_of(const SymbolicPoint& p) const;
    std::size_t var_index(const std::string& name) const;

    // e.g. "0 < v(p) < 1/2 = ..." listing cells bottom-up.
    std::string str() const;

    friend bool operator==(const OrderConfig&, const OrderConfig&) = default;

private:
    Language lang_ = Language::BiG;
    std::vector<std::string> vars_;
    std::vector<UnitRational> consts_;
    std::vector<int> ranks_;
};

// Adds 0 and 1 (and, for Ginv, 1/2 and all mirrors); sorts and deduplicates.
std::vector<UnitRational> normalize_constants(Language lang, std::vector<UnitRational> consts);

inline constexpr std::size_t kDefaultMaxVars = 4;

// Calls visit on every configuration; stops early when visit returns false.
// The same OrderConfig object is reused between calls.
void enumerate_configs(const std::vector<std::string>& vars, Language lang, const std::vector<UnitRational>& consts,
                       const std::function<bool(const OrderConfig&)>& visit,
                       std::size_t max_vars = kDefaultMaxVars);
std::vector<OrderConfig> all_configs(const std::vector<std::string>& vars, Language lang,
                                     const std::vector<UnitRational>& consts, std::size_t max_vars = kDefaultMaxVars);

OrderConfig abstract(const Valuation& v, const std::vector<std::string>& vars, Language lang,
                     const std::vector<UnitRational>& consts);
Valuation realize(const OrderConfig& cfg);

SymbolicPoint symbolic_eval(const Formula& f, const OrderConfig& cfg);
std::pair<SymbolicPoint, SymbolicPoint> symbolic_eval_g2(const Formula& f, const OrderConfig& cfg);

enum class MembershipMode { Infimum, Matrix };

struct DecisionOptions {
    std::size_t max_vars = kDefaultMaxVars;
    MembershipMode mode = MembershipMode::Infimum;
};

struct Verdict {
    bool holds = true;
    std::optional<Valuation> witness;
    std::optional<EntailmentClass> class_used;
    std::size_t configs_checked = 0;
};

Verdict decide_entailment(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                          const DecisionOptions& opts = {});
Verdict decide_order_entailment(const std::vector<Formula>& gamma, const Formula& chi, Language lang,
                                const DecisionOptions& opts = {});
bool check_validity(const Formula& f, Language lang, const DecisionOptions& opts = {});

// Exhaustive search over valuations with values in {0, 1/d, ..., 1}.
Verdict decide_entailment_grid(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                               int denominator, std::size_t budget = 50'000'000);

// Concrete check of a claimed counterexample: premises designated, conclusion not.
bool is_counterexample(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                       const Valuation& v);
bool is_order_counterexample(const std::vector<Formula>& gamma, const Formula& chi, Language lang,
                             const Valuation& v);

std::vector<std::string> query_variables(const std::vector<Formula>& gamma, const Formula& chi);

}  // namespace fillog
