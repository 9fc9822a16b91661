#pragma once

#include "fillog/decision.hpp"
#include "fillog/filters.hpp"
#include "fillog/syntax.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fillog {

class ReductionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Γ ⊨_cls χ iff premises ⊨≤ conclusion.
struct ReductionRecipe {
    EntailmentClass source;
    std::vector<Formula> premises;
    Formula conclusion;
    std::optional<std::string> fresh;
};

bool has_reduction(const EntailmentClass& cls);

ReductionRecipe reduce_ginv(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls);
ReductionRecipe reduce_g2(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls);
ReductionRecipe reduce(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls);

struct ReductionCheck {
    ReductionRecipe recipe;
    Verdict filter_side;  // decide_entailment on the canonical representative
    Verdict order_side;   // decide_order_entailment on the recipe
    bool agree() const { return filter_side.holds == order_side.holds; }
};

ReductionCheck check_reduction(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls,
                               const DecisionOptions& opts = {});
bool verify_reduction(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls,
                      Language lang, const DecisionOptions& opts = {});

}  // namespace fillog
