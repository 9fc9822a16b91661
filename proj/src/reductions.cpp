#include "fillog/reductions.hpp"

#include <set>

namespace fillog {

namespace {

using namespace fml;

std::string pick_fresh(const std::vector<Formula>& gamma, const Formula& chi) {
    std::set<std::string> used;
    for (const auto& g : gamma) g.collect_variables(used);
    chi.collect_variables(used);
    return fresh_variable(used);
}

void check_all(const std::vector<Formula>& gamma, const Formula& chi, Language lang) {
    for (const auto& g : gamma) require_language(g, lang);
    require_language(chi, lang);
}

[[noreturn]] void no_recipe(const EntailmentClass& cls) {
    throw ReductionError("no reduction to order entailment for " + to_string(cls.lang) + " class " + cls.name());
}

}  // namespace

bool has_reduction(const EntailmentClass& cls) {
    switch (cls.lang) {
        case Language::Ginv:
            return cls.id == ClassId::One || cls.id == ClassId::UpperOpen || cls.id == ClassId::HalfClosed ||
                   cls.id == ClassId::LowerOpen;
        case Language::Gsquare:
            return cls.id == ClassId::OneZero || cls.id == ClassId::OneOne || cls.id == ClassId::OneDim ||
                   cls.id == ClassId::NonParaconsistent || cls.id == ClassId::Diagonal ||
                   cls.id == ClassId::Paraconsistent;
        case Language::BiG: return false;
    }
    return false;
}

ReductionRecipe reduce_ginv(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls) {
    if (cls.lang != Language::Ginv || !has_reduction(cls)) no_recipe(cls);
    check_all(gamma, chi, Language::Ginv);
    ReductionRecipe r{cls, {}, chi, std::nullopt};
    if (cls.id == ClassId::One) {
        for (const auto& g : gamma) r.premises.push_back(delta(g));
        return r;
    }
    std::string name = pick_fresh(gamma, chi);
    Formula p = var(name);
    r.fresh = name;
    for (const auto& g : gamma) r.premises.push_back(delta(impl(p, g)));
    switch (cls.id) {
        case ClassId::UpperOpen: r.premises.push_back(neg(delta(impl(p, ineg(p))))); break;
        case ClassId::HalfClosed: r.premises.push_back(delta(iff(p, ineg(p)))); break;
        default: r.premises.push_back(neg(delta(impl(ineg(p), p)))); break;  // LowerOpen
    }
    r.conclusion = delta(impl(p, chi));
    return r;
}

ReductionRecipe reduce_g2(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls) {
    if (cls.lang != Language::Gsquare || !has_reduction(cls)) no_recipe(cls);
    check_all(gamma, chi, Language::Gsquare);
    ReductionRecipe r{cls, {}, chi, std::nullopt};
    if (cls.id == ClassId::OneZero || cls.id == ClassId::OneOne) {
        for (const auto& g : gamma) r.premises.push_back(cls.id == ClassId::OneZero ? delta_top(g) : delta(g));
        return r;
    }
    std::string name = pick_fresh(gamma, chi);
    Formula p = var(name);
    r.fresh = name;
    for (const auto& g : gamma) r.premises.push_back(delta_top(impl(p, g)));
    auto& m = r.premises;
    switch (cls.id) {
        case ClassId::OneDim:
            m.push_back(delta_top(impl(sneg(p), p)));
            m.push_back(neg(delta_top(impl(p, sneg(p)))));
            m.push_back(iff(delta(p), sneg(delta(p))));
            break;
        case ClassId::NonParaconsistent:
            m.push_back(delta_top(impl(sneg(p), p)));
            m.push_back(neg(delta_top(impl(p, sneg(p)))));
            m.push_back(neg(delta(p)));
            break;
        case ClassId::Diagonal:
            m.push_back(delta_top(iff(sneg(p), p)));
            m.push_back(neg(delta(p)));
            break;
        default:  // Paraconsistent
            m.push_back(neg(delta_top(impl(sneg(p), p))));
            m.push_back(delta_top(impl(p, sneg(p))));
            m.push_back(neg(delta(p)));
            break;
    }
    r.conclusion = delta_top(impl(p, chi));
    return r;
}

ReductionRecipe reduce(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls) {
    switch (cls.lang) {
        case Language::Ginv: return reduce_ginv(gamma, chi, cls);
        case Language::Gsquare: return reduce_g2(gamma, chi, cls);
        case Language::BiG: break;
    }
    no_recipe(cls);
}

ReductionCheck check_reduction(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls,
                               const DecisionOptions& opts) {
    ReductionRecipe recipe = reduce(gamma, chi, cls);
    DecisionOptions wide = opts;
    if (recipe.fresh) wide.max_vars = opts.max_vars + 1;
    Verdict left = decide_entailment(gamma, chi, canonical_representative(cls), cls.lang, opts);
    Verdict right = decide_order_entailment(recipe.premises, recipe.conclusion, cls.lang, wide);
    return {std::move(recipe), std::move(left), std::move(right)};
}

bool verify_reduction(const std::vector<Formula>& gamma, const Formula& chi, const EntailmentClass& cls,
                      Language lang, const DecisionOptions& opts) {
    if (cls.lang != lang) throw ReductionError("class " + cls.name() + " is not a " + to_string(lang) + " class");
    return check_reduction(gamma, chi, cls, opts).agree();
}

}  // namespace fillog
