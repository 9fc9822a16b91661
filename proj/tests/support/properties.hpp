#pragma once

// Randomized invariant checks shared by the property tests and the acceptance
// runner. Each returns how many cases ran and the first few failures.

#include "fillog/decision.hpp"
#include "fillog/generate.hpp"
#include "fillog/semantics.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace props {

using namespace fillog;

struct Outcome {
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string msg) {
        if (failures.size() < 5) failures.push_back(std::move(msg));
        else if (failures.size() == 5) failures.push_back("...");
    }
};

inline UnitRational point_value(const SymbolicPoint& s, const Valuation& v) {
    switch (s.tag) {
        case SymbolicPoint::Tag::Const: return s.value;
        case SymbolicPoint::Tag::Var: return std::get<Valuation1>(v).at(s.var);
        case SymbolicPoint::Tag::Mirror: return std::get<Valuation1>(v).at(s.var).complement();
        case SymbolicPoint::Tag::Coord: {
            const auto& p = std::get<Valuation2>(v).at(s.var);
            return s.coord == 1 ? p.first : p.second;
        }
    }
    return {};
}

// Every value produced by evaluation is a variable value, a mirror (Ginv), or 0/1.
inline Outcome value_closure(std::uint64_t seed, std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (; o.cases < n; ++o.cases) {
        const Language lang = static_cast<Language>(o.cases % 3);
        const Formula f = random_formula(rng, lang, corpus::pqr(), 5);
        const Valuation v = corpus::random_valuation(rng, lang, corpus::pqr());
        std::set<UnitRational> allowed{UnitRational::zero(), UnitRational::one()};
        const auto vars = f.variables();
        if (lang == Language::Gsquare) {
            for (const auto& x : vars) {
                allowed.insert(std::get<Valuation2>(v).at(x).first);
                allowed.insert(std::get<Valuation2>(v).at(x).second);
            }
            const ValuePair r = eval_g2(f, std::get<Valuation2>(v));
            if (!allowed.count(r.first) || !allowed.count(r.second)) o.fail(print(f) + " under " + to_string(v));
        } else {
            for (const auto& x : vars) {
                allowed.insert(std::get<Valuation1>(v).at(x));
                if (lang == Language::Ginv) allowed.insert(std::get<Valuation1>(v).at(x).complement());
            }
            if (!allowed.count(std::get<UnitRational>(eval(f, v, lang)))) o.fail(print(f) + " under " + to_string(v));
        }
    }
    return o;
}

// eval(f, v*) = <1-y, 1-x> where eval(f, v) = <x, y>; and D, D* induce the same entailment.
inline Outcome conflation(std::uint64_t seed, std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i, ++o.cases) {
        const Formula f = random_formula(rng, Language::Gsquare, corpus::pqr(), 5);
        const auto v = std::get<Valuation2>(corpus::random_valuation(rng, Language::Gsquare, corpus::pqr()));
        if (eval_g2(f, conflate(v)) != conflate(eval_g2(f, v))) o.fail(print(f) + " under " + to_string(Valuation{v}));
    }
    for (std::size_t i = 0; i < n / 4; ++i, ++o.cases) {
        const auto q = corpus::random_query(rng, Language::Gsquare, corpus::pq(), 3);
        const Filter d = random_filter(rng, Language::Gsquare, 4);
        const Filter star = conflate(std::get<FilterJoin>(d));
        if (decide_entailment(q.gamma, q.chi, d, Language::Gsquare).holds !=
            decide_entailment(q.gamma, q.chi, star, Language::Gsquare).holds)
            o.fail(print(q.chi) + " under " + to_string(d));
    }
    return o;
}

inline Outcome nnf_soundness(std::uint64_t seed, std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (; o.cases < n; ++o.cases) {
        const Language lang = o.cases % 2 ? Language::Ginv : Language::Gsquare;
        const Formula f = random_formula(rng, lang, corpus::pqr(), 5);
        const Formula g = lang == Language::Ginv ? nnf_ginv(f) : nnf_g2(f);
        const Valuation v = corpus::random_valuation(rng, lang, corpus::pqr());
        if (eval(f, v, lang) != eval(g, v, lang)) o.fail(print(f) + " vs " + print(g));
    }
    return o;
}

struct Setting {
    Language lang;
    std::vector<std::string> vars;
    std::vector<UnitRational> consts;
};

inline std::vector<Setting> enumeration_settings() {
    using R = UnitRational;
    return {
        {Language::BiG, {"p", "q", "r"}, {}},
        {Language::BiG, {"p", "q"}, {R(1, 3)}},
        {Language::Ginv, {"p", "q"}, {}},
        {Language::Ginv, {"p", "q"}, {R(1, 3)}},
        {Language::Ginv, {"p", "q", "r"}, {}},
        {Language::Gsquare, {"p", "q"}, {}},
        {Language::Gsquare, {"p", "q"}, {R(1, 2)}},
        {Language::Gsquare, {"p"}, {R(1, 3), R(2, 3)}},
    };
}

inline Outcome abstract_realize_identity() {
    Outcome o;
    for (const auto& s : enumeration_settings()) {
        const auto consts = normalize_constants(s.lang, s.consts);
        enumerate_configs(s.vars, s.lang, consts, [&](const OrderConfig& cfg) {
            ++o.cases;
            if (!(abstract(realize(cfg), s.vars, s.lang, consts) == cfg)) o.fail(cfg.str());
            return true;
        });
    }
    return o;
}

// Every 2-variable config against a batch of depth-<=4 formulas: the symbolic
// point's concrete value equals direct evaluation under the realized valuation.
inline Outcome symbolic_concrete(std::uint64_t seed, std::size_t formulas_per_lang) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (Language lang : {Language::BiG, Language::Ginv, Language::Gsquare}) {
        std::vector<Formula> fs;
        for (std::size_t i = 0; i < formulas_per_lang; ++i) fs.push_back(random_formula(rng, lang, corpus::pq(), 4));
        const auto consts = normalize_constants(lang, {UnitRational(1, 3)});
        enumerate_configs(corpus::pq(), lang, consts, [&](const OrderConfig& cfg) {
            const Valuation v = realize(cfg);
            for (const auto& f : fs) {
                ++o.cases;
                if (lang == Language::Gsquare) {
                    const auto [a, b] = symbolic_eval_g2(f, cfg);
                    const ValuePair want = eval_g2(f, std::get<Valuation2>(v));
                    if (point_value(a, v) != want.first || point_value(b, v) != want.second)
                        o.fail(print(f) + " at " + cfg.str());
                } else if (point_value(symbolic_eval(f, cfg), v) != std::get<UnitRational>(eval(f, v, lang))) {
                    o.fail(print(f) + " at " + cfg.str());
                }
            }
            return true;
        });
    }
    return o;
}

inline Outcome matrix_infimum(std::uint64_t seed, std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (; o.cases < n; ++o.cases) {
        const Language lang = corpus::random_language(rng);
        const auto q = corpus::random_query(rng, lang, corpus::pq(), 3, 4);
        const Filter d = random_filter(rng, lang, 4);
        const Verdict a = decide_entailment(q.gamma, q.chi, d, lang, {kDefaultMaxVars, MembershipMode::Infimum});
        const Verdict b = decide_entailment(q.gamma, q.chi, d, lang, {kDefaultMaxVars, MembershipMode::Matrix});
        if (a.holds != b.holds) o.fail(print(q.chi) + " under " + to_string(d));
    }
    return o;
}

// Re-evaluates every reported counterexample with the integer reference evaluator.
inline bool reference_recheck(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                              const Valuation& w) {
    std::int64_t n = 1;
    for (const auto& b : oracle::filter_bounds(d)) n = std::lcm(n, b.denominator());
    auto scale = [&](const UnitRational& r) { return r.numerator() * (n / r.denominator()); };
    if (const auto* v2 = std::get_if<Valuation2>(&w)) {
        for (const auto& [k, p] : *v2) n = std::lcm(n, std::lcm(p.first.denominator(), p.second.denominator()));
        oracle::Grid2 g;
        for (const auto& [k, p] : *v2) g[k] = {scale(p.first), scale(p.second)};
        const auto gf = oracle::grid_filter(d, n);
        oracle::Pair inf{n, 0};
        for (const auto& f : gamma) {
            const auto a = oracle::eval2(f, g, n);
            inf = {std::min(inf.t, a.t), std::max(inf.f, a.f)};
        }
        return gf.member(inf) && !gf.member(oracle::eval2(chi, g, n));
    }
    const auto& v1 = std::get<Valuation1>(w);
    for (const auto& [k, x] : v1) n = std::lcm(n, x.denominator());
    if (lang == Language::Ginv) n = std::lcm(n, std::int64_t{2});
    oracle::Grid1 g;
    for (const auto& [k, x] : v1) g[k] = scale(x);
    const auto gf = oracle::grid_filter(d, n);
    std::int64_t inf = n;
    for (const auto& f : gamma) inf = std::min(inf, oracle::eval1(f, g, n));
    return gf.member(inf) && !gf.member(oracle::eval1(chi, g, n));
}

inline Outcome witness_recheck(std::uint64_t seed, std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::size_t attempts = 0;
    while (o.cases < n && attempts < 50 * n) {
        ++attempts;
        const Language lang = corpus::random_language(rng);
        const auto q = corpus::random_query(rng, lang, corpus::pqr(), 3, 3);
        const Filter d = random_filter(rng, lang, 4);
        const Verdict v = decide_entailment(q.gamma, q.chi, d, lang);
        if (v.holds != !v.witness.has_value()) o.fail("witness presence mismatch for " + print(q.chi));
        if (v.holds) continue;
        ++o.cases;
        if (!is_counterexample(q.gamma, q.chi, d, lang, *v.witness) ||
            !reference_recheck(q.gamma, q.chi, d, lang, *v.witness))
            o.fail(print(q.chi) + " under " + to_string(d) + " at " + to_string(*v.witness));
    }
    if (o.cases < n) o.fail("too few failing queries generated");
    return o;
}

}  // namespace props
