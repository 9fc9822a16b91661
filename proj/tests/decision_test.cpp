#include "fillog/decision.hpp"
#include "fillog/generate.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fillog;
using R = UnitRational;

namespace {

std::vector<Formula> premises(std::initializer_list<const char*> texts) {
    std::vector<Formula> out;
    for (const char* t : texts) out.push_back(parse(t));
    return out;
}

std::size_t count(const std::vector<std::string>& vars, Language lang, std::vector<R> consts) {
    return all_configs(vars, lang, normalize_constants(lang, std::move(consts))).size();
}

}  // namespace

TEST(Constants, Normalization) {
    const auto c = normalize_constants(Language::Ginv, {R(1, 3)});
    EXPECT_EQ(c, (std::vector<R>{R(0), R(1, 3), R(1, 2), R(2, 3), R(1)}));
    EXPECT_EQ(normalize_constants(Language::BiG, {R(1, 3), R(1, 3), R(1)}), (std::vector<R>{R(0), R(1, 3), R(1)}));
    EXPECT_EQ(normalize_constants(Language::Gsquare, {}), (std::vector<R>{R(0), R(1)}));
}

TEST(Abstract, Examples) {
    const auto ginv = normalize_constants(Language::Ginv, {});
    EXPECT_EQ(abstract(Valuation1{{"p", R(2, 3)}}, {"p"}, Language::Ginv, ginv).str(), "0 < 1-v(p) < 1/2 < v(p) < 1");
    EXPECT_EQ(abstract(Valuation2{{"p", {R(1), R(1, 4)}}}, {"p"}, Language::Gsquare, {R(0), R(1)}).str(),
              "0 < v2(p) < 1 = v1(p)");
    const auto half = abstract(Valuation1{{"p", R(1, 2)}}, {"p"}, Language::Ginv, ginv);
    EXPECT_EQ(half.rank_of(SymbolicPoint::variable("p")), half.const_rank(R::half()));
    EXPECT_EQ(half.rank_of(SymbolicPoint::mirror("p")), half.const_rank(R::half()));
}

TEST(Realize, Examples) {
    const auto ginv = normalize_constants(Language::Ginv, {});
    const auto low = abstract(Valuation1{{"p", R(1, 5)}}, {"p"}, Language::Ginv, ginv);
    EXPECT_EQ(std::get<Valuation1>(realize(low)).at("p"), R(1, 4));
    const auto g2 = abstract(Valuation2{{"p", {R(1, 2), R(1, 5)}}}, {"p"}, Language::Gsquare,
                             normalize_constants(Language::Gsquare, {R(2, 3)}));
    EXPECT_EQ(g2.str(), "0 < v2(p) < v1(p) < 2/3 < 1");
    const auto v = std::get<Valuation2>(realize(g2)).at("p");
    EXPECT_EQ(v.first, R(4, 9));
    EXPECT_EQ(v.second, R(2, 9));
    const auto half = abstract(Valuation1{{"p", R(1, 2)}}, {"p"}, Language::Ginv, ginv);
    EXPECT_EQ(std::get<Valuation1>(realize(half)).at("p"), R::half());
}

TEST(Enumerate, SpecifiedCounts) {
    EXPECT_EQ(count({}, Language::Gsquare, {}), 1u);
    EXPECT_EQ(count({"p"}, Language::Gsquare, {}), 11u);
    EXPECT_EQ(count({"p"}, Language::Ginv, {}), 5u);
    EXPECT_EQ(count({"p"}, Language::BiG, {}), 3u);
    EXPECT_EQ(count({"p", "q"}, Language::BiG, {}), 11u);
}

TEST(Enumerate, CountsMatchGenerateAndFilter) {
    // biG and G2: unconstrained points over a chain; G2 has two points per variable.
    for (std::size_t chain : {2u, 3u, 4u})
        for (std::size_t vars : {1u, 2u, 3u}) {
            std::vector<R> consts;
            for (std::size_t i = 1; i + 1 < chain; ++i) consts.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(chain - 1));
            const std::vector<std::string> names(corpus::pqr().begin(), corpus::pqr().begin() + vars);
            EXPECT_EQ(count(names, Language::BiG, consts), oracle::count_weak_orders(chain, vars, false))
                << chain << " " << vars;
            if (2 * vars + chain <= 8)
                EXPECT_EQ(count(names, Language::Gsquare, consts), oracle::count_weak_orders(chain, 2 * vars, false))
                    << chain << " " << vars;
        }
    // Ginv: chains closed under 1-c, points paired with their mirrors.
    EXPECT_EQ(count({"p"}, Language::Ginv, {}), oracle::count_weak_orders(3, 2, true));
    EXPECT_EQ(count({"p", "q"}, Language::Ginv, {}), oracle::count_weak_orders(3, 4, true));
    EXPECT_EQ(count({"p"}, Language::Ginv, {R(1, 3)}), oracle::count_weak_orders(5, 2, true));
    EXPECT_EQ(count({"p"}, Language::Ginv, {R(1, 4)}), oracle::count_weak_orders(5, 2, true));}

TEST(Enumerate, EveryConfigSatisfiesMirrorConstraint) {
    const auto configs = all_configs({"p", "q"}, Language::Ginv, normalize_constants(Language::Ginv, {R(1, 3)}));
    std::set<std::vector<int>> seen;
    for (const auto& c : configs) {
        EXPECT_TRUE(seen.insert(c.ranks()).second);
        const auto pts = c.points();
        auto mirror = [](const SymbolicPoint& s) {
            switch (s.tag) {
                case SymbolicPoint::Tag::Var: return SymbolicPoint::mirror(s.var);
                case SymbolicPoint::Tag::Mirror: return SymbolicPoint::variable(s.var);
                default: return SymbolicPoint::constant(s.value.complement());
            }
        };
        for (const auto& a : pts)
            for (const auto& b : pts)
                EXPECT_EQ(c.rank_of(a) <= c.rank_of(b), c.rank_of(mirror(b)) <= c.rank_of(mirror(a)));
    }
}

TEST(Enumerate, VariableLimit) {
    EXPECT_THROW(all_configs({"a", "b", "c", "d", "e"}, Language::BiG, {R(0), R(1)}), BudgetExceeded);
    EXPECT_NO_THROW(all_configs({"a", "b", "c", "d", "e"}, Language::BiG, {R(0), R(1)}, 5));
    EXPECT_THROW(decide_entailment({}, parse("a & b & c & d & e"), parse_filter("[1,1]"), Language::BiG),
                 BudgetExceeded);
}

TEST(SymbolicEval, Examples) {
    const auto consts = normalize_constants(Language::Ginv, {});
    const auto cfg = abstract(Valuation1{{"p", R(3, 4)}, {"q", R(1, 4)}}, {"p", "q"}, Language::Ginv, consts);
    EXPECT_EQ(symbolic_eval(parse("p -> q"), cfg), SymbolicPoint::variable("q"));
    EXPECT_EQ(symbolic_eval(parse("q -> p"), cfg), SymbolicPoint::constant(R::one()));
    EXPECT_EQ(symbolic_eval(parse("-p"), cfg), SymbolicPoint::mirror("p"));
    EXPECT_EQ(symbolic_eval(parse("p -< q"), cfg), SymbolicPoint::variable("p"));
    EXPECT_EQ(symbolic_eval(parse("~p"), cfg), SymbolicPoint::constant(R::zero()));
    const auto g2 = abstract(Valuation2{{"p", {R(1, 3), R(2, 3)}}}, {"p"}, Language::Gsquare, {R(0), R(1)});
    const auto [a, b] = symbolic_eval_g2(parse("!p"), g2);
    EXPECT_EQ(a, SymbolicPoint::coordinate("p", 2));
    EXPECT_EQ(b, SymbolicPoint::coordinate("p", 1));
}

TEST(DecideEntailment, Examples) {
    const Verdict a = decide_entailment(premises({"p & ~Dp"}), parse("q"), parse_filter("[1,1]"), Language::Ginv);
    EXPECT_TRUE(a.holds);
    EXPECT_FALSE(a.witness.has_value());
    EXPECT_EQ(a.class_used->name(), "one");

    const Verdict b = decide_entailment(premises({"p & -p"}), parse("q"), parse_filter("[1/4,1]"), Language::Ginv);
    ASSERT_FALSE(b.holds);
    const auto& w = std::get<Valuation1>(*b.witness);
    EXPECT_EQ(w.at("p"), R::half());
    EXPECT_EQ(w.at("q"), R::zero());

    const Verdict c = decide_entailment(premises({"p", "!p"}), parse("q"), parse_filter("bi[1/2,1/2]"), Language::Gsquare);
    ASSERT_FALSE(c.holds);
    EXPECT_EQ(std::get<Valuation2>(*c.witness).at("p"), (ValuePair{R::half(), R::half()}));

    EXPECT_TRUE(decide_entailment(premises({"p -< q", "q"}), parse("r"), parse_filter("bi[1,1/2]"), Language::Gsquare).holds);
}

TEST(DecideEntailment, CarrierAndLanguageChecks) {
    EXPECT_THROW(decide_entailment({}, parse("p"), parse_filter("[1/2,1]"), Language::Gsquare), FilterError);
    EXPECT_THROW(decide_entailment({}, parse("-p"), parse_filter("[1/2,1]"), Language::BiG), LanguageError);
}

TEST(DecideOrderEntailment, Examples) {
    EXPECT_FALSE(decide_order_entailment(premises({"p & ~Dp"}), parse("q"), Language::BiG).holds);
    // Premise 1 and conclusion 2/3 at p=2/3, q=1/2.
    EXPECT_FALSE(decide_order_entailment(premises({"~D((p | -p) -> (q | -q))"}), parse("p | -p"), Language::Ginv).holds);
    for (Language lang : {Language::BiG, Language::Ginv, Language::Gsquare})
        EXPECT_TRUE(decide_order_entailment(premises({"p"}), parse("p"), lang).holds);
    const Verdict v = decide_order_entailment(premises({"p"}), parse("!!p & ~!p"), Language::Gsquare);
    ASSERT_FALSE(v.holds);
    EXPECT_TRUE(is_order_counterexample(premises({"p"}), parse("!!p & ~!p"), Language::Gsquare, *v.witness));
}

TEST(CheckValidity, Battery) {
    EXPECT_TRUE(check_validity(parse("(p -> q) | (q -> p)"), Language::BiG));
    EXPECT_TRUE(check_validity(parse("(p -> q) | (q -> p)"), Language::Ginv));
    EXPECT_TRUE(check_validity(parse("(p -> q) | (q -> p)"), Language::Gsquare));
    EXPECT_FALSE(check_validity(parse("p | ~p"), Language::BiG));
    EXPECT_FALSE(check_validity(parse("p | ~p"), Language::Gsquare));
    EXPECT_TRUE(check_validity(parse("(p & -p) -> (q | -q)"), Language::Ginv));
    EXPECT_FALSE(check_validity(parse("(p & !p) -> (q | !q)"), Language::Gsquare));
    EXPECT_FALSE(check_validity(parse("~~(p | !p)"), Language::Gsquare));
    EXPECT_TRUE(check_validity(parse("p -> p"), Language::Gsquare));
    EXPECT_TRUE(check_validity(parse("1"), Language::BiG));
}

TEST(GridOracle, Examples) {
    const Verdict a = decide_entailment_grid(premises({"p & -p"}), parse("q"), parse_filter("[1/4,1]"), Language::Ginv, 4);
    ASSERT_FALSE(a.holds);
    // First grid point in enumeration order with p & -p >= 1/4 and q < 1/4.
    EXPECT_EQ(std::get<Valuation1>(*a.witness).at("p"), R(1, 4));
    EXPECT_EQ(std::get<Valuation1>(*a.witness).at("q"), R::zero());
    EXPECT_TRUE(is_counterexample(premises({"p & -p"}), parse("q"), parse_filter("[1/4,1]"), Language::Ginv, *a.witness));
    for (Language lang : {Language::BiG, Language::Ginv})
        EXPECT_TRUE(decide_entailment_grid(premises({"p"}), parse("p"), parse_filter("[1/2,1]"), lang, 2).holds);
    EXPECT_TRUE(decide_entailment_grid(premises({"p"}), parse("p"), parse_filter("bi[1/2,1/2]"), Language::Gsquare, 2).holds);
    EXPECT_TRUE(decide_entailment_grid(premises({"p", "~Tp"}), parse("q"), parse_filter("bi[1,0]"), Language::Gsquare, 2).holds);
    EXPECT_THROW(decide_entailment_grid(premises({"p", "q"}), parse("r"), parse_filter("bi[1,0]"), Language::Gsquare, 12, 1000),
                 BudgetExceeded);
}

TEST(DecideEntailment, MatchesCompleteGridSearch) {
    std::mt19937_64 rng(41);
    int g2_two_vars = 0;
    for (int i = 0; i < 1200; ++i) {
        const Language lang = corpus::random_language(rng);
        const bool small = lang == Language::Gsquare && g2_two_vars >= 120;
        const auto& vars = small ? std::vector<std::string>{"p"} : corpus::pq();
        const auto q = corpus::random_query(rng, lang, vars, 3);
        const Filter d = random_filter(rng, lang, 3);
        if (lang == Language::Gsquare && oracle::vars_of(q.gamma, q.chi).size() == 2) ++g2_two_vars;
        const Verdict v = decide_entailment(q.gamma, q.chi, d, lang);
        const auto ref = oracle::complete_search(q.gamma, q.chi, d, lang);
        ASSERT_EQ(v.holds, !ref.has_value()) << print(q.chi) << " under " << to_string(d);
        if (ref) EXPECT_TRUE(is_counterexample(q.gamma, q.chi, d, lang, oracle::to_valuation(*ref, lang)));
    }
}

TEST(DecideEntailment, MonotoneFilterStrength) {
    // Filters of one class give identical verdicts, nested or not.
    std::mt19937_64 rng(42);
    const std::vector<R> bounds{R(0), R(1, 4), R(1, 3), R(1, 2), R(2, 3), R(3, 4), R(1)};
    for (Language lang : {Language::BiG, Language::Ginv, Language::Gsquare}) {
        const auto family = filter_family(lang, bounds);
        for (int i = 0; i < 150; ++i) {
            const auto q = corpus::random_query(rng, lang, corpus::pq(), 3);
            std::map<std::string, bool> by_class;
            for (const auto& d : family) {
                const bool holds = decide_entailment(q.gamma, q.chi, d, lang).holds;
                const auto [it, fresh] = by_class.emplace(classify(d, lang).name(), holds);
                EXPECT_TRUE(fresh || it->second == holds) << print(q.chi) << " " << to_string(d);
            }
        }
    }
}

TEST(DecideEntailment, DeterministicWitness) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const Language lang = corpus::random_language(rng);
        const auto q = corpus::random_query(rng, lang, corpus::pq(), 3);
        const Filter d = random_filter(rng, lang, 4);
        const Verdict a = decide_entailment(q.gamma, q.chi, d, lang);
        const Verdict b = decide_entailment(q.gamma, q.chi, d, lang);
        EXPECT_EQ(a.holds, b.holds);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.configs_checked, b.configs_checked);
    }
}

TEST(QueryVariables, SortedUnion) {
    EXPECT_EQ(query_variables(premises({"r & p"}), parse("q | p")), (std::vector<std::string>{"p", "q", "r"}));
    EXPECT_TRUE(query_variables({}, parse("1")).empty());
}
