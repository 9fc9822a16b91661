#include "fillog/reductions.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fillog;
namespace f = fillog::fml;

namespace {

EntailmentClass cls(Language lang, const char* name) { return parse_class(lang, name); }

std::vector<Formula> parsed(std::initializer_list<const char*> texts) {
    std::vector<Formula> out;
    for (const char* t : texts) out.push_back(parse(t));
    return out;
}

std::vector<EntailmentClass> reducible(Language lang) {
    std::vector<EntailmentClass> out;
    for (const auto& c : all_classes(lang))
        if (has_reduction(c)) out.push_back(c);
    return out;
}

bool crisp(const Value& v) {
    auto c = [](const UnitRational& r) { return r.is_zero() || r.is_one(); };
    if (auto* p = std::get_if<ValuePair>(&v)) return c(p->first) && c(p->second);
    return c(std::get<UnitRational>(v));
}

}  // namespace

TEST(Recipes, Availability) {
    EXPECT_EQ(reducible(Language::Ginv).size(), 4u);
    EXPECT_EQ(reducible(Language::Gsquare).size(), 6u);
    EXPECT_TRUE(reducible(Language::BiG).empty());
    for (const char* name : {"half-open", "no-zero"})
        EXPECT_THROW(reduce({}, parse("q"), cls(Language::Ginv, name)), ReductionError) << name;
    for (const char* name : {"order", "sharp-one-one", "open-top", "edge-half", "edge-open"})
        EXPECT_THROW(reduce({}, parse("q"), cls(Language::Gsquare, name)), ReductionError) << name;
    EXPECT_THROW(reduce({}, parse("q"), cls(Language::BiG, "one")), ReductionError);
    EXPECT_THROW(reduce({parse("!q")}, parse("q"), cls(Language::Ginv, "one")), LanguageError);
    EXPECT_THROW(verify_reduction({}, parse("q"), cls(Language::Ginv, "one"), Language::Gsquare), ReductionError);
}

TEST(Recipes, GinvShapes) {
    const auto one = reduce_ginv(parsed({"q"}), parse("q"), cls(Language::Ginv, "one"));
    EXPECT_EQ(one.premises, parsed({"Dq"}));
    EXPECT_EQ(one.conclusion, parse("q"));
    EXPECT_FALSE(one.fresh.has_value());

    const auto low = reduce_ginv(parsed({"p & q"}), parse("q"), cls(Language::Ginv, "lower-open"));
    ASSERT_EQ(low.fresh, "_t0");
    EXPECT_EQ(low.premises, parsed({"D(_t0 -> p & q)", "~D(-_t0 -> _t0)"}));
    EXPECT_EQ(low.conclusion, parse("D(_t0 -> q)"));

    const auto up = reduce_ginv(parsed({"p"}), parse("q"), cls(Language::Ginv, "upper-open"));
    EXPECT_EQ(up.premises, parsed({"D(_t0 -> p)", "~D(_t0 -> -_t0)"}));

    const auto half = reduce_ginv({}, parse("q | -q"), cls(Language::Ginv, "half-closed"));
    EXPECT_EQ(half.premises, parsed({"D(_t0 <-> -_t0)"}));
    EXPECT_EQ(half.conclusion, parse("D(_t0 -> (q | -q))"));
}

TEST(Recipes, G2Shapes) {
    const auto oz = reduce_g2(parsed({"q"}), parse("q"), cls(Language::Gsquare, "one-zero"));
    EXPECT_EQ(oz.premises, parsed({"Tq"}));
    EXPECT_EQ(oz.conclusion, parse("q"));
    const auto oo = reduce_g2(parsed({"q"}), parse("q"), cls(Language::Gsquare, "one-one"));
    EXPECT_EQ(oo.premises, parsed({"Dq"}));

    const auto od = reduce_g2(parsed({"p"}), parse("q"), cls(Language::Gsquare, "one-dim"));
    EXPECT_EQ(od.premises, parsed({"T(_t0 -> p)", "T(!_t0 -> _t0)", "~T(_t0 -> !_t0)", "D_t0 <-> !D_t0"}));
    EXPECT_EQ(od.conclusion, parse("T(_t0 -> q)"));

    const auto diag = reduce_g2(parsed({"p"}), parse("q"), cls(Language::Gsquare, "diagonal"));
    EXPECT_EQ(diag.premises, parsed({"T(_t0 -> p)", "T(!_t0 <-> _t0)", "~D_t0"}));

    const auto np = reduce_g2(parsed({"p"}), parse("q"), cls(Language::Gsquare, "non-paraconsistent"));
    EXPECT_EQ(np.premises, parsed({"T(_t0 -> p)", "T(!_t0 -> _t0)", "~T(_t0 -> !_t0)", "~D_t0"}));

    const auto pc = reduce_g2(parsed({"p"}), parse("q"), cls(Language::Gsquare, "paraconsistent"));
    EXPECT_EQ(pc.premises, parsed({"T(_t0 -> p)", "~T(!_t0 -> _t0)", "T(_t0 -> !_t0)", "~D_t0"}));
}

TEST(Recipes, FreshnessAvoidsQueryVariables) {
    const auto r = reduce_ginv(parsed({"_t0 & p"}), parse("_t1"), cls(Language::Ginv, "half-closed"));
    ASSERT_TRUE(r.fresh.has_value());
    EXPECT_EQ(*r.fresh, "_t2");
    std::mt19937_64 rng(51);
    for (int i = 0; i < 300; ++i) {
        const Language lang = i % 2 ? Language::Ginv : Language::Gsquare;
        const auto q = corpus::random_query(rng, lang, {"p", "_t0", "_t1"}, 3);
        for (const auto& c : reducible(lang)) {
            const auto rec = reduce(q.gamma, q.chi, c);
            std::set<std::string> before = q.chi.variables();
            for (const auto& g : q.gamma) g.collect_variables(before);
            std::set<std::string> after = rec.conclusion.variables();
            for (const auto& g : rec.premises) g.collect_variables(after);
            if (rec.fresh) {
                EXPECT_FALSE(before.count(*rec.fresh));
                after.erase(*rec.fresh);
            }
            for (const auto& v : after) EXPECT_TRUE(before.count(v)) << v;
        }
    }
}

TEST(Recipes, SpecifiedEquivalences) {
    EXPECT_TRUE(verify_reduction(parsed({"p & -p"}), parse("q"), cls(Language::Ginv, "lower-open"), Language::Ginv));
    const auto check = check_reduction(parsed({"p & -p"}), parse("q"), cls(Language::Ginv, "lower-open"));
    EXPECT_FALSE(check.filter_side.holds);
    EXPECT_FALSE(check.order_side.holds);
    EXPECT_TRUE(verify_reduction(parsed({"q"}), parse("q"), cls(Language::Ginv, "one"), Language::Ginv));
}

TEST(Recipes, EquivalenceOnRandomQueries) {
    std::mt19937_64 rng(52);
    for (Language lang : {Language::Ginv, Language::Gsquare}) {
        for (int i = 0; i < 60; ++i) {
            const auto q = corpus::random_query(rng, lang, corpus::pq(), 3);
            for (const auto& c : reducible(lang)) {
                const auto check = check_reduction(q.gamma, q.chi, c);
                EXPECT_TRUE(check.agree()) << c.name() << ": " << print(q.chi);
                if (!check.order_side.holds)
                    EXPECT_TRUE(is_order_counterexample(check.recipe.premises, check.recipe.conclusion, lang,
                                                        *check.order_side.witness));
            }
        }
    }
}

// The diagonal markers admit a fresh value of <0,0>, whose upset behaves like
// <1,1>^ rather than a diagonal filter. This query exposes the gap.
TEST(Recipes, DiagonalMarkersAdmitOrigin) {
    const auto gamma = parsed({"p & q | (p | p) -< (p | p -< p | p)", "1 & (q | p) & D!p"});
    const Formula chi = parse("!(q -< p | p)");
    const auto check = check_reduction(gamma, chi, cls(Language::Gsquare, "diagonal"));
    EXPECT_TRUE(check.filter_side.holds);
    ASSERT_FALSE(check.order_side.holds);
    const auto& w = std::get<Valuation2>(*check.order_side.witness);
    EXPECT_EQ(w.at(*check.recipe.fresh), (ValuePair{UnitRational::zero(), UnitRational::zero()}));
    EXPECT_FALSE(decide_entailment(gamma, chi, parse_filter("bi[0,0]"), Language::Gsquare).holds);
}

TEST(Markers, TwoValuedUnderAllValuations) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 1200; ++i) {
        const Language lang = i % 2 ? Language::Ginv : Language::Gsquare;
        const Formula g = random_formula(rng, lang, corpus::pq(), 3);
        const Valuation v = corpus::random_valuation(rng, lang, corpus::pq());
        std::vector<Formula> markers{f::delta(g), f::neg(f::delta(g))};
        if (lang == Language::Gsquare) {
            const Formula p = f::var("p");
            markers.push_back(f::delta_top(g));
            markers.push_back(f::neg(f::delta_top(g)));
            markers.push_back(f::iff(f::delta(p), f::sneg(f::delta(p))));
        }
        for (const auto& m : markers) EXPECT_TRUE(crisp(eval(m, v, lang))) << print(m);
    }
}
