#include "fillog/generate.hpp"

namespace fillog {

namespace {

std::vector<Kind> unary_ops(Language lang) {
    switch (lang) {
        case Language::BiG: return {Kind::GNeg, Kind::Delta};
        case Language::Ginv: return {Kind::GNeg, Kind::Delta, Kind::InvNeg};
        case Language::Gsquare: return {Kind::GNeg, Kind::Delta, Kind::StrongNeg};
    }
    return {};
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, Language lang, const std::vector<std::string>& vars, int max_depth) {
    std::uniform_int_distribution<int> roll(0, 99);
    if (max_depth <= 0 || roll(rng) < 20) {
        if (vars.empty() || roll(rng) < 8) return roll(rng) < 50 ? fml::zero() : fml::one();
        return fml::var(pick(rng, vars));
    }
    static const std::vector<Kind> binary{Kind::And, Kind::Or, Kind::Impl, Kind::Coimpl};
    if (roll(rng) < 40) return Formula::make_unary(pick(rng, unary_ops(lang)), random_formula(rng, lang, vars, max_depth - 1));
    Kind k = pick(rng, binary);
    Formula l = random_formula(rng, lang, vars, max_depth - 1);
    return Formula::make_binary(k, l, random_formula(rng, lang, vars, max_depth - 1));
}

Filter random_filter(std::mt19937_64& rng, Language lang, int max_den) {
    std::uniform_int_distribution<int> den_d(1, max_den);
    std::bernoulli_distribution coin(0.5);
    auto bound = [&] {
        int d = den_d(rng);
        return UnitRational(std::uniform_int_distribution<int>(0, d)(rng), d);
    };
    for (;;) {
        try {
            if (lang == Language::Gsquare) return FilterJoin::make(bound(), coin(rng), bound(), coin(rng));
            return Filter01::make(bound(), coin(rng));
        } catch (const FilterError&) {
        }
    }
}

std::vector<Filter> filter_family(Language lang, const std::vector<UnitRational>& bounds) {
    std::vector<Filter> out;
    for (const auto& x : bounds) {
        for (bool xs : {false, true}) {
            if (lang != Language::Gsquare) {
                try {
                    out.emplace_back(Filter01::make(x, xs));
                } catch (const FilterError&) {
                }
                continue;
            }
            for (const auto& y : bounds)
                for (bool ys : {false, true}) {
                    try {
                        out.emplace_back(FilterJoin::make(x, xs, y, ys));
                    } catch (const FilterError&) {
                    }
                }
        }
    }
    return out;
}

}  // namespace fillog
