#include "fillog/decision.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fillog {

// ── symbolic points and configurations ──

std::string SymbolicPoint::str() const {
    switch (tag) {
        case Tag::Var: return "v(" + var + ")";
        case Tag::Mirror: return "1-v(" + var + ")";
        case Tag::Coord: return "v" + std::to_string(coord) + "(" + var + ")";
        case Tag::Const: return value.str();
    }
    return "?";
}

std::vector<UnitRational> normalize_constants(Language lang, std::vector<UnitRational> consts) {
    consts.push_back(UnitRational::zero());
    consts.push_back(UnitRational::one());
    if (lang == Language::Ginv) {
        consts.push_back(UnitRational::half());
        std::size_t n = consts.size();
        for (std::size_t i = 0; i < n; ++i) consts.push_back(consts[i].complement());
    }
    std::sort(consts.begin(), consts.end());
    consts.erase(std::unique(consts.begin(), consts.end()), consts.end());
    return consts;
}

OrderConfig::OrderConfig(Language lang, std::vector<std::string> vars, std::vector<UnitRational> consts)
    : lang_(lang), vars_(std::move(vars)), consts_(normalize_constants(lang, std::move(consts))) {
    ranks_.assign(point_count(), 0);
}

std::vector<SymbolicPoint> OrderConfig::points() const {
    std::vector<SymbolicPoint> out;
    for (const auto& c : consts_) out.push_back(SymbolicPoint::constant(c));
    for (const auto& v : vars_) {
        switch (lang_) {
            case Language::BiG: out.push_back(SymbolicPoint::variable(v)); break;
            case Language::Ginv:
                out.push_back(SymbolicPoint::variable(v));
                out.push_back(SymbolicPoint::mirror(v));
                break;
            case Language::Gsquare:
                out.push_back(SymbolicPoint::coordinate(v, 1));
                out.push_back(SymbolicPoint::coordinate(v, 2));
                break;
        }
    }
    return out;
}

int OrderConfig::const_rank(const UnitRational& c) const {
    auto it = std::lower_bound(consts_.begin(), consts_.end(), c);
    if (it == consts_.end() || *it != c) throw std::invalid_argument("constant " + c.str() + " not in configuration");
    return ranks_[static_cast<std::size_t>(it - consts_.begin())];
}

std::size_t OrderConfig::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw UnboundVariable(name);
}

int OrderConfig::rank_of(const SymbolicPoint& p) const {
    switch (p.tag) {
        case SymbolicPoint::Tag::Const: return const_rank(p.value);
        case SymbolicPoint::Tag::Var:
            if (lang_ == Language::Gsquare) break;
            return slot_rank(var_index(p.var), 0);
        case SymbolicPoint::Tag::Mirror:
            if (lang_ != Language::Ginv) break;
            return slot_rank(var_index(p.var), 1);
        case SymbolicPoint::Tag::Coord:
            if (lang_ != Language::Gsquare || (p.coord != 1 && p.coord != 2)) break;
            return slot_rank(var_index(p.var), static_cast<std::size_t>(p.coord - 1));
    }
    throw std::invalid_argument("point " + p.str() + " does not belong to a " + to_string(lang_) + " configuration");
}

std::string OrderConfig::str() const {
    auto pts = points();
    std::map<int, std::vector<std::string>> cells;
    for (std::size_t i = 0; i < pts.size(); ++i) cells[ranks_[i]].push_back(pts[i].str());
    std::string out;
    for (const auto& [r, names] : cells) {
        if (!out.empty()) out += " < ";
        for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " = " : "") + names[i];
    }
    return out;
}

// ── enumeration ──

namespace {

// Inserts free points one at a time into a chain of constant cells: each point
// joins an existing cell or opens a new cell strictly between two cells. Every
// weak order arises exactly once.
class ChainInserter {
public:
    ChainInserter(std::size_t chain_len, std::size_t free_points,
                  std::function<bool(const std::vector<int>&, const std::vector<int>&, int)> leaf)
        : leaf_(std::move(leaf)), chain_len_(static_cast<int>(chain_len)) {
        for (int i = 0; i < chain_len_; ++i) order_.push_back(i);
        assign_.assign(free_points, -1);
        next_id_ = chain_len_;
    }

    bool run() { return insert(0); }

private:
    bool insert(std::size_t i) {
        if (i == assign_.size()) return emit();
        for (std::size_t j = 0; j < order_.size(); ++j) {
            assign_[i] = order_[j];
            if (!insert(i + 1)) return false;
        }
        for (std::size_t j = 1; j < order_.size(); ++j) {
            int id = next_id_++;
            order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(j), id);
            assign_[i] = id;
            bool go = insert(i + 1);
            order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(j));
            --next_id_;
            if (!go) return false;
        }
        return true;
    }

    bool emit() {
        pos_.assign(static_cast<std::size_t>(next_id_), 0);
        for (std::size_t j = 0; j < order_.size(); ++j) pos_[static_cast<std::size_t>(order_[j])] = static_cast<int>(j);
        point_pos_.resize(assign_.size());
        for (std::size_t i = 0; i < assign_.size(); ++i) point_pos_[i] = pos_[static_cast<std::size_t>(assign_[i])];
        chain_pos_.resize(static_cast<std::size_t>(chain_len_));
        for (int c = 0; c < chain_len_; ++c) chain_pos_[static_cast<std::size_t>(c)] = pos_[static_cast<std::size_t>(c)];
        return leaf_(chain_pos_, point_pos_, static_cast<int>(order_.size()) - 1);
    }

    std::function<bool(const std::vector<int>&, const std::vector<int>&, int)> leaf_;
    int chain_len_;
    std::vector<int> order_;
    std::vector<int> assign_;
    std::vector<int> pos_, point_pos_, chain_pos_;
    int next_id_ = 0;
};

}  // namespace

void enumerate_configs(const std::vector<std::string>& vars, Language lang, const std::vector<UnitRational>& consts,
                       const std::function<bool(const OrderConfig&)>& visit, std::size_t max_vars) {
    if (vars.size() > max_vars)
        throw BudgetExceeded(std::to_string(vars.size()) + " variables exceed the limit of " + std::to_string(max_vars));
    OrderConfig cfg(lang, vars, consts);
    const auto& cs = cfg.constants();
    const std::size_t nc = cs.size();
    auto& ranks = cfg.mutable_ranks();

    if (lang != Language::Ginv) {
        const std::size_t slots = cfg.slots_per_var();
        ChainInserter ins(nc, vars.size() * slots, [&](const std::vector<int>& chain, const std::vector<int>& pts, int) {
            for (std::size_t c = 0; c < nc; ++c) ranks[c] = chain[c];
            for (std::size_t i = 0; i < pts.size(); ++i) ranks[nc + i] = pts[i];
            return visit(cfg);
        });
        ins.run();
        return;
    }

    // Ginv: place the upper representative max(v, 1-v) of each variable in the
    // chain of constants >= 1/2, then choose which side v itself lies on.
    std::vector<std::size_t> upper;  // chain position -> constant index
    for (std::size_t c = 0; c < nc; ++c)
        if (cs[c] >= UnitRational::half()) upper.push_back(c);
    std::vector<std::size_t> chain_of(nc);   // constant index -> chain position of its upper member
    std::vector<bool> is_upper(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        is_upper[c] = cs[c] >= UnitRational::half();
        auto target = is_upper[c] ? cs[c] : cs[c].complement();
        for (std::size_t j = 0; j < upper.size(); ++j)
            if (cs[upper[j]] == target) chain_of[c] = j;
    }
    const std::size_t n = vars.size();
    ChainInserter ins(upper.size(), n, [&](const std::vector<int>& chain, const std::vector<int>& pts, int top) {
        for (std::size_t c = 0; c < nc; ++c) {
            int j = chain[chain_of[c]];
            ranks[c] = is_upper[c] ? top + j : top - j;
        }
        std::vector<std::size_t> off_center;
        for (std::size_t v = 0; v < n; ++v)
            if (pts[v] != 0) off_center.push_back(v);
        for (std::size_t mask = 0; mask < (std::size_t{1} << off_center.size()); ++mask) {
            for (std::size_t v = 0; v < n; ++v) {
                ranks[nc + 2 * v] = top + pts[v];
                ranks[nc + 2 * v + 1] = top - pts[v];
            }
            for (std::size_t b = 0; b < off_center.size(); ++b) {
                if (mask >> b & 1) {
                    std::size_t v = off_center[b];
                    std::swap(ranks[nc + 2 * v], ranks[nc + 2 * v + 1]);
                }
            }
            if (!visit(cfg)) return false;
        }
        return true;
    });
    ins.run();
}

std::vector<OrderConfig> all_configs(const std::vector<std::string>& vars, Language lang,
                                     const std::vector<UnitRational>& consts, std::size_t max_vars) {
    std::vector<OrderConfig> out;
    enumerate_configs(vars, lang, consts, [&](const OrderConfig& c) { out.push_back(c); return true; }, max_vars);
    return out;
}

// ── abstraction and realization ──

OrderConfig abstract(const Valuation& v, const std::vector<std::string>& vars, Language lang,
                     const std::vector<UnitRational>& consts) {
    OrderConfig cfg(lang, vars, consts);
    std::vector<UnitRational> values = cfg.constants();
    for (const auto& name : vars) {
        if (lang == Language::Gsquare) {
            const auto& v2 = std::get<Valuation2>(v);
            auto it = v2.find(name);
            if (it == v2.end()) throw UnboundVariable(name);
            values.push_back(it->second.first);
            values.push_back(it->second.second);
        } else {
            const auto& v1 = std::get<Valuation1>(v);
            auto it = v1.find(name);
            if (it == v1.end()) throw UnboundVariable(name);
            values.push_back(it->second);
            if (lang == Language::Ginv) values.push_back(it->second.complement());
        }
    }
    std::vector<UnitRational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto& ranks = cfg.mutable_ranks();
    for (std::size_t i = 0; i < values.size(); ++i)
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
    return cfg;
}

Valuation realize(const OrderConfig& cfg) {
    const auto& cs = cfg.constants();
    const int top = cfg.top();
    std::vector<std::optional<UnitRational>> fixed(static_cast<std::size_t>(top) + 1);
    for (std::size_t c = 0; c < cs.size(); ++c) fixed[static_cast<std::size_t>(cfg.ranks()[c])] = cs[c];
    std::vector<UnitRational> value(fixed.size());
    int prev = 0;
    for (int r = 1; r <= top; ++r) {
        if (!fixed[static_cast<std::size_t>(r)]) continue;
        const auto& lo = *fixed[static_cast<std::size_t>(prev)];
        const auto& hi = *fixed[static_cast<std::size_t>(r)];
        for (int k = prev; k <= r; ++k) value[static_cast<std::size_t>(k)] = interpolate(lo, hi, k - prev, r - prev);
        prev = r;
    }
    const auto& vars = cfg.variables();
    if (cfg.language() == Language::Gsquare) {
        Valuation2 out;
        for (std::size_t i = 0; i < vars.size(); ++i)
            out[vars[i]] = {value[static_cast<std::size_t>(cfg.slot_rank(i, 0))],
                            value[static_cast<std::size_t>(cfg.slot_rank(i, 1))]};
        return out;
    }
    Valuation1 out;
    for (std::size_t i = 0; i < vars.size(); ++i) out[vars[i]] = value[static_cast<std::size_t>(cfg.slot_rank(i, 0))];
    return out;
}

// ── symbolic evaluation ──

namespace {

SymbolicPoint c0() { return SymbolicPoint::constant(UnitRational::zero()); }
SymbolicPoint c1() { return SymbolicPoint::constant(UnitRational::one()); }

SymbolicPoint mirror_of(const SymbolicPoint& p) {
    switch (p.tag) {
        case SymbolicPoint::Tag::Var: return SymbolicPoint::mirror(p.var);
        case SymbolicPoint::Tag::Mirror: return SymbolicPoint::variable(p.var);
        case SymbolicPoint::Tag::Const: return SymbolicPoint::constant(p.value.complement());
        case SymbolicPoint::Tag::Coord: break;
    }
    throw std::invalid_argument("no mirror for a G2 coordinate");
}

SymbolicPoint sym1(const Formula& f, const OrderConfig& cfg) {
    auto rk = [&](const SymbolicPoint& p) { return cfg.rank_of(p); };
    switch (f.kind()) {
        case Kind::Var: return SymbolicPoint::variable(f.name());
        case Kind::Const0: return c0();
        case Kind::Const1: return c1();
        case Kind::GNeg: return rk(sym1(f.child(), cfg)) == 0 ? c1() : c0();
        case Kind::Delta: return rk(sym1(f.child(), cfg)) == cfg.top() ? c1() : c0();
        case Kind::InvNeg: return mirror_of(sym1(f.child(), cfg));
        default: break;
    }
    if (f.kind() == Kind::StrongNeg) throw LanguageError("strong negation in a one-dimensional configuration");
    auto a = sym1(f.left(), cfg), b = sym1(f.right(), cfg);
    bool le = rk(a) <= rk(b);
    switch (f.kind()) {
        case Kind::And: return le ? a : b;
        case Kind::Or: return le ? b : a;
        case Kind::Impl: return le ? c1() : b;
        default: return le ? c0() : a;  // Coimpl
    }
}

using SymPair = std::pair<SymbolicPoint, SymbolicPoint>;

SymPair sym2(const Formula& f, const OrderConfig& cfg) {
    auto rk = [&](const SymbolicPoint& p) { return cfg.rank_of(p); };
    const int top = cfg.top();
    switch (f.kind()) {
        case Kind::Var: return {SymbolicPoint::coordinate(f.name(), 1), SymbolicPoint::coordinate(f.name(), 2)};
        case Kind::Const0: return {c0(), c1()};
        case Kind::Const1: return {c1(), c0()};
        case Kind::StrongNeg: {
            auto c = sym2(f.child(), cfg);
            return {c.second, c.first};
        }
        case Kind::GNeg: {
            auto c = sym2(f.child(), cfg);
            return {rk(c.first) == 0 ? c1() : c0(), rk(c.second) == top ? c0() : c1()};
        }
        case Kind::Delta: {
            auto c = sym2(f.child(), cfg);
            return {rk(c.first) == top ? c1() : c0(), rk(c.second) == 0 ? c0() : c1()};
        }
        case Kind::InvNeg: throw LanguageError("involutive negation in a G2 configuration");
        default: break;
    }
    auto a = sym2(f.left(), cfg), b = sym2(f.right(), cfg);
    auto lo = [&](const SymbolicPoint& x, const SymbolicPoint& y) { return rk(x) <= rk(y) ? x : y; };
    auto hi = [&](const SymbolicPoint& x, const SymbolicPoint& y) { return rk(x) <= rk(y) ? y : x; };
    auto imp = [&](const SymbolicPoint& x, const SymbolicPoint& y) { return rk(x) <= rk(y) ? c1() : y; };
    auto coi = [&](const SymbolicPoint& x, const SymbolicPoint& y) { return rk(x) <= rk(y) ? c0() : x; };
    switch (f.kind()) {
        case Kind::And: return {lo(a.first, b.first), hi(a.second, b.second)};
        case Kind::Or: return {hi(a.first, b.first), lo(a.second, b.second)};
        case Kind::Impl: return {imp(a.first, b.first), coi(b.second, a.second)};
        default: return {coi(a.first, b.first), imp(b.second, a.second)};  // Coimpl
    }
}

}  // namespace

SymbolicPoint symbolic_eval(const Formula& f, const OrderConfig& cfg) {
    if (cfg.language() == Language::Gsquare) throw std::invalid_argument("use symbolic_eval_g2 for G2 configurations");
    require_language(f, cfg.language());
    return sym1(f, cfg);
}

std::pair<SymbolicPoint, SymbolicPoint> symbolic_eval_g2(const Formula& f, const OrderConfig& cfg) {
    if (cfg.language() != Language::Gsquare) throw std::invalid_argument("symbolic_eval_g2 needs a G2 configuration");
    require_language(f, Language::Gsquare);
    return sym2(f, cfg);
}

// ── rank-level evaluation used in the search loop ──

namespace {

struct Op {
    Kind kind;
    int a = -1, b = -1, var = -1;
};

class Compiled {
public:
    Compiled(const Formula& f, const std::vector<std::string>& vars) {
        build(f, vars);
        buf1_.resize(ops_.size());
        buf2_.resize(ops_.size());
    }

    // One-dimensional: r[v] is the rank of v(p); mirror of rank x is top - x.
    int eval1(const std::vector<int>& r, int top) {
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const Op& o = ops_[i];
            int x = o.a >= 0 ? buf1_[static_cast<std::size_t>(o.a)] : 0;
            int y = o.b >= 0 ? buf1_[static_cast<std::size_t>(o.b)] : 0;
            int out = 0;
            switch (o.kind) {
                case Kind::Var: out = r[static_cast<std::size_t>(o.var)]; break;
                case Kind::Const0: out = 0; break;
                case Kind::Const1: out = top; break;
                case Kind::GNeg: out = x == 0 ? top : 0; break;
                case Kind::Delta: out = x == top ? top : 0; break;
                case Kind::InvNeg: out = top - x; break;
                case Kind::And: out = std::min(x, y); break;
                case Kind::Or: out = std::max(x, y); break;
                case Kind::Impl: out = x <= y ? top : y; break;
                case Kind::Coimpl: out = x <= y ? 0 : x; break;
                case Kind::StrongNeg: break;
            }
            buf1_[i] = out;
        }
        return buf1_.back();
    }

    std::pair<int, int> eval2(const std::vector<int>& t, const std::vector<int>& f, int top) {
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const Op& o = ops_[i];
            std::pair<int, int> x = o.a >= 0 ? buf2_[static_cast<std::size_t>(o.a)] : std::pair<int, int>{};
            std::pair<int, int> y = o.b >= 0 ? buf2_[static_cast<std::size_t>(o.b)] : std::pair<int, int>{};
            std::pair<int, int> out{};
            switch (o.kind) {
                case Kind::Var: out = {t[static_cast<std::size_t>(o.var)], f[static_cast<std::size_t>(o.var)]}; break;
                case Kind::Const0: out = {0, top}; break;
                case Kind::Const1: out = {top, 0}; break;
                case Kind::StrongNeg: out = {x.second, x.first}; break;
                case Kind::GNeg: out = {x.first == 0 ? top : 0, x.second == top ? 0 : top}; break;
                case Kind::Delta: out = {x.first == top ? top : 0, x.second == 0 ? 0 : top}; break;
                case Kind::And: out = {std::min(x.first, y.first), std::max(x.second, y.second)}; break;
                case Kind::Or: out = {std::max(x.first, y.first), std::min(x.second, y.second)}; break;
                case Kind::Impl:
                    out = {x.first <= y.first ? top : y.first, y.second <= x.second ? 0 : y.second};
                    break;
                case Kind::Coimpl:
                    out = {x.first <= y.first ? 0 : x.first, y.second <= x.second ? top : x.second};
                    break;
                case Kind::InvNeg: break;
            }
            buf2_[i] = out;
        }
        return buf2_.back();
    }

private:
    int build(const Formula& f, const std::vector<std::string>& vars) {
        Op op{f.kind()};
        if (f.kind() == Kind::Var) {
            auto it = std::find(vars.begin(), vars.end(), f.name());
            if (it == vars.end()) throw UnboundVariable(f.name());
            op.var = static_cast<int>(it - vars.begin());
        } else if (is_unary(f.kind())) {
            op.a = build(f.child(), vars);
        } else if (is_binary(f.kind())) {
            op.a = build(f.left(), vars);
            op.b = build(f.right(), vars);
        }
        ops_.push_back(op);
        return static_cast<int>(ops_.size()) - 1;
    }

    std::vector<Op> ops_;
    std::vector<int> buf1_;
    std::vector<std::pair<int, int>> buf2_;
};

struct RankView {
    std::vector<int> a, b;  // biG/Ginv: a = v(p); G2: a = v1(p), b = v2(p)

    void load(const OrderConfig& cfg) {
        const std::size_t n = cfg.variables().size();
        a.resize(n);
        b.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = cfg.slot_rank(i, 0);
            if (cfg.language() == Language::Gsquare) b[i] = cfg.slot_rank(i, 1);
        }
    }
};

void check_inputs(const std::vector<Formula>& gamma, const Formula& chi, Language lang) {
    for (const auto& g : gamma) require_language(g, lang);
    require_language(chi, lang);
}

// Bounds of a filter expressed as ranks in the current configuration.
struct RankFilter {
    bool pairs = false;
    UnitRational x, y;
    bool xs = false, ys = false;
    int xr = 0, yr = 0;

    explicit RankFilter(const Filter& d) {
        if (const auto* f = std::get_if<Filter01>(&d)) {
            x = f->bound;
            xs = f->strict;
        } else {
            const auto& j = std::get<FilterJoin>(d);
            pairs = true;
            x = j.x;
            xs = j.x_strict;
            y = j.y;
            ys = j.y_strict;
        }
    }
    std::vector<UnitRational> bounds() const {
        if (pairs) return {x, y};
        return {x};
    }
    void load(const OrderConfig& cfg) {
        xr = cfg.const_rank(x);
        if (pairs) yr = cfg.const_rank(y);
    }
    bool member(int r) const { return xs ? r > xr : r >= xr; }
    bool member(std::pair<int, int> p) const {
        return (xs ? p.first > xr : p.first >= xr) && (ys ? p.second < yr : p.second <= yr);
    }
};

Verdict finish(std::optional<OrderConfig> found, std::size_t checked) {
    Verdict v;
    v.configs_checked = checked;
    if (found) {
        v.holds = false;
        v.witness = realize(*found);
    }
    return v;
}

}  // namespace

std::vector<std::string> query_variables(const std::vector<Formula>& gamma, const Formula& chi) {
    std::set<std::string> vs;
    for (const auto& g : gamma) g.collect_variables(vs);
    chi.collect_variables(vs);
    return {vs.begin(), vs.end()};
}

bool is_counterexample(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                       const Valuation& v) {
    if (lang == Language::Gsquare) {
        const auto& j = std::get<FilterJoin>(d);
        const auto& v2 = std::get<Valuation2>(v);
        return member_join(j, inf_premises(gamma, v2)) && !member_join(j, eval_g2(chi, v2));
    }
    const auto& f = std::get<Filter01>(d);
    const auto& v1 = std::get<Valuation1>(v);
    return member01(f, inf_premises(gamma, v1, lang)) && !member01(f, std::get<UnitRational>(eval(chi, v1, lang)));
}

bool is_order_counterexample(const std::vector<Formula>& gamma, const Formula& chi, Language lang,
                             const Valuation& v) {
    if (lang == Language::Gsquare) {
        const auto& v2 = std::get<Valuation2>(v);
        return !truth_leq(inf_premises(gamma, v2), eval_g2(chi, v2));
    }
    const auto& v1 = std::get<Valuation1>(v);
    return inf_premises(gamma, v1, lang) > std::get<UnitRational>(eval(chi, v1, lang));
}

Verdict decide_entailment(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                          const DecisionOptions& opts) {
    check_inputs(gamma, chi, lang);
    require_carrier(d, lang);
    const auto vars = query_variables(gamma, chi);
    RankFilter rf(d);
    std::vector<Compiled> prem;
    for (const auto& g : gamma) prem.emplace_back(g, vars);
    Compiled concl(chi, vars);
    RankView rv;
    std::optional<OrderConfig> found;
    std::size_t checked = 0;
    const bool matrix = opts.mode == MembershipMode::Matrix;

    enumerate_configs(vars, lang, rf.bounds(), [&](const OrderConfig& cfg) {
        ++checked;
        rv.load(cfg);
        rf.load(cfg);
        const int top = cfg.top();
        if (lang == Language::Gsquare) {
            if (rf.member(concl.eval2(rv.a, rv.b, top))) return true;
            std::pair<int, int> inf{top, 0};
            for (auto& p : prem) {
                auto x = p.eval2(rv.a, rv.b, top);
                if (matrix && !rf.member(x)) return true;
                inf = {std::min(inf.first, x.first), std::max(inf.second, x.second)};
                if (!rf.member(inf)) return true;
            }
        } else {
            if (rf.member(concl.eval1(rv.a, top))) return true;
            int inf = top;
            for (auto& p : prem) {
                int x = p.eval1(rv.a, top);
                if (matrix && !rf.member(x)) return true;
                inf = std::min(inf, x);
                if (!rf.member(inf)) return true;
            }
        }
        found = cfg;
        return false;
    }, opts.max_vars);

    Verdict v = finish(found, checked);
    v.class_used = classify(d, lang);
    if (v.witness && !is_counterexample(gamma, chi, d, lang, *v.witness))
        throw std::logic_error("witness " + to_string(*v.witness) + " does not re-check");
    return v;
}

Verdict decide_order_entailment(const std::vector<Formula>& gamma, const Formula& chi, Language lang,
                                const DecisionOptions& opts) {
    check_inputs(gamma, chi, lang);
    const auto vars = query_variables(gamma, chi);
    std::vector<Compiled> prem;
    for (const auto& g : gamma) prem.emplace_back(g, vars);
    Compiled concl(chi, vars);
    RankView rv;
    std::optional<OrderConfig> found;
    std::size_t checked = 0;

    enumerate_configs(vars, lang, {}, [&](const OrderConfig& cfg) {
        ++checked;
        rv.load(cfg);
        const int top = cfg.top();
        if (lang == Language::Gsquare) {
            auto c = concl.eval2(rv.a, rv.b, top);
            std::pair<int, int> inf{top, 0};
            for (auto& p : prem) {
                auto x = p.eval2(rv.a, rv.b, top);
                inf = {std::min(inf.first, x.first), std::max(inf.second, x.second)};
                if (inf.first <= c.first && inf.second >= c.second) return true;
            }
            if (inf.first <= c.first && inf.second >= c.second) return true;
        } else {
            int c = concl.eval1(rv.a, top);
            int inf = top;
            for (auto& p : prem) {
                inf = std::min(inf, p.eval1(rv.a, top));
                if (inf <= c) return true;
            }
            if (inf <= c) return true;
        }
        found = cfg;
        return false;
    }, opts.max_vars);

    Verdict v = finish(found, checked);
    if (lang == Language::BiG) v.class_used = EntailmentClass{Language::BiG, ClassId::Order};
    if (lang == Language::Gsquare) v.class_used = EntailmentClass{Language::Gsquare, ClassId::Order};
    if (v.witness && !is_order_counterexample(gamma, chi, lang, *v.witness))
        throw std::logic_error("witness " + to_string(*v.witness) + " does not re-check");
    return v;
}

bool check_validity(const Formula& f, Language lang, const DecisionOptions& opts) {
    require_language(f, lang);
    const auto vars = query_variables({}, f);
    Compiled c(f, vars);
    RankView rv;
    bool valid = true, first_coord_one = true;
    enumerate_configs(vars, lang, {}, [&](const OrderConfig& cfg) {
        rv.load(cfg);
        const int top = cfg.top();
        if (lang == Language::Gsquare) {
            auto x = c.eval2(rv.a, rv.b, top);
            if (x.first != top) first_coord_one = false;
            if (x.first != top || x.second != 0) valid = false;
        } else if (c.eval1(rv.a, top) != top) {
            valid = false;
            return false;
        }
        return true;
    }, opts.max_vars);
    if (lang == Language::Gsquare && valid != first_coord_one)
        throw std::logic_error("G2 validity disagrees with first-coordinate validity for " + print(f));
    return valid;
}

Verdict decide_entailment_grid(const std::vector<Formula>& gamma, const Formula& chi, const Filter& d, Language lang,
                               int denominator, std::size_t budget) {
    check_inputs(gamma, chi, lang);
    require_carrier(d, lang);
    if (denominator < 1) throw std::invalid_argument("grid denominator must be positive");
    const auto vars = query_variables(gamma, chi);
    const std::size_t slots = vars.size() * (lang == Language::Gsquare ? 2 : 1);
    const std::size_t base = static_cast<std::size_t>(denominator) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        if (total > budget / base) throw BudgetExceeded("grid search exceeds budget");
        total *= base;
    }
    std::vector<UnitRational> grid;
    for (int i = 0; i <= denominator; ++i) grid.emplace_back(i, denominator);
    std::vector<std::size_t> idx(slots, 0);
    Verdict out;
    out.class_used = classify(d, lang);
    for (std::size_t n = 0; n < total; ++n) {
        Valuation v;
        if (lang == Language::Gsquare) {
            Valuation2 v2;
            for (std::size_t i = 0; i < vars.size(); ++i) v2[vars[i]] = {grid[idx[2 * i]], grid[idx[2 * i + 1]]};
            v = v2;
        } else {
            Valuation1 v1;
            for (std::size_t i = 0; i < vars.size(); ++i) v1[vars[i]] = grid[idx[i]];
            v = v1;
        }
        ++out.configs_checked;
        if (is_counterexample(gamma, chi, d, lang, v)) {
            out.holds = false;
            out.witness = v;
            return out;
        }
        for (std::size_t i = 0; i < slots; ++i) {
            if (++idx[i] < base) break;
            idx[i] = 0;
        }
    }
    return out;
}

}  // namespace fillog
