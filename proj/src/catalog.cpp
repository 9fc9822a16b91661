#include "fillog/catalog.hpp"

#include "fillog/generate.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace fillog {

namespace {

Query q(std::string id, std::initializer_list<const char*> premises, const char* conclusion) {
    Query out{std::move(id), {}, parse(conclusion)};
    for (const char* p : premises) out.premises.push_back(parse(p));
    return out;
}

SeparatingStatement stmt(std::string id, std::initializer_list<const char*> premises, const char* conclusion) {
    Query x = q(std::move(id), premises, conclusion);
    return {x.id, x.premises, x.conclusion};
}

bool run(const Query& x, const std::optional<EntailmentClass>& cls, Language lang, Verdict* out = nullptr) {
    Verdict v = cls ? decide_entailment(x.premises, x.conclusion, canonical_representative(*cls), lang)
                    : decide_order_entailment(x.premises, x.conclusion, lang);
    bool holds = v.holds;
    if (out) *out = std::move(v);
    return holds;
}

std::vector<bool> yn(const char* s) {
    std::vector<bool> out;
    for (; *s; ++s) out.push_back(*s == 'Y');
    return out;
}

Valuation val(const char* text, Language lang) { return parse_valuation(text, lang); }

}  // namespace

// ── statements ──

std::vector<SeparatingStatement> separating_statements(Language lang) {
    switch (lang) {
        case Language::Gsquare:
            return {
                stmt("P1", {"p & !p"}, "q"),
                stmt("P2", {"p -< q", "q"}, "r"),
                stmt("P3", {"p -< !p", "!p"}, "q"),
                stmt("P4", {"~(p & !p)", "!~(p & !p)"}, "q"),
                stmt("P5", {"p", "~Tp"}, "q"),
                stmt("P6",
                     {"Dp <-> !Dp", "Dq <-> !Dq", "~T(p -> q)", "T(q -> p)", "p", "T(!p -> p)", "~T(p -> !p)",
                      "T(!q -> q)", "~T(q -> !q)"},
                     "(q | !q) | ~(q | !q)"),
                stmt("P7", {"p", "!p", "Dp <-> !Dp", "~T(p -> !p)", "T(!p -> p)"}, "q"),
                stmt("P8", {"p"}, "q | ~q"),
            };
        case Language::Ginv:
            return {
                stmt("S1", {"p & ~Dp"}, "q"),
                stmt("S2", {"q"}, "p | ~p"),
                stmt("S3", {"p & -p"}, "q"),
                stmt("S4", {"q & -q", "~D((p & -p) -> (q & -q))"}, "r"),
                stmt("S5", {}, "~D((p | -p) -> (q | -q)) -> (p | -p)"),
            };
        case Language::BiG:
            return {
                stmt("S1", {"p & ~Dp"}, "q"),
                stmt("S2", {"q"}, "p | ~p"),
            };
    }
    return {};
}

std::vector<Query> hierarchy_probes(Language lang) {
    switch (lang) {
        case Language::Gsquare: return {q("H1", {"p"}, "Dp")};
        case Language::Ginv:
            return {
                q("H1", {"~D((p | -p) -> (q | -q))"}, "p | -p"),
                q("H2", {"p & -p"}, "D(p <-> -p)"),
                q("H3", {"p"}, "q | -q"),
            };
        case Language::BiG: return {};
    }
    return {};
}

// ── tables ──

std::vector<ExpectedTable> expected_tables(Language lang) {
    auto row = [](const char* label, const char* filter, const char* expected) {
        return TableRow{label, parse_filter(filter), yn(expected)};
    };
    switch (lang) {
        case Language::Gsquare:
            return {
                {"point-generated filters",
                 lang,
                 {"P1", "P2", "P3", "P4", "P5"},
                 {
                     row("<1,0>", "bi[1,0]", "YYYYY"),
                     row("<z,0>", "bi[1/2,0]", "YYYYN"),
                     row("<1,1>", "bi[1,1]", "NYYNN"),
                     row("<x,y>", "bi[2/3,1/3]", "YNYYN"),
                     row("<x',y'>", "bi[1/3,2/3]", "NNNYN"),
                     row("<1/2,1/2>", "bi[1/2,1/2]", "NNYYN"),
                     row("<z,1>", "bi[1/2,1]", "NNNNN"),
                 }},
                {"non-point-generated filters",
                 lang,
                 {"P1", "P2", "P3", "P4", "P6", "P7", "P8"},
                 {
                     row("<x,0>#", "bi(1/2,0]", "YYYYNYN"),
                     row("<1,1>#", "bi[1,1)", "YYYYYYN"),
                     row("<x°,y°>", "bi(2/3,1/3)", "YNYYNYN"),
                     row("<y°,x°>", "bi(1/3,2/3)", "NNNYNYN"),
                     row("<x°,1°>", "bi(1/3,1)", "YNNYNYN"),
                     row("<0°,1•>", "bi(0,1]", "NNNNYNY"),
                     row("<0°,1°>", "bi(0,1)", "NNNYYYY"),
                     row("<x°,1•>", "bi(1/3,1]", "NNNNNNN"),
                 }},
            };
        case Language::Ginv:
            return {{"filters on [0,1]",
                     lang,
                     {"S1", "S2", "S3", "S4", "S5"},
                     {
                         row("[1,1]", "[1,1]", "YNYYN"),
                         row("[x,1], x>1/2", "[3/4,1]", "NNYYN"),
                         row("(1/2,1]", "(1/2,1]", "NNYYY"),
                         row("[1/2,1]", "[1/2,1]", "NNNYY"),
                         row("[x',1], x'<1/2", "[1/4,1]", "NNNNY"),
                         row("(0,1]", "(0,1]", "NYNNY"),
                     }}};
        case Language::BiG:
            return {{"filters on [0,1]",
                     lang,
                     {"S1", "S2"},
                     {
                         row("[1,1]", "[1,1]", "YN"),
                         row("[x,1]", "[1/2,1]", "NN"),
                         row("(0,1]", "(0,1]", "NY"),
                     }}};
    }
    return {};
}

std::size_t MatrixReport::mismatches() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        for (std::size_t j = 0; j < table.columns.size(); ++j)
            if (computed[i][j] != table.rows[i].expected[j]) ++n;
    return n;
}

std::vector<MatrixReport> separating_matrix(Language lang) {
    std::map<std::string, SeparatingStatement> by_id;
    for (auto& s : separating_statements(lang)) by_id.emplace(s.id, s);
    std::vector<MatrixReport> out;
    for (auto& table : expected_tables(lang)) {
        MatrixReport r{table, {}, {}};
        for (const auto& row : table.rows) {
            std::vector<bool> line;
            std::vector<std::optional<Valuation>> wit;
            for (const auto& col : table.columns) {
                const auto& s = by_id.at(col);
                Verdict v = decide_entailment(s.premises, s.conclusion, row.filter, lang);
                line.push_back(v.holds);
                wit.push_back(v.witness);
            }
            r.computed.push_back(std::move(line));
            r.witnesses.push_back(std::move(wit));
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ── class counting ──

std::vector<UnitRational> class_count_bounds() {
    return {UnitRational(0), UnitRational(1, 4), UnitRational(1, 3), UnitRational(1, 2),
            UnitRational(2, 3), UnitRational(3, 4), UnitRational(1)};
}

ClassCountReport class_count_report(Language lang) {
    std::vector<Query> battery;
    for (const auto& s : separating_statements(lang)) battery.push_back(s.query());
    for (const auto& p : hierarchy_probes(lang)) battery.push_back(p);

    ClassCountReport r;
    r.lang = lang;
    r.expected = all_classes(lang).size();
    std::map<std::string, std::vector<std::string>> groups;
    std::map<std::string, std::set<std::string>> classes_of_sig, sigs_of_class;
    for (const auto& d : filter_family(lang, class_count_bounds())) {
        ++r.filters_tried;
        std::string sig;
        for (const auto& x : battery) sig += decide_entailment(x.premises, x.conclusion, d, lang).holds ? 'Y' : 'N';
        std::string cls = classify(d, lang).name();
        groups[sig].push_back(to_string(d));
        classes_of_sig[sig].insert(cls);
        sigs_of_class[cls].insert(sig);
    }
    r.distinct = groups.size();
    for (auto& [sig, fs] : groups) r.groups.push_back(fs);
    for (auto& [sig, cs] : classes_of_sig) {
        if (cs.size() < 2) continue;
        std::string line;
        for (const auto& c : cs) line += (line.empty() ? "" : " = ") + c;
        r.merged_classes.push_back(line);
    }
    for (auto& [cls, sigs] : sigs_of_class)
        if (sigs.size() > 1) r.split_classes.push_back(cls);
    return r;
}

std::size_t class_count(Language lang) { return class_count_report(lang).distinct; }

// ── hierarchy ──

std::vector<HierarchyNode> hierarchy_nodes(Language lang) {
    std::vector<HierarchyNode> out;
    if (lang == Language::BiG) throw std::invalid_argument("no hierarchy is catalogued for biG");
    if (lang == Language::Ginv) out.push_back({"order", std::nullopt});
    for (const auto& c : all_classes(lang)) out.push_back({c.name(), c});
    return out;
}

std::vector<HierarchyEdge> hierarchy_edges(Language lang) {
    using P = std::pair<const char*, const char*>;
    std::vector<P> raw;
    if (lang == Language::Ginv) {
        raw = {{"order", "lower-open"},     {"lower-open", "no-zero"}, {"lower-open", "half-closed"},
               {"order", "upper-open"},     {"upper-open", "one"},     {"upper-open", "half-open"}};
    } else if (lang == Language::Gsquare) {
        raw = {{"order", "edge-half"},
               {"order", "one-one"},
               {"order", "open-top"},
               {"one-one", "one-zero"},
               {"sharp-one-one", "one-zero"},
               {"edge-half", "edge-open"},
               {"paraconsistent", "edge-open"},
               {"paraconsistent", "diagonal"},
               {"diagonal", "non-paraconsistent"},
               {"non-paraconsistent", "one-dim"},
               {"one-dim", "sharp-one-one"},
               {"open-top", "paraconsistent"}};
    } else {
        throw std::invalid_argument("no hierarchy is catalogued for biG");
    }
    std::vector<HierarchyEdge> out;
    for (auto [a, b] : raw) out.push_back({a, b, lang});
    return out;
}

std::size_t HierarchyReport::missing_separations() const {
    return static_cast<std::size_t>(
        std::count_if(separations.begin(), separations.end(), [](const Separation& s) { return !s.query; }));
}

HierarchyReport verify_hierarchy(Language lang, std::size_t corpus_size, std::uint64_t seed) {
    const auto nodes = hierarchy_nodes(lang);
    const auto edges = hierarchy_edges(lang);
    const std::size_t n = nodes.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[nodes[i].name] = i;

    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& e : edges) reach[index.at(e.stronger)][index.at(e.weaker)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;

    std::vector<Query> pool;
    for (const auto& s : separating_statements(lang)) pool.push_back(s.query());
    for (const auto& p : hierarchy_probes(lang)) pool.push_back(p);
    for (const auto& w : named_witnesses())
        if (w.lang == lang) pool.push_back({w.id, w.premises, w.conclusion});
    std::mt19937_64 rng(seed);
    const std::vector<std::string> vars{"p", "q"};
    for (std::size_t i = 0; i < corpus_size; ++i) {
        Query x{"corpus-" + std::to_string(i), {}, random_formula(rng, lang, vars, 3)};
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        for (std::size_t j = 0; j < k; ++j) x.premises.push_back(random_formula(rng, lang, vars, 3));
        pool.push_back(std::move(x));
    }

    HierarchyReport r;
    r.lang = lang;
    r.edges = edges;
    r.queries_checked = pool.size();
    std::vector<std::vector<bool>> holds(pool.size());
    for (std::size_t qi = 0; qi < pool.size(); ++qi)
        for (const auto& node : nodes) holds[qi].push_back(run(pool[qi], node.cls, lang));

    for (const auto& e : edges) {
        std::size_t a = index.at(e.stronger), b = index.at(e.weaker);
        for (std::size_t qi = 0; qi < pool.size(); ++qi)
            if (holds[qi][a] && !holds[qi][b]) r.violations.push_back({e, pool[qi]});
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (reach[a][b]) continue;
            Separation s{nodes[a].name, nodes[b].name, std::nullopt, std::nullopt};
            for (std::size_t qi = 0; qi < pool.size(); ++qi) {
                if (!holds[qi][a] || holds[qi][b]) continue;
                Verdict v;
                run(pool[qi], nodes[b].cls, lang, &v);
                const auto& x = pool[qi];
                bool checks = nodes[b].cls ? is_counterexample(x.premises, x.conclusion,
                                                               canonical_representative(*nodes[b].cls), lang, *v.witness)
                                           : is_order_counterexample(x.premises, x.conclusion, lang, *v.witness);
                if (!checks) continue;
                s.query = x;
                s.witness = v.witness;
                break;
            }
            r.separations.push_back(std::move(s));
        }
    }
    return r;
}

// ── regression witnesses ──

std::vector<NamedWitness> named_witnesses() {
    using L = Language;
    auto w = [](const char* id, const char* claim, L lang, std::initializer_list<const char*> premises,
                const char* conclusion, const char* filter, bool holds, const char* cex = nullptr) {
        NamedWitness out{id, claim, lang, {}, parse(conclusion), std::nullopt, holds, std::nullopt};
        for (const char* p : premises) out.premises.push_back(parse(p));
        if (filter) out.filter = parse_filter(filter);
        if (cex) out.known_counterexample = val(cex, lang);
        return out;
    };
    const char* eq_premise = "~D((p & -p) -> (q & -q))";
    const char* stable = "~D((p | -p) -> (q | -q)) -> (p | -p)";
    return {
        w("delta-explosion-one", "p & ~Dp entails q under [1,1]", L::BiG, {"p & ~Dp"}, "q", "[1,1]", true),
        w("delta-explosion-order", "p & ~Dp does not entail q under the order", L::BiG, {"p & ~Dp"}, "q", nullptr,
          false, "p=1/2,q=0"),
        w("excluded-middle-invalid", "p | ~p is not valid in biG", L::BiG, {}, "p | ~p", "[1,1]", false, "p=1/2"),
        w("excluded-middle-no-zero", "p | ~p is never 0, so (0,1] designates it", L::BiG, {}, "p | ~p", "(0,1]",
          true),
        w("half-contradiction-half-closed", "q & -q with the delta guard entails r under [1/2,1]", L::Ginv,
          {"q & -q", eq_premise}, "r", "[1/2,1]", true),
        w("half-contradiction-lower-open", "the same premises fail under (1/3,1] at p=1/2, 1/3<q<1/2, r=0",
          L::Ginv, {"q & -q", eq_premise}, "r", "(1/3,1]", false, "p=1/2,q=5/12,r=0"),
        w("stable-formula-one", "the stability formula is 2/3 at p=2/3, q=1/2, so [1,1] rejects it", L::Ginv, {},
          stable, "[1,1]", false, "p=2/3,q=1/2"),
        w("stable-formula-half-open", "the stability formula stays above 1/2", L::Ginv, {}, stable, "(1/2,1]", true),
        w("stable-formula-upper-open", "the stability formula drops below 3/4", L::Ginv, {}, stable, "[3/4,1]",
          false, "p=2/3,q=1/2"),
        w("one-vs-half-open-one", "premise ~D(...) does not give p | -p under [1,1]", L::Ginv,
          {"~D((p | -p) -> (q | -q))"}, "p | -p", "[1,1]", false, "p=3/4,q=2/3"),
        w("one-vs-half-open-half-open", "premise ~D(...) gives p | -p under (1/2,1]", L::Ginv,
          {"~D((p | -p) -> (q | -q))"}, "p | -p", "(1/2,1]", true),
        w("inv-contradiction-lower-open", "p & -p reaches 1/2, which [1/4,1] designates", L::Ginv, {"p & -p"}, "q",
          "[1/4,1]", false, "p=1/2,q=0"),
        w("inv-contradiction-half-open", "p & -p never exceeds 1/2", L::Ginv, {"p & -p"}, "q", "(1/2,1]", true),
        w("inv-validity", "(p & -p) -> (q | -q) is Ginv-valid", L::Ginv, {}, "(p & -p) -> (q | -q)", "[1,1]", true),
        w("diagonal-contradiction", "p, !p with p=<1/2,1/2> falsify explosion under <1/2,1/2>", L::Gsquare,
          {"p", "!p"}, "q", "bi[1/2,1/2]", false, "p=1/2:1/2,q=0:1"),
        w("coimplication-thin", "p -< q, q entails r under a one-dimensional filter", L::Gsquare, {"p -< q", "q"},
          "r", "bi[1,1/2]", true),
        w("designated-only", "p, ~Tp entails q only under <1,0>", L::Gsquare, {"p", "~Tp"}, "q", "bi[1,0]", true),
        w("designated-one-one", "p, ~Tp fails under <1,1> at p=<1,1>", L::Gsquare, {"p", "~Tp"}, "q", "bi[1,1]",
          false, "p=1:1,q=0:1"),
        w("excluded-middle-edge", "p entails q | ~q under <0°,1•>", L::Gsquare, {"p"}, "q | ~q", "bi(0,1]", true),
        w("delta-one-one", "p entails Dp under <1,1>", L::Gsquare, {"p"}, "Dp", "bi[1,1]", true),
        w("delta-sharp", "p does not entail Dp under <1,1># at p=<1,1/2>", L::Gsquare, {"p"}, "Dp", "bi[1,1)", false,
          "p=1:1/2"),
        w("g2-invalid", "(p & !p) -> (q | !q) is not G2-valid", L::Gsquare, {}, "(p & !p) -> (q | !q)", "bi[1,0]",
          false, "p=1:1,q=0:0"),
    };
}

std::vector<WitnessResult> check_named_witnesses() {
    std::vector<WitnessResult> out;
    for (const auto& w : named_witnesses()) {
        WitnessResult r{w, {}, true};
        r.verdict = w.filter ? decide_entailment(w.premises, w.conclusion, *w.filter, w.lang)
                             : decide_order_entailment(w.premises, w.conclusion, w.lang);
        if (w.known_counterexample) {
            r.counterexample_checks =
                w.filter ? is_counterexample(w.premises, w.conclusion, *w.filter, w.lang, *w.known_counterexample)
                         : is_order_counterexample(w.premises, w.conclusion, w.lang, *w.known_counterexample);
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ── reports ──

namespace {

std::string pad(std::string s, std::size_t w) {
    // Count code points so labels with ° and • line up.
    std::size_t len = 0;
    for (unsigned char c : s) len += (c & 0xC0) != 0x80;
    if (len < w) s.append(w - len, ' ');
    return s;
}

nlohmann::json valuation_json(const Valuation& v) {
    nlohmann::json j = nlohmann::json::object();
    if (const auto* v1 = std::get_if<Valuation1>(&v)) {
        for (const auto& [k, x] : *v1) j[k] = x.str();
    } else {
        for (const auto& [k, x] : std::get<Valuation2>(v)) j[k] = {{"v1", x.first.str()}, {"v2", x.second.str()}};
    }
    return j;
}

std::string query_text(const Query& x) {
    std::string s;
    for (const auto& p : x.premises) s += (s.empty() ? "" : ", ") + print(p);
    return s + " |= " + print(x.conclusion);
}

}  // namespace

std::string render_text(const MatrixReport& r) {
    std::ostringstream os;
    std::size_t w = 6;
    for (const auto& row : r.table.rows) w = std::max(w, row.label.size() + 2);
    os << r.table.name << " (" << to_string(r.table.lang) << ")\n";
    os << pad("", w) << "|";
    for (const auto& c : r.table.columns) os << ' ' << pad(c, 4);
    os << '\n' << std::string(w, '-') << "+" << std::string(r.table.columns.size() * 5, '-') << '\n';
    for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
        os << pad(r.table.rows[i].label, w) << "|";
        for (std::size_t j = 0; j < r.table.columns.size(); ++j) {
            bool got = r.computed[i][j];
            std::string cell = got ? "yes" : "no";
            if (got != r.table.rows[i].expected[j]) cell += "!";
            os << ' ' << pad(cell, 4);
        }
        os << '\n';
    }
    os << "mismatches: " << r.mismatches() << '\n';
    for (std::size_t i = 0; i < r.table.rows.size(); ++i)
        for (std::size_t j = 0; j < r.table.columns.size(); ++j)
            if (r.computed[i][j] != r.table.rows[i].expected[j])
                os << "  " << r.table.rows[i].label << " " << r.table.columns[j] << ": computed "
                   << (r.computed[i][j] ? "yes" : "no") << ", table says "
                   << (r.table.rows[i].expected[j] ? "yes" : "no")
                   << (r.witnesses[i][j] ? ", witness " + to_string(*r.witnesses[i][j]) : std::string()) << '\n';
    return os.str();
}

std::string render_text(const ClassCountReport& r) {
    std::ostringstream os;
    os << to_string(r.lang) << ": " << r.distinct << " distinguishable classes (" << r.expected
       << " named) over " << r.filters_tried << " filters\n";
    for (const auto& m : r.merged_classes) os << "  indistinguishable: " << m << '\n';
    for (const auto& s : r.split_classes) os << "  split by the battery: " << s << '\n';
    return os.str();
}

std::string render_text(const HierarchyReport& r) {
    std::ostringstream os;
    os << to_string(r.lang) << " hierarchy: " << r.edges.size() << " edges, " << r.queries_checked
       << " queries\n";
    for (const auto& v : r.violations)
        os << "  VIOLATION " << v.edge.stronger << " => " << v.edge.weaker << " on " << query_text(v.query) << '\n';
    for (const auto& s : r.separations) {
        os << "  " << s.holds_for << " =/=> " << s.fails_for << ": ";
        if (s.query)
            os << s.query->id << " [" << query_text(*s.query) << "] witness " << to_string(*s.witness) << '\n';
        else
            os << "NO SEPARATING QUERY\n";
    }
    os << (r.ok() ? "ok" : "FAILED") << '\n';
    return os.str();
}

std::string render_json(const std::vector<MatrixReport>& tables) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : tables) {
        nlohmann::json t{{"name", r.table.name}, {"lang", to_string(r.table.lang)}, {"columns", r.table.columns},
                         {"mismatches", r.mismatches()}};
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
            std::vector<bool> expected = r.table.rows[i].expected;
            rows.push_back({{"label", r.table.rows[i].label},
                            {"filter", to_string(r.table.rows[i].filter)},
                            {"expected", expected},
                            {"computed", r.computed[i]}});
        }
        t["rows"] = rows;
        out.push_back(t);
    }
    return out.dump(2);
}

std::string render_json(const ClassCountReport& r) {
    nlohmann::json j{{"lang", to_string(r.lang)},      {"distinct", r.distinct},
                     {"expected", r.expected},         {"filters_tried", r.filters_tried},
                     {"groups", r.groups},             {"merged_classes", r.merged_classes},
                     {"split_classes", r.split_classes}};
    return j.dump(2);
}

std::string render_json(const HierarchyReport& r) {
    nlohmann::json edges = nlohmann::json::array(), viol = nlohmann::json::array(), seps = nlohmann::json::array();
    for (const auto& e : r.edges) edges.push_back({e.stronger, e.weaker});
    for (const auto& v : r.violations)
        viol.push_back({{"edge", {v.edge.stronger, v.edge.weaker}}, {"query", query_text(v.query)}});
    for (const auto& s : r.separations) {
        nlohmann::json x{{"holds_for", s.holds_for}, {"fails_for", s.fails_for}};
        x["query"] = s.query ? nlohmann::json(query_text(*s.query)) : nlohmann::json(nullptr);
        x["witness"] = s.witness ? valuation_json(*s.witness) : nlohmann::json(nullptr);
        seps.push_back(x);
    }
    nlohmann::json j{{"lang", to_string(r.lang)}, {"queries_checked", r.queries_checked}, {"edges", edges},
                     {"violations", viol},        {"separations", seps},                 {"ok", r.ok()}};
    return j.dump(2);
}

}  // namespace fillog
