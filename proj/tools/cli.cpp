#include "cli.hpp"

#include "fillog/catalog.hpp"
#include "fillog/decision.hpp"
#include "fillog/filters.hpp"
#include "fillog/reductions.hpp"
#include "fillog/semantics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fillog::cli {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
}

nlohmann::json witness_json(const Valuation& v) {
    nlohmann::json j = nlohmann::json::object();
    if (const auto* v1 = std::get_if<Valuation1>(&v)) {
        for (const auto& [k, x] : *v1) j[k] = x.str();
    } else {
        for (const auto& [k, x] : std::get<Valuation2>(v)) j[k] = {{"v1", x.first.str()}, {"v2", x.second.str()}};
    }
    return j;
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
    std::vector<Formula> out;
    for (const auto& t : texts) out.push_back(parse(t));
    return out;
}

struct Options {
    std::string lang = "big";
    std::string val;
    std::string formula;
    std::string filter;
    std::vector<std::string> premises;
    std::string conclusion;
    std::string file;
    std::string cls;
    std::string check = "tables";
    bool order = false;
    bool json = false;
    bool matrix = false;
    bool verify = false;
    bool lang_given = false;
    std::size_t max_vars = kDefaultMaxVars;
    std::size_t corpus = 200;
};

int cmd_eval(const Options& o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    out << to_string(eval(parse(o.formula), parse_valuation(o.val, lang), lang)) << '\n';
    return kOk;
}

int cmd_entail(Options o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw std::invalid_argument("cannot read query file " + o.file);
        std::stringstream buf;
        buf << in.rdbuf();
        QueryFile qf = parse_query_file(buf.str());
        if (qf.lang && !o.lang_given) lang = *qf.lang;
        o.premises.insert(o.premises.end(), qf.premises.begin(), qf.premises.end());
        if (qf.conclusion) o.conclusion = *qf.conclusion;
        if (qf.filter && o.filter.empty()) o.filter = *qf.filter;
    }
    if (o.conclusion.empty()) throw std::invalid_argument("a conclusion is required");
    if (!o.order && o.filter.empty()) throw std::invalid_argument("give --filter or --order");

    auto gamma = parse_all(o.premises);
    Formula chi = parse(o.conclusion);
    DecisionOptions opts{o.max_vars, o.matrix ? MembershipMode::Matrix : MembershipMode::Infimum};
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = o.order ? decide_order_entailment(gamma, chi, lang, opts)
                        : decide_entailment(gamma, chi, parse_filter(o.filter), lang, opts);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (o.json) {
        nlohmann::json j;
        j["holds"] = v.holds;
        j["witness"] = v.witness ? witness_json(*v.witness) : nlohmann::json(nullptr);
        j["class"] = v.class_used ? nlohmann::json(v.class_used->name())
                                  : nlohmann::json(o.order ? "order" : nullptr);
        j["elapsed_ms"] = ms;
        out << j.dump() << '\n';
        return kOk;
    }
    out << (v.holds ? "holds" : "fails") << '\n';
    if (v.witness) out << "witness: " << to_string(*v.witness) << '\n';
    if (v.class_used) out << "class: " << v.class_used->name() << '\n';
    else if (o.order) out << "class: order\n";
    return kOk;
}

int cmd_valid(const Options& o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    DecisionOptions opts{o.max_vars, MembershipMode::Infimum};
    out << (check_validity(parse(o.formula), lang, opts) ? "valid" : "invalid") << '\n';
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    Filter d = parse_filter(o.filter);
    EntailmentClass c = classify(d, lang);
    out << "class: " << c.name() << " " << c.label() << '\n';
    out << "representative: " << to_string(canonical_representative(c)) << '\n';
    out << "validity-stable: " << (is_validity_stable(d, lang) ? "yes" : "no") << '\n';
    return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    EntailmentClass c = parse_class(lang, o.cls);
    auto gamma = parse_all(o.premises);
    Formula chi = parse(o.conclusion);
    ReductionRecipe r = reduce(gamma, chi, c);
    for (const auto& p : r.premises) out << "premise: " << print(p) << '\n';
    out << "conclusion: " << print(r.conclusion) << '\n';
    if (r.fresh) out << "fresh: " << *r.fresh << '\n';
    if (o.verify) {
        DecisionOptions opts{o.max_vars, MembershipMode::Infimum};
        ReductionCheck chk = check_reduction(gamma, chi, c, opts);
        out << "filter side: " << (chk.filter_side.holds ? "holds" : "fails") << '\n';
        out << "order side: " << (chk.order_side.holds ? "holds" : "fails") << '\n';
        if (!chk.agree()) return kMismatch;
    }
    return kOk;
}

int cmd_nnf(const Options& o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    Formula f = parse(o.formula);
    require_language(f, lang);
    out << print(lang == Language::Gsquare ? nnf_g2(f) : nnf_ginv(f)) << '\n';
    return kOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    Language lang = parse_language(o.lang);
    if (o.check == "tables") {
        auto tables = separating_matrix(lang);
        std::size_t bad = 0;
        for (const auto& t : tables) bad += t.mismatches();
        if (o.json) {
            out << render_json(tables) << '\n';
        } else {
            for (const auto& t : tables) out << render_text(t) << '\n';
        }
        return bad ? kMismatch : kOk;
    }
    if (o.check == "counts") {
        ClassCountReport r = class_count_report(lang);
        out << (o.json ? render_json(r) + "\n" : render_text(r));
        return r.distinct == r.expected ? kOk : kMismatch;
    }
    if (o.check == "hierarchy") {
        HierarchyReport r = verify_hierarchy(lang, o.corpus);
        out << (o.json ? render_json(r) + "\n" : render_text(r));
        return r.ok() ? kOk : kMismatch;
    }
    // witnesses
    bool ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : check_named_witnesses()) {
        if (w.entry.lang != lang) continue;
        ok = ok && w.reproduced();
        if (o.json) {
            arr.push_back({{"id", w.entry.id}, {"expected_holds", w.entry.expected_holds},
                           {"holds", w.verdict.holds}, {"reproduced", w.reproduced()}});
        } else {
            out << (w.reproduced() ? "ok   " : "FAIL ") << w.entry.id << ": " << w.entry.claim << '\n';
        }
    }
    if (o.json) out << arr.dump(2) << '\n';
    return ok ? kOk : kMismatch;
}

}  // namespace

QueryFile parse_query_file(std::string_view text) {
    QueryFile qf;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("query file line " + std::to_string(line_no) + ": expected 'key: value'", 0);
        std::string key = trim(std::string_view(line).substr(0, colon));
        std::string value = trim(std::string_view(line).substr(colon + 1));
        if (key == "lang") qf.lang = parse_language(value);
        else if (key == "premise") qf.premises.push_back(value);
        else if (key == "conclusion") qf.conclusion = value;
        else if (key == "filter") qf.filter = value;
        else throw ParseError("query file line " + std::to_string(line_no) + ": unknown key '" + key + "'", 0);
    }
    return qf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide filter-induced entailment in biG, Ginv and G2"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> langs{"big", "ginv", "g2", "gsquare"};

    auto add_lang = [&](CLI::App* sub) {
        sub->add_option("--lang", o.lang, "big, ginv or g2")->check(CLI::IsMember(langs))->required();
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--max-vars", o.max_vars, "variable limit for the enumeration")->capture_default_str();
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under a valuation");
    add_lang(eval_cmd);
    eval_cmd->add_option("--val", o.val, "p=2/3,q=1/2 or p=1/2:1/3 for G2")->required();
    eval_cmd->add_option("formula", o.formula)->required();

    auto* entail_cmd = app.add_subcommand("entail", "decide an entailment");
    add_lang(entail_cmd);
    add_budget(entail_cmd);
    entail_cmd->add_option("--filter", o.filter, "e.g. [1/2,1] or bi(1/3,1)");
    entail_cmd->add_option("--premise", o.premises)->take_all();
    entail_cmd->add_option("--conclusion", o.conclusion);
    entail_cmd->add_option("--file", o.file, "query file with lang:/premise:/conclusion:/filter: lines");
    entail_cmd->add_flag("--order", o.order, "order entailment instead of a filter");
    entail_cmd->add_flag("--matrix", o.matrix, "every premise designated instead of their infimum");
    entail_cmd->add_flag("--json", o.json);
    // --lang may come from the query file.
    entail_cmd->get_option("--lang")->required(false);

    auto* valid_cmd = app.add_subcommand("valid", "check validity");
    add_lang(valid_cmd);
    add_budget(valid_cmd);
    valid_cmd->add_option("formula", o.formula)->required();

    auto* classify_cmd = app.add_subcommand("classify", "canonical class of a filter");
    add_lang(classify_cmd);
    classify_cmd->add_option("--filter", o.filter)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce to order entailment");
    add_lang(reduce_cmd);
    add_budget(reduce_cmd);
    reduce_cmd->add_option("--class", o.cls, "class name, e.g. half-closed")->required();
    reduce_cmd->add_option("--premise", o.premises)->take_all();
    reduce_cmd->add_option("--conclusion", o.conclusion)->required();
    reduce_cmd->add_flag("--verify", o.verify, "decide both sides and compare");

    auto* nnf_cmd = app.add_subcommand("nnf", "negation normal form");
    add_lang(nnf_cmd);
    nnf_cmd->add_option("formula", o.formula)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "run the built-in checks");
    add_lang(catalog_cmd);
    catalog_cmd->add_option("--check", o.check)
        ->check(CLI::IsMember({"tables", "hierarchy", "counts", "witnesses"}))
        ->capture_default_str();
    catalog_cmd->add_option("--corpus", o.corpus, "random queries for the hierarchy check")->capture_default_str();
    catalog_cmd->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kParseError;
    }

    try {
        o.lang_given = entail_cmd->count("--lang") > 0;
        if (*eval_cmd) return cmd_eval(o, out);
        if (*entail_cmd) return cmd_entail(o, out);
        if (*valid_cmd) return cmd_valid(o, out);
        if (*classify_cmd) return cmd_classify(o, out);
        if (*reduce_cmd) return cmd_reduce(o, out);
        if (*nnf_cmd) return cmd_nnf(o, out);
        return cmd_catalog(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

}  // namespace fillog::cli
