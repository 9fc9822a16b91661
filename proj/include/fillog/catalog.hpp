#pragma once

#include "fillog/decision.hpp"
#include "fillog/filters.hpp"
#include "fillog/syntax.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fillog {

// A premise set and conclusion over p, q, r.
struct Query {
    std::string id;
    std::vector<Formula> premises;
    Formula conclusion;
};

struct SeparatingStatement {
    std::string id;  // P1..P8 (G2), S1..S5 (Ginv, biG)
    std::vector<Formula> premises;
    Formula conclusion;

    Query query() const { return {id, premises, conclusion}; }
};

std::vector<SeparatingStatement> separating_statements(Language lang);

// Extra queries used to split hierarchy nodes that the statements above leave
// joined in one direction. Ids H1, H2, ...
std::vector<Query> hierarchy_probes(Language lang);

// ── tables ──

struct TableRow {
    std::string label;  // e.g. "<x°,1°>"
    Filter filter;
    std::vector<bool> expected;
};

struct ExpectedTable {
    std::string name;
    Language lang;
    std::vector<std::string> columns;  // statement ids
    std::vector<TableRow> rows;
};

// G2: the point-generated and the non-point-generated table. Ginv and biG: one
// table each over the canonical classes.
std::vector<ExpectedTable> expected_tables(Language lang);

struct MatrixReport {
    ExpectedTable table;
    std::vector<std::vector<bool>> computed;
    std::vector<std::vector<std::optional<Valuation>>> witnesses;

    std::size_t mismatches() const;
};

std::vector<MatrixReport> separating_matrix(Language lang);

// ── class counting ──

struct ClassCountReport {
    Language lang = Language::BiG;
    std::size_t filters_tried = 0;
    std::size_t distinct = 0;                      // distinguishable classes
    std::size_t expected = 0;                      // number of named classes
    std::vector<std::vector<std::string>> groups;  // filters per signature
    std::vector<std::string> merged_classes;       // named classes sharing a signature
    std::vector<std::string> split_classes;        // named classes with several signatures
};

std::vector<UnitRational> class_count_bounds();
ClassCountReport class_count_report(Language lang);
std::size_t class_count(Language lang);

// ── hierarchy ──

struct HierarchyNode {
    std::string name;
    std::optional<EntailmentClass> cls;  // nullopt: order entailment
};

struct HierarchyEdge {
    std::string stronger;
    std::string weaker;
    Language lang;
};

std::vector<HierarchyNode> hierarchy_nodes(Language lang);
std::vector<HierarchyEdge> hierarchy_edges(Language lang);

struct EdgeViolation {
    HierarchyEdge edge;
    Query query;
};

struct Separation {
    std::string holds_for;
    std::string fails_for;
    std::optional<Query> query;  // nullopt: nothing in catalog or corpus separates
    std::optional<Valuation> witness;
};

struct HierarchyReport {
    Language lang = Language::Ginv;
    std::size_t queries_checked = 0;
    std::vector<HierarchyEdge> edges;
    std::vector<EdgeViolation> violations;
    std::vector<Separation> separations;

    std::size_t missing_separations() const;
    bool ok() const { return violations.empty() && missing_separations() == 0; }
};

HierarchyReport verify_hierarchy(Language lang, std::size_t corpus_size, std::uint64_t seed = 1);

// ── regression witnesses ──

struct NamedWitness {
    std::string id;
    std::string claim;
    Language lang;
    std::vector<Formula> premises;
    Formula conclusion;
    std::optional<Filter> filter;  // nullopt: order entailment
    bool expected_holds;
    std::optional<Valuation> known_counterexample;
};

std::vector<NamedWitness> named_witnesses();

struct WitnessResult {
    NamedWitness entry;
    Verdict verdict;
    bool counterexample_checks = true;  // known_counterexample re-evaluates as a counterexample

    bool reproduced() const { return verdict.holds == entry.expected_holds && counterexample_checks; }
};

std::vector<WitnessResult> check_named_witnesses();

// ── reports ──

std::string render_text(const MatrixReport& r);
std::string render_text(const ClassCountReport& r);
std::string render_text(const HierarchyReport& r);
std::string render_json(const std::vector<MatrixReport>& tables);
std::string render_json(const ClassCountReport& r);
std::string render_json(const HierarchyReport& r);

}  // namespace fillog
