// SPDX-License-Identifier: Apache-2.0
#pragma once

// Checks a schema + rule set + corpus against the taxonomy requirements that
// can be computed, and carries the rest as declared flags.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/classification.hpp"
#include "seqtax/classifier.hpp"
#include "seqtax/corpus.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/rules.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

inline constexpr std::uint64_t kDefaultAuditSeed = 0x5E9A11D17ULL;
inline constexpr int kDefaultRepetitions = 3;

inline const std::vector<std::string>& computed_criteria() {
    static const std::vector<std::string> keys{"complete_over_corpus", "mutually_exclusive", "repeatable",
                                               "unambiguous"};
    return keys;
}

inline const std::vector<std::string>& manual_criteria() {
    static const std::vector<std::string> keys{"accepted",   "comprehensible", "conforming", "determined",
                                               "exhaustive", "well_defined",   "useful"};
    return keys;
}

struct CriterionResult {
    bool pass = false;
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;
    std::string detail;

    bool operator==(const CriterionResult&) const = default;
};

struct ManualFlag {
    bool value = false;
    std::string justification;

    bool operator==(const ManualFlag&) const = default;
};

using ManualFlags = std::map<std::string, ManualFlag>;

struct AuditReport {
    std::string schema_id;
    std::string schema_name;
    int repetitions = kDefaultRepetitions;
    std::uint64_t seed = kDefaultAuditSeed;
    std::map<std::string, CriterionResult> computed;
    ManualFlags manual;
    std::map<std::string, std::vector<std::string>> evidence;  // per-criterion detail lines
    std::vector<RuleOverlap> overlaps;

    bool computed_pass() const {
        return std::all_of(computed.begin(), computed.end(), [](const auto& kv) { return kv.second.pass; });
    }

    bool operator==(const AuditReport&) const = default;
};

// ---------------------------------------------------------------------------
// Manual flags file: {"<criterion>": {"value": bool, "justification": string}, ...}

inline ManualFlags manual_flags_from_json(const json_io::json& doc) {
    json_io::ObjectReader r(doc, "");
    ManualFlags flags;
    for (const auto& key : manual_criteria()) {
        json_io::ObjectReader fr(r.required(key), key);
        ManualFlag f;
        f.value = fr.required_bool("value");
        f.justification = fr.required_string("justification");
        fr.finish();
        flags.emplace(key, std::move(f));
    }
    r.finish();
    return flags;
}

inline ManualFlags load_manual_flags(std::string_view document) {
    return manual_flags_from_json(json_io::parse(document));
}

inline json_io::ordered_json manual_flags_to_json(const ManualFlags& flags) {
    json_io::ordered_json j = json_io::ordered_json::object();
    for (const auto& key : manual_criteria()) {
        auto it = flags.find(key);
        if (it == flags.end()) continue;
        j[key] = {{"value", it->second.value}, {"justification", it->second.justification}};
    }
    return j;
}

inline std::string serialize_manual_flags(const ManualFlags& flags) { return manual_flags_to_json(flags).dump(2) + "\n"; }

/// Declarations for the judgement-based requirements of the shipped taxonomy.
inline const ManualFlags& builtin_manual_flags() {
    static const ManualFlags flags{
        {"accepted", {true, "Built from the plain who/where/how/what questions an incident responder already asks."}},
        {"comprehensible", {true, "Six short questions with one-sentence category definitions."}},
        {"conforming", {true, "Category names follow established security vocabulary (black hat, MITM, botnet, DDoS)."}},
        {"determined", {true, "Every question has a closed category list and an explicit unknown answer."}},
        {"exhaustive", {true, "All five worked attacks receive an answer on every question."}},
        {"well_defined", {true, "Each category carries a written definition and a codified rule."}},
        {"useful", {true, "Answers map directly to defense actions for the administrator."}},
    };
    return flags;
}

// ---------------------------------------------------------------------------

inline AuditReport audit(const TaxonomySchema& schema, const std::vector<Rule>& rules, const Corpus& corpus,
                         int repetitions, const ManualFlags& manual = builtin_manual_flags(),
                         std::uint64_t seed = kDefaultAuditSeed) {
    if (repetitions < 2) throw Error("invalid_argument", "repetitions", "repetitions must be at least 2");
    check_rules_against(schema, rules);

    AuditReport report;
    report.schema_id = schema.id;
    report.schema_name = schema.name;
    report.repetitions = repetitions;
    report.seed = seed;
    report.manual = manual;
    report.overlaps = detect_rule_overlaps(schema, rules);

    const auto total = static_cast<std::int64_t>(corpus.size());
    std::int64_t complete = 0;
    std::int64_t exclusive = 0;
    std::int64_t stable = 0;
    std::mt19937_64 rng(seed);
    auto& ev = report.evidence;

    // std::map iteration gives name order, so detail text is stable.
    for (const auto& [name, dossier] : corpus.dossiers) {
        const Classification baseline = classify(schema, rules, dossier.evidence);

        std::vector<std::string> unknown;
        for (const auto& a : baseline.assignments) {
            if (!a.assigned()) unknown.push_back(a.question_id);
        }
        if (unknown.empty()) {
            ++complete;
        } else {
            std::string line = name + ": unknown on";
            for (const auto& q : unknown) line += " " + q;
            ev["complete_over_corpus"].push_back(line);
        }

        bool single_ok = true;
        for (const auto& a : baseline.assignments) {
            if (schema.question(a.question_id).selection == Selection::single && a.categories.size() > 1) {
                single_ok = false;
                ev["mutually_exclusive"].push_back(name + ": several categories on " + a.question_id);
            }
        }
        if (single_ok) ++exclusive;

        bool repeated = true;
        for (int run = 1; run < repetitions; ++run) {
            std::vector<Rule> shuffled = rules;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (classify(schema, shuffled, dossier.evidence) != baseline) {
                repeated = false;
                ev["repeatable"].push_back(name + ": run " + std::to_string(run + 1) + " differs from run 1");
            }
        }
        if (repeated) ++stable;
    }

    const std::string vacuous = total == 0 ? " (vacuous: empty corpus)" : "";
    auto ratio = [](std::int64_t n, std::int64_t d) { return std::to_string(n) + "/" + std::to_string(d); };

    report.computed["complete_over_corpus"] = {complete == total, complete, total,
                                               ratio(complete, total) + " records answered on every question" + vacuous};

    std::int64_t single_questions = 0;
    std::set<std::string> ambiguous_questions;
    for (const auto& q : schema.questions) {
        if (q.selection == Selection::single) ++single_questions;
    }
    for (const auto& o : report.overlaps) {
        ambiguous_questions.insert(o.question_id);
        ev["unambiguous"].push_back(o.question_id + ": rules " + o.rule_a + " and " + o.rule_b +
                                    " tie on witness " + evidence_to_json(o.witness).dump());
    }
    const bool no_overlaps = report.overlaps.empty();

    report.computed["mutually_exclusive"] = {
        exclusive == total && no_overlaps, exclusive, total,
        ratio(exclusive, total) + " records single-valued on single-select questions; " +
            std::to_string(report.overlaps.size()) + " rule overlaps" + vacuous};
    report.computed["repeatable"] = {stable == total, stable, total,
                                     ratio(stable, total) + " records identical over " + std::to_string(repetitions) +
                                         " permuted-rule runs" + vacuous};
    const auto clear_questions = single_questions - static_cast<std::int64_t>(ambiguous_questions.size());
    report.computed["unambiguous"] = {no_overlaps, clear_questions, single_questions,
                                      ratio(clear_questions, single_questions) +
                                          " single-select questions free of rule overlaps"};
    return report;
}

inline json_io::ordered_json audit_report_to_json(const AuditReport& r) {
    json_io::ordered_json j;
    j["schema_id"] = r.schema_id;
    j["schema_name"] = r.schema_name;
    j["repetitions"] = r.repetitions;
    j["seed"] = r.seed;
    j["computed"] = json_io::ordered_json::object();
    for (const auto& key : computed_criteria()) {
        const auto& c = r.computed.at(key);
        j["computed"][key] = {{"pass", c.pass},
                              {"numerator", c.numerator},
                              {"denominator", c.denominator},
                              {"detail", c.detail}};
    }
    j["manual"] = manual_flags_to_json(r.manual);
    j["evidence"] = json_io::ordered_json::object();
    for (const auto& [key, lines] : r.evidence) j["evidence"][key] = lines;
    j["overlaps"] = json_io::ordered_json::array();
    for (const auto& o : r.overlaps) j["overlaps"].push_back(overlap_to_json(o));
    return j;
}

inline std::string render_audit_report(const AuditReport& r) {
    std::ostringstream out;
    out << "Audit of schema '" << r.schema_id << "' (" << r.schema_name << ")\n";
    out << "repetitions: " << r.repetitions << ", permutation seed: " << r.seed << "\n\n";
    out << "Computed criteria\n";
    for (const auto& key : computed_criteria()) {
        const auto& c = r.computed.at(key);
        out << "  " << key << std::string(22 - std::min<std::size_t>(21, key.size()), ' ') << (c.pass ? "PASS" : "FAIL")
            << "  " << c.detail << "\n";
        if (auto it = r.evidence.find(key); it != r.evidence.end()) {
            for (const auto& line : it->second) out << "      - " << line << "\n";
        }
    }
    out << "\nDeclared (not computed)\n";
    for (const auto& key : manual_criteria()) {
        auto it = r.manual.find(key);
        if (it == r.manual.end()) continue;
        out << "  " << key << std::string(22 - std::min<std::size_t>(21, key.size()), ' ')
            << (it->second.value ? "yes " : "no  ") << "  " << it->second.justification << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Comparison matrix

/// A taxonomy judged elsewhere, given as criterion key -> yes/no.
struct ExternalColumn {
    std::string name;
    std::map<std::string, bool> values;
};

/// The ten requirement rows of the comparison matrix and the report key behind each.
inline const std::vector<std::pair<std::string, std::string>>& comparison_rows() {
    static const std::vector<std::pair<std::string, std::string>> rows{
        {"Accepted", "accepted"},         {"Comprehensible", "comprehensible"},
        {"Conforming", "conforming"},     {"Determined", "determined"},
        {"Exhaustive", "exhaustive"},     {"Mutual Exclusion", "mutually_exclusive"},
        {"Repeatable", "repeatable"},     {"Well Defined", "well_defined"},
        {"Unambiguous", "unambiguous"},   {"Useful", "useful"},
    };
    return rows;
}

/// The two previously published assessments the matrix is compared against.
inline const std::vector<ExternalColumn>& published_comparison_columns() {
    static const std::vector<ExternalColumn> columns = [] {
        std::vector<ExternalColumn> cols{{"Van Heerden et al.", {}}, {"Simmons et al.", {}}};
        for (const auto& [label, key] : comparison_rows()) {
            cols[0].values[key] = key != "exhaustive" && key != "well_defined";
            cols[1].values[key] = key != "mutually_exclusive";
        }
        return cols;
    }();
    return columns;
}

inline std::string report_column_name(const AuditReport& r) { return "Proposed - " + r.schema_name; }

/// Fixed-width Yes/No matrix: external columns first, then one column per report.
inline std::string render_comparison(const std::vector<AuditReport>& reports,
                                     const std::vector<ExternalColumn>& external_rows) {
    struct Column {
        std::string name;
        std::map<std::string, bool> values;
    };
    std::vector<Column> columns;
    for (const auto& e : external_rows) columns.push_back({e.name, e.values});
    for (const auto& r : reports) {
        Column c{report_column_name(r), {}};
        for (const auto& [key, result] : r.computed) c.values[key] = result.pass;
        for (const auto& [key, flag] : r.manual) c.values[key] = flag.value;
        columns.push_back(std::move(c));
    }

    std::vector<std::size_t> widths{std::string("Requirement").size()};
    for (const auto& [label, key] : comparison_rows()) widths[0] = std::max(widths[0], label.size());
    for (const auto& c : columns) widths.push_back(std::max<std::size_t>(c.name.size(), 3));

    auto rule = [&] {
        std::string s = "+";
        for (auto w : widths) s += std::string(w + 2, '-') + "+";
        return s + "\n";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s = "|";
        for (std::size_t i = 0; i < cells.size(); ++i) s += " " + cells[i] + std::string(widths[i] - cells[i].size(), ' ') + " |";
        return s + "\n";
    };

    std::vector<std::string> header{"Requirement"};
    for (const auto& c : columns) header.push_back(c.name);
    std::string out = rule() + line(header) + rule();
    if (columns.empty()) return out;
    for (const auto& [label, key] : comparison_rows()) {
        std::vector<std::string> cells{label};
        for (const auto& c : columns) {
            auto it = c.values.find(key);
            cells.push_back(it == c.values.end() ? "-" : (it->second ? "Yes" : "No"));
        }
        out += line(cells);
    }
    return out + rule();
}

}  // namespace seqtax
