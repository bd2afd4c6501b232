// SPDX-License-Identifier: Apache-2.0
#pragma once

// Fixed-width ASCII tables for terminal output. Widths are constants so golden
// output diffs stay stable; over-long cells are written whole.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "seqtax/classification.hpp"
#include "seqtax/corpus.hpp"
#include "seqtax/defense.hpp"
#include "seqtax/schema.hpp"

namespace seqtax {

namespace detail {

inline std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

inline std::string ascii_rule(const std::vector<std::size_t>& widths) {
    std::string s = "+";
    for (auto w : widths) s += std::string(w + 2, '-') + "+";
    return s + "\n";
}

inline std::string ascii_row(const std::vector<std::size_t>& widths, const std::vector<std::string>& cells) {
    std::string s = "|";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        s += " " + cells[i];
        if (cells[i].size() < widths[i]) s += std::string(widths[i] - cells[i].size(), ' ');
        s += " |";
    }
    return s + "\n";
}

}  // namespace detail

/// Display text of an answer: category labels along the path, or "Unknown".
inline std::string answer_text(const TaxonomySchema& schema, const Assignment& a) {
    if (!a.assigned()) return "Unknown";
    const Question& q = schema.question(a.question_id);
    std::string out;
    for (const auto& id : a.categories) {
        if (!out.empty()) out += ", ";
        std::string path;
        for (const auto& step : category_path(schema, q.id, id)) {
            if (!path.empty()) path += " / ";
            path += q.find_category(step)->label;
        }
        out += path;
    }
    return out;
}

inline std::string render_classification_table(const TaxonomySchema& schema, const Classification& c) {
    const std::vector<std::size_t> widths{5, 21, 48};
    std::string out = detail::ascii_rule(widths);
    out += detail::ascii_row(widths, {"Group", "Question", "Answer"});
    out += detail::ascii_rule(widths);
    for (const auto& a : c.assignments) {
        const Question& q = schema.question(a.question_id);
        out += detail::ascii_row(widths, {detail::upper(to_string(q.group)), q.label, answer_text(schema, a)});
    }
    return out + detail::ascii_rule(widths);
}

inline std::string render_plan_table(const DefensePlan& p) {
    const std::vector<std::size_t> widths{5, 82};
    std::string out = detail::ascii_rule(widths);
    out += detail::ascii_row(widths, {"Group", "Defense action"});
    out += detail::ascii_rule(widths);
    if (p.entries.empty()) out += detail::ascii_row(widths, {"-", "(none: no question answered)"});
    for (const auto& e : p.entries) out += detail::ascii_row(widths, {detail::upper(to_string(e.group)), e.action.text});
    return out + detail::ascii_rule(widths);
}

/// The classify/wizard report: attack line, classification, defense plan.
inline std::string render_result(const TaxonomySchema& schema, const Classification& c, const DefensePlan& p) {
    std::string out = "Attack: " + (p.attack_name.empty() ? std::string("(unnamed)") : p.attack_name) + "\n\n";
    out += "Classification (" + schema.name + ")\n";
    out += render_classification_table(schema, c);
    out += "\nDefense plan\n";
    out += render_plan_table(p);
    return out;
}

inline std::string taxonomy_heading(const std::string& key) {
    if (key == "verdict") return "VERDICT (Lough)";
    if (key == "howard") return "Howard";
    if (key == "hansman_hunt") return "Hansman and Hunt";
    if (key == "avoidit") return "AVOIDIT";
    if (key == "admit") return "ADMIT (Joshi)";
    return key;
}

/// Curated sequential answers followed by every stored foreign row.
inline std::string render_dossier_comparison(const TaxonomySchema& schema, const AttackDossier& d) {
    std::string out = "Attack: " + d.name + "\n\n";
    out += "[sequential] " + schema.name + "\n";
    for (const auto& a : d.curated.assignments) {
        const Question& q = schema.question(a.question_id);
        std::string label = detail::upper(to_string(q.group)) + " " + q.label;
        out += "  " + label + std::string(label.size() < 28 ? 28 - label.size() : 1, ' ') + answer_text(schema, a) + "\n";
    }
    for (const auto& key : foreign_taxonomies()) {
        auto it = d.annotations.find(key);
        if (it == d.annotations.end()) continue;
        out += "\n[" + key + "] " + taxonomy_heading(key) + "\n";
        for (const auto& [label, value] : it->second) {
            out += "  " + label + std::string(label.size() < 28 ? 28 - label.size() : 1, ' ') + value + "\n";
        }
    }
    return out;
}

}  // namespace seqtax
