// SPDX-License-Identifier: Apache-2.0
#pragma once

// Priority-ordered predicate rules mapped onto schema questions.
//
// Single-select questions take the category of the first matching rule in
// rule_precedes() order; multi-select questions take the union of all
// matching rules' categories, listed in schema order. No match means unknown.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "seqtax/classification.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/evidence.hpp"
#include "seqtax/rules.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

namespace detail {

inline Assignment assign(const Question& question, const std::vector<const Rule*>& sorted_rules,
                         const EvidenceRecord& evidence) {
    Assignment out{question.id, AssignmentStatus::unknown, {}, {}};
    std::vector<const Rule*> matched;
    for (const Rule* r : sorted_rules) {
        if (r->question_id == question.id && rule_matches(*r, evidence)) matched.push_back(r);
    }
    if (matched.empty()) return out;

    out.status = AssignmentStatus::assigned;
    if (question.selection == Selection::single) {
        const std::string& winner = matched.front()->category_id;
        out.categories.push_back(winner);
        for (const Rule* r : matched) {
            if (r->category_id == winner) out.rationale.push_back(r->id);
        }
        return out;
    }
    std::set<std::string> hit;
    for (const Rule* r : matched) {
        hit.insert(r->category_id);
        out.rationale.push_back(r->id);
    }
    for (const auto& c : question.categories) {
        if (hit.contains(c.id)) out.categories.push_back(c.id);
    }
    return out;
}

inline std::vector<const Rule*> sorted_view(const std::vector<Rule>& rules) {
    std::vector<const Rule*> view;
    view.reserve(rules.size());
    for (const auto& r : rules) view.push_back(&r);
    std::sort(view.begin(), view.end(), [](const Rule* a, const Rule* b) { return rule_precedes(*a, *b); });
    return view;
}

}  // namespace detail

/// Total and deterministic; the input order of rules does not matter.
inline Classification classify(const TaxonomySchema& schema, const std::vector<Rule>& rules,
                               const EvidenceRecord& evidence) {
    check_rules_against(schema, rules);
    const auto view = detail::sorted_view(rules);
    Classification c{schema.id, {}};
    for (const Question* q : schema.ordered_questions()) c.assignments.push_back(detail::assign(*q, view, evidence));
    return c;
}

inline Assignment classify_question(const TaxonomySchema& schema, const std::vector<Rule>& rules,
                                    const EvidenceRecord& evidence, std::string_view question_id) {
    const Question& q = schema.question(question_id);
    check_rules_against(schema, rules);
    return detail::assign(q, detail::sorted_view(rules), evidence);
}

// ---------------------------------------------------------------------------
// Overlap detection

/// Two equal-priority rules on a single-select question that both fire on
/// `witness` yet name different categories.
struct RuleOverlap {
    std::string question_id;
    std::string rule_a;
    std::string rule_b;
    EvidenceRecord witness;

    bool operator==(const RuleOverlap&) const = default;
};

inline json_io::ordered_json overlap_to_json(const RuleOverlap& o) {
    json_io::ordered_json j;
    j["question_id"] = o.question_id;
    j["rule_a"] = o.rule_a;
    j["rule_b"] = o.rule_b;
    j["witness"] = evidence_to_json(o.witness);
    return j;
}

namespace detail {

/// Candidate values for one field, where each candidate is a full field value
/// (empty = absent). Literals come from the conditions under test; every other
/// value of an open domain behaves like the single fresh value added here.
inline std::vector<std::vector<std::string>> field_states(const FieldSpec& field,
                                                          const std::set<std::string>& literals) {
    std::vector<std::string> atoms;
    if (!field.domain.empty()) {
        atoms = field.domain;
    } else {
        atoms.assign(literals.begin(), literals.end());
        if (field.kind == FieldKind::integer) {
            for (long v = 0;; ++v) {
                if (!literals.contains(std::to_string(v))) {
                    atoms.push_back(std::to_string(v));
                    break;
                }
            }
        } else {
            std::string fresh = "~other";
            while (literals.contains(fresh)) fresh += "~";
            atoms.push_back(fresh);
        }
    }

    std::vector<std::vector<std::string>> states{{}};
    if (!field.multi_valued) {
        for (const auto& a : atoms) states.push_back({a});
        return states;
    }
    // All non-empty subsets, smallest first.
    const std::size_t n = atoms.size();
    std::vector<std::vector<std::string>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) s.push_back(atoms[i]);
        }
        subsets.push_back(std::move(s));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    states.insert(states.end(), subsets.begin(), subsets.end());
    return states;
}

/// Searches the product of the fields read by a and b for a record matching both.
inline std::optional<EvidenceRecord> joint_witness(const Rule& a, const Rule& b) {
    std::map<std::string, std::set<std::string>> literals;
    for (const Rule* r : {&a, &b}) {
        for (const auto& c : r->when) {
            auto& bucket = literals[c.field];
            bucket.insert(c.values.begin(), c.values.end());
        }
    }
    std::vector<const FieldSpec*> fields;
    std::vector<std::vector<std::vector<std::string>>> states;
    for (const auto& [name, values] : literals) {
        const FieldSpec* f = find_field(name);
        if (!f) return std::nullopt;  // a condition on an unknown field never holds
        fields.push_back(f);
        states.push_back(field_states(*f, values));
    }
    std::vector<std::size_t> index(fields.size(), 0);
    while (true) {
        EvidenceRecord candidate;
        for (std::size_t i = 0; i < fields.size(); ++i) fields[i]->set(candidate, states[i][index[i]]);
        if (rule_matches(a, candidate) && rule_matches(b, candidate)) return candidate;
        std::size_t k = 0;
        while (k < index.size() && ++index[k] == states[k].size()) index[k++] = 0;
        if (k == index.size()) return std::nullopt;
    }
}

}  // namespace detail

/// Exhaustive ambiguity check. A pair of rules can only be jointly satisfied
/// through the fields they read, so each equal-priority, different-category
/// pair on a single-select question is decided over the finite product of
/// those fields' equivalence classes.
inline std::vector<RuleOverlap> detect_rule_overlaps(const TaxonomySchema& schema, const std::vector<Rule>& rules) {
    check_rules_against(schema, rules);
    const auto view = detail::sorted_view(rules);
    std::vector<RuleOverlap> out;
    for (const Question* q : schema.ordered_questions()) {
        if (q->selection != Selection::single) continue;
        std::vector<const Rule*> own;
        for (const Rule* r : view) {
            if (r->question_id == q->id) own.push_back(r);
        }
        for (std::size_t i = 0; i < own.size(); ++i) {
            for (std::size_t j = i + 1; j < own.size(); ++j) {
                const Rule& a = *own[i];
                const Rule& b = *own[j];
                if (a.priority != b.priority || a.category_id == b.category_id) continue;
                if (auto witness = detail::joint_witness(a, b)) out.push_back({q->id, a.id, b.id, std::move(*witness)});
            }
        }
    }
    return out;
}

/// Evidence fields read by each question's rules.
inline std::map<std::string, std::set<std::string>> fields_read_by_question(const std::vector<Rule>& rules) {
    std::map<std::string, std::set<std::string>> out;
    for (const auto& r : rules) {
        for (const auto& c : r.when) out[r.question_id].insert(c.field);
    }
    return out;
}

}  // namespace seqtax
