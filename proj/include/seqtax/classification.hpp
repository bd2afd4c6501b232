// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/errors.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

enum class AssignmentStatus { assigned, unknown };

inline std::string_view to_string(AssignmentStatus s) { return s == AssignmentStatus::assigned ? "assigned" : "unknown"; }

struct Assignment {
    std::string question_id;
    AssignmentStatus status = AssignmentStatus::unknown;
    std::vector<std::string> categories;  // empty iff unknown
    std::vector<std::string> rationale;   // ids of the rules that produced the answer

    bool assigned() const { return status == AssignmentStatus::assigned; }
    bool operator==(const Assignment&) const = default;
};

/// One assignment per schema question, in question order.
struct Classification {
    std::string schema_id;
    std::vector<Assignment> assignments;

    const Assignment* find(std::string_view question_id) const {
        auto it = std::find_if(assignments.begin(), assignments.end(),
                               [&](const Assignment& a) { return a.question_id == question_id; });
        return it == assignments.end() ? nullptr : &*it;
    }

    const Assignment& at(std::string_view question_id) const {
        if (const Assignment* a = find(question_id)) return *a;
        throw NotFound(std::string(question_id), "question");
    }

    bool operator==(const Classification&) const = default;
};

/// Equality on answers alone (status and categories), ignoring rationale.
inline bool same_answers(const Classification& a, const Classification& b) {
    if (a.schema_id != b.schema_id || a.assignments.size() != b.assignments.size()) return false;
    for (std::size_t i = 0; i < a.assignments.size(); ++i) {
        const auto& x = a.assignments[i];
        const auto& y = b.assignments[i];
        if (x.question_id != y.question_id || x.status != y.status || x.categories != y.categories) return false;
    }
    return true;
}

/// Throws SchemaMismatch unless c covers each schema question exactly once with
/// resolvable categories and legal arity.
inline void check_classification(const TaxonomySchema& schema, const Classification& c) {
    if (c.schema_id != schema.id) {
        throw SchemaMismatch(c.schema_id, "classification is for schema '" + c.schema_id + "', not '" + schema.id + "'");
    }
    std::set<std::string> seen;
    for (const auto& a : c.assignments) {
        const Question* q = schema.find_question(a.question_id);
        if (!q) throw SchemaMismatch(a.question_id, "unknown question '" + a.question_id + "'");
        if (!seen.insert(a.question_id).second) {
            throw SchemaMismatch(a.question_id, "question '" + a.question_id + "' answered twice");
        }
        if (a.assigned() == a.categories.empty()) {
            throw SchemaMismatch(a.question_id, "status and categories disagree for '" + a.question_id + "'");
        }
        if (q->selection == Selection::single && a.categories.size() > 1) {
            throw SchemaMismatch(a.question_id, "single-select question '" + a.question_id + "' has several answers");
        }
        for (const auto& cat : a.categories) {
            if (!q->find_category(cat)) {
                throw SchemaMismatch(cat, "category '" + cat + "' not in question '" + a.question_id + "'");
            }
        }
    }
    if (seen.size() != schema.questions.size()) {
        throw SchemaMismatch(schema.id, "classification does not cover every question");
    }
}

/// A classification with every question unknown.
inline Classification unknown_classification(const TaxonomySchema& schema) {
    Classification c{schema.id, {}};
    for (const Question* q : schema.ordered_questions()) c.assignments.push_back({q->id, AssignmentStatus::unknown, {}, {}});
    return c;
}

inline json_io::ordered_json classification_to_json(const Classification& c) {
    json_io::ordered_json j;
    j["schema_id"] = c.schema_id;
    j["assignments"] = json_io::ordered_json::array();
    for (const auto& a : c.assignments) {
        json_io::ordered_json ja;
        ja["question_id"] = a.question_id;
        ja["status"] = to_string(a.status);
        ja["categories"] = a.categories;
        ja["rationale"] = a.rationale;
        j["assignments"].push_back(std::move(ja));
    }
    return j;
}

inline Classification classification_from_json(const json_io::json& doc, const std::string& path = "") {
    json_io::ObjectReader r(doc, path);
    Classification c;
    c.schema_id = r.required_string("schema_id");
    const auto& assignments = r.required_array("assignments");
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        json_io::ObjectReader ar(assignments[i], r.field("assignments") + "[" + std::to_string(i) + "]");
        Assignment a;
        a.question_id = ar.required_string("question_id");
        auto status = ar.required_string("status");
        if (status == "assigned") {
            a.status = AssignmentStatus::assigned;
        } else if (status == "unknown") {
            a.status = AssignmentStatus::unknown;
        } else {
            throw ParseError("bad status '" + status + "'", ar.field("status"));
        }
        a.categories = ar.string_list("categories", true);
        a.rationale = ar.string_list("rationale", false);
        ar.finish();
        c.assignments.push_back(std::move(a));
    }
    r.finish();
    return c;
}

}  // namespace seqtax
