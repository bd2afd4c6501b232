// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/errors.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

enum class Selection { single, multi };

/// The four top-level interrogatives. WHERE and HOW each own two questions.
enum class QuestionGroup { who, where, how, what };

inline std::string_view to_string(Selection s) { return s == Selection::single ? "single" : "multi"; }

inline std::string_view to_string(QuestionGroup g) {
    switch (g) {
        case QuestionGroup::who: return "who";
        case QuestionGroup::where: return "where";
        case QuestionGroup::how: return "how";
        case QuestionGroup::what: return "what";
    }
    return "who";
}

inline std::optional<Selection> parse_selection(std::string_view s) {
    if (s == "single") return Selection::single;
    if (s == "multi") return Selection::multi;
    return std::nullopt;
}

inline std::optional<QuestionGroup> parse_group(std::string_view s) {
    for (auto g : {QuestionGroup::who, QuestionGroup::where, QuestionGroup::how, QuestionGroup::what}) {
        if (to_string(g) == s) return g;
    }
    return std::nullopt;
}

struct Category {
    std::string id;
    std::string label;
    std::string description;
    std::optional<std::string> parent;

    bool operator==(const Category&) const = default;
};

struct Question {
    std::string id;
    std::string label;
    std::string prompt;
    int order = 0;
    QuestionGroup group = QuestionGroup::who;
    Selection selection = Selection::single;
    std::vector<Category> categories;  // a forest, linked through Category::parent

    const Category* find_category(std::string_view category_id) const {
        auto it = std::find_if(categories.begin(), categories.end(),
                               [&](const Category& c) { return c.id == category_id; });
        return it == categories.end() ? nullptr : &*it;
    }

    bool is_leaf(std::string_view category_id) const {
        return std::none_of(categories.begin(), categories.end(),
                            [&](const Category& c) { return c.parent && *c.parent == category_id; });
    }

    bool operator==(const Question&) const = default;
};

/// Immutable once loaded; safe to share between threads.
struct TaxonomySchema {
    std::string id;
    std::string name;
    std::vector<Question> questions;

    const Question* find_question(std::string_view question_id) const {
        auto it = std::find_if(questions.begin(), questions.end(),
                               [&](const Question& q) { return q.id == question_id; });
        return it == questions.end() ? nullptr : &*it;
    }

    const Question& question(std::string_view question_id) const {
        if (const Question* q = find_question(question_id)) return *q;
        throw NotFound(std::string(question_id), "question");
    }

    /// Questions sorted by ascending order (ties broken by id so the result is total).
    std::vector<const Question*> ordered_questions() const {
        std::vector<const Question*> out;
        out.reserve(questions.size());
        for (const auto& q : questions) out.push_back(&q);
        std::stable_sort(out.begin(), out.end(), [](const Question* a, const Question* b) {
            return a->order != b->order ? a->order < b->order : a->id < b->id;
        });
        return out;
    }

    bool operator==(const TaxonomySchema&) const = default;
};

enum class ViolationCode { duplicate_id, dangling_parent, cycle, empty_question, bad_order };

inline std::string_view to_string(ViolationCode c) {
    switch (c) {
        case ViolationCode::duplicate_id: return "duplicate_id";
        case ViolationCode::dangling_parent: return "dangling_parent";
        case ViolationCode::cycle: return "cycle";
        case ViolationCode::empty_question: return "empty_question";
        case ViolationCode::bad_order: return "bad_order";
    }
    return "duplicate_id";
}

struct SchemaViolation {
    ViolationCode code;
    std::string subject;
    std::string message;

    bool operator==(const SchemaViolation&) const = default;
};

// ---------------------------------------------------------------------------
// Schema file format

inline TaxonomySchema schema_from_json(const json_io::json& doc) {
    json_io::ObjectReader root(doc, "");
    TaxonomySchema schema;
    schema.id = root.required_string("id");
    schema.name = root.required_string("name");
    const auto& questions = root.required_array("questions");
    for (std::size_t i = 0; i < questions.size(); ++i) {
        const std::string qpath = "questions[" + std::to_string(i) + "]";
        json_io::ObjectReader qr(questions[i], qpath);
        Question q;
        q.id = qr.required_string("id");
        q.label = qr.required_string("label");
        q.prompt = qr.required_string("prompt");
        q.order = static_cast<int>(qr.required_integer("order"));
        auto group = qr.required_string("group");
        auto parsed_group = parse_group(group);
        if (!parsed_group) throw ParseError("bad group '" + group + "'", qr.field("group"));
        q.group = *parsed_group;
        auto selection = qr.required_string("selection");
        auto parsed_selection = parse_selection(selection);
        if (!parsed_selection) throw ParseError("bad selection '" + selection + "'", qr.field("selection"));
        q.selection = *parsed_selection;
        const auto& categories = qr.required_array("categories");
        for (std::size_t j = 0; j < categories.size(); ++j) {
            json_io::ObjectReader cr(categories[j], qpath + ".categories[" + std::to_string(j) + "]");
            Category c;
            c.id = cr.required_string("id");
            c.label = cr.required_string("label");
            c.description = cr.required_string("description");
            c.parent = cr.optional_string("parent");
            cr.finish();
            q.categories.push_back(std::move(c));
        }
        qr.finish();
        schema.questions.push_back(std::move(q));
    }
    root.finish();
    return schema;
}

/// Parses a schema document. Structure only; semantics are checked by validate_schema.
inline TaxonomySchema load_schema(std::string_view document) {
    return schema_from_json(json_io::parse(document));
}

inline json_io::ordered_json schema_to_json(const TaxonomySchema& schema) {
    json_io::ordered_json doc;
    doc["id"] = schema.id;
    doc["name"] = schema.name;
    doc["questions"] = json_io::ordered_json::array();
    for (const auto& q : schema.questions) {
        json_io::ordered_json jq;
        jq["id"] = q.id;
        jq["label"] = q.label;
        jq["prompt"] = q.prompt;
        jq["order"] = q.order;
        jq["group"] = to_string(q.group);
        jq["selection"] = to_string(q.selection);
        jq["categories"] = json_io::ordered_json::array();
        for (const auto& c : q.categories) {
            json_io::ordered_json jc;
            jc["id"] = c.id;
            jc["label"] = c.label;
            jc["description"] = c.description;
            if (c.parent) jc["parent"] = *c.parent;
            jq["categories"].push_back(std::move(jc));
        }
        doc["questions"].push_back(std::move(jq));
    }
    return doc;
}

inline std::string serialize_schema(const TaxonomySchema& schema) {
    return schema_to_json(schema).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Validation

/// Returns every structural defect; an empty result means the schema is well-formed.
inline std::vector<SchemaViolation> validate_schema(const TaxonomySchema& schema) {
    std::vector<SchemaViolation> out;
    if (schema.questions.empty()) {
        out.push_back({ViolationCode::empty_question, schema.id, "schema has no questions"});
    }
    std::set<std::string> question_ids;
    std::set<int> orders;
    for (const auto& q : schema.questions) {
        if (!question_ids.insert(q.id).second) {
            out.push_back({ViolationCode::duplicate_id, q.id, "question id '" + q.id + "' repeated"});
        }
        if (!orders.insert(q.order).second) {
            out.push_back({ViolationCode::bad_order, q.id,
                           "question '" + q.id + "' reuses order " + std::to_string(q.order)});
        }
        if (q.categories.empty()) {
            out.push_back({ViolationCode::empty_question, q.id, "question '" + q.id + "' has no categories"});
        }
        std::set<std::string> category_ids;
        for (const auto& c : q.categories) {
            if (!category_ids.insert(c.id).second) {
                out.push_back({ViolationCode::duplicate_id, c.id,
                               "category '" + c.id + "' repeated in question '" + q.id + "'"});
            }
        }
        for (const auto& c : q.categories) {
            if (c.parent && !q.find_category(*c.parent)) {
                out.push_back({ViolationCode::dangling_parent, *c.parent,
                               "category '" + c.id + "' names missing parent '" + *c.parent + "'"});
            }
        }
        for (const auto& c : q.categories) {
            // Walk upward; returning to the start means c sits on a cycle.
            const Category* cur = &c;
            for (std::size_t steps = 0; steps <= q.categories.size() && cur && cur->parent; ++steps) {
                cur = q.find_category(*cur->parent);
                if (cur == &c) {
                    out.push_back({ViolationCode::cycle, c.id,
                                   "category '" + c.id + "' is its own ancestor in question '" + q.id + "'"});
                    break;
                }
            }
        }
        for (const auto& c : q.categories) {
            // No dedicated code for a blank leaf definition; it leaves the question without content.
            if (c.description.empty() && q.is_leaf(c.id)) {
                out.push_back({ViolationCode::empty_question, c.id,
                               "leaf category '" + c.id + "' has no description"});
            }
        }
    }
    return out;
}

/// Root-to-leaf ancestry of a category, ending at category_id.
inline std::vector<std::string> category_path(const TaxonomySchema& schema, std::string_view question_id,
                                              std::string_view category_id) {
    const Question& q = schema.question(question_id);
    const Category* cur = q.find_category(category_id);
    if (!cur) throw NotFound(std::string(category_id), "category");
    std::vector<std::string> path{cur->id};
    while (cur->parent) {
        cur = q.find_category(*cur->parent);
        if (!cur) throw SchemaMismatch(path.back(), "dangling parent above '" + path.back() + "'");
        if (path.size() > q.categories.size()) throw SchemaMismatch(cur->id, "category cycle at '" + cur->id + "'");
        path.push_back(cur->id);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace seqtax
