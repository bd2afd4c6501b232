// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/classification.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

/// Fires when any question of its group is answered, or, when categories is
/// non-empty, when an answered question of the group holds one of them.
struct ActionTrigger {
    std::vector<std::string> categories;

    bool any_answer() const { return categories.empty(); }
    bool operator==(const ActionTrigger&) const = default;
};

struct DefenseAction {
    std::string id;
    QuestionGroup group = QuestionGroup::who;
    ActionTrigger trigger;
    std::string text;

    bool operator==(const DefenseAction&) const = default;
};

struct PlanEntry {
    QuestionGroup group;
    DefenseAction action;

    bool operator==(const PlanEntry&) const = default;
};

struct DefensePlan {
    std::string attack_name;
    std::vector<PlanEntry> entries;  // question-group order, no repeated action ids

    bool operator==(const DefensePlan&) const = default;
};

// Trigger text: "any_answer" or "category:<id>[,<id>...]".
inline std::string trigger_to_string(const ActionTrigger& t) {
    if (t.any_answer()) return "any_answer";
    std::string out = "category:";
    for (std::size_t i = 0; i < t.categories.size(); ++i) out += (i ? "," : "") + t.categories[i];
    return out;
}

inline ActionTrigger parse_trigger(std::string_view text, const std::string& subject) {
    if (text == "any_answer") return {};
    constexpr std::string_view prefix = "category:";
    if (!text.starts_with(prefix) || text.size() == prefix.size()) {
        throw ParseError("bad trigger '" + std::string(text) + "'", subject);
    }
    ActionTrigger t;
    std::string_view rest = text.substr(prefix.size());
    while (true) {
        auto comma = rest.find(',');
        auto id = rest.substr(0, comma);
        if (id.empty()) throw ParseError("empty category in trigger '" + std::string(text) + "'", subject);
        t.categories.emplace_back(id);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return t;
}

/// Throws SchemaMismatch for blank text or trigger categories outside the action's group.
inline void check_actions_against(const TaxonomySchema& schema, const std::vector<DefenseAction>& actions) {
    for (const auto& a : actions) {
        if (a.text.empty()) throw SchemaMismatch(a.id, "action '" + a.id + "' has no text");
        for (const auto& cat : a.trigger.categories) {
            bool found = std::any_of(schema.questions.begin(), schema.questions.end(), [&](const Question& q) {
                return q.group == a.group && q.find_category(cat);
            });
            if (!found) {
                throw SchemaMismatch(a.id, "action '" + a.id + "' triggers on unknown category '" + cat + "'");
            }
        }
    }
}

/// Defense actions for every answered question group. Unknown questions add nothing.
inline DefensePlan plan(const TaxonomySchema& schema, const std::vector<DefenseAction>& actions,
                        const Classification& classification, std::string attack_name = {}) {
    check_classification(schema, classification);
    check_actions_against(schema, actions);

    // Group order follows the first question of each group.
    std::vector<QuestionGroup> groups;
    for (const Question* q : schema.ordered_questions()) {
        if (std::find(groups.begin(), groups.end(), q->group) == groups.end()) groups.push_back(q->group);
    }

    DefensePlan result{std::move(attack_name), {}};
    std::set<std::string> emitted;
    for (QuestionGroup g : groups) {
        std::set<std::string> answered_categories;
        bool answered = false;
        for (const auto& a : classification.assignments) {
            if (!a.assigned() || schema.question(a.question_id).group != g) continue;
            answered = true;
            answered_categories.insert(a.categories.begin(), a.categories.end());
        }
        if (!answered) continue;
        for (const auto& action : actions) {
            if (action.group != g || emitted.contains(action.id)) continue;
            bool fires = action.trigger.any_answer() ||
                         std::any_of(action.trigger.categories.begin(), action.trigger.categories.end(),
                                     [&](const std::string& c) { return answered_categories.contains(c); });
            if (fires) {
                emitted.insert(action.id);
                result.entries.push_back({g, action});
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Actions file format

inline std::vector<DefenseAction> actions_from_json(const json_io::json& doc) {
    if (!doc.is_array()) throw ParseError("actions document must be an array");
    std::vector<DefenseAction> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        json_io::ObjectReader r(doc[i], "[" + std::to_string(i) + "]");
        DefenseAction a;
        a.id = r.required_string("id");
        auto group = r.required_string("group");
        auto parsed = parse_group(group);
        if (!parsed) throw ParseError("bad group '" + group + "'", r.field("group"));
        a.group = *parsed;
        a.trigger = parse_trigger(r.required_string("trigger"), r.field("trigger"));
        a.text = r.required_string("text");
        r.finish();
        out.push_back(std::move(a));
    }
    return out;
}

inline std::vector<DefenseAction> load_actions(std::string_view document) {
    return actions_from_json(json_io::parse(document));
}

inline json_io::ordered_json actions_to_json(const std::vector<DefenseAction>& actions) {
    auto doc = json_io::ordered_json::array();
    for (const auto& a : actions) {
        json_io::ordered_json j;
        j["id"] = a.id;
        j["group"] = to_string(a.group);
        j["trigger"] = trigger_to_string(a.trigger);
        j["text"] = a.text;
        doc.push_back(std::move(j));
    }
    return doc;
}

inline std::string serialize_actions(const std::vector<DefenseAction>& actions) {
    return actions_to_json(actions).dump(2) + "\n";
}

inline json_io::ordered_json plan_to_json(const DefensePlan& p) {
    json_io::ordered_json j;
    j["attack_name"] = p.attack_name;
    j["entries"] = json_io::ordered_json::array();
    for (const auto& e : p.entries) {
        json_io::ordered_json je;
        je["group"] = to_string(e.group);
        je["action_id"] = e.action.id;
        je["text"] = e.action.text;
        j["entries"].push_back(std::move(je));
    }
    return j;
}

// ---------------------------------------------------------------------------
// Shipped actions

inline const std::vector<DefenseAction>& builtin_actions() {
    static const std::vector<DefenseAction> actions = {
        // The four numbered WHO responses; jokers and black hats share the first.
        {"who.pursue_attacker", QuestionGroup::who, {{"black_hat", "joker"}},
         "Take action against attacker after that secure system"},
        {"who.thank_reporter", QuestionGroup::who, {{"white_hat"}},
         "Secure system and thanks for identifying vulnerability"},
        {"who.international_resolution", QuestionGroup::who, {{"big_brothers"}}, "International meeting and resolve"},
        {"who.secure_and_save", QuestionGroup::who, {{"little_sisters"}}, "Just secure system and save system"},
        {"where.install_filtering", QuestionGroup::where, {},
         "Install filtering systems like firewalls, spam filters, censorware and wiretaps"},
        {"where.mark_risky", QuestionGroup::where, {},
         "Mark certain systems and devices as risky for easy identification and recovery"},
        {"how.isolate", QuestionGroup::how, {}, "Take extra care or isolate those parts for extra care"},
        {"what.safety_level", QuestionGroup::what, {}, "Decide the safety level that should be installed"},
        {"what.avoid_result", QuestionGroup::what, {}, "Avoidance of result from the particular system"},
    };
    return actions;
}

inline DefensePlan plan(const TaxonomySchema& schema, const Classification& classification,
                        std::string attack_name = {}) {
    return plan(schema, builtin_actions(), classification, std::move(attack_name));
}

}  // namespace seqtax
