// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/errors.hpp"
#include "seqtax/evidence.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

enum class ConditionOp { eq, in, present, absent };

inline std::string_view to_string(ConditionOp op) {
    switch (op) {
        case ConditionOp::eq: return "eq";
        case ConditionOp::in: return "in";
        case ConditionOp::present: return "present";
        case ConditionOp::absent: return "absent";
    }
    return "eq";
}

/// One atomic test on an evidence field. For set-valued fields eq/in test membership.
struct Condition {
    std::string field;
    ConditionOp op = ConditionOp::eq;
    std::vector<std::string> values;  // one for eq, any number for in, none otherwise

    bool operator==(const Condition&) const = default;
};

struct Rule {
    std::string id;
    std::string question_id;
    std::string category_id;
    int priority = 0;  // higher wins
    std::vector<Condition> when;  // conjunction

    bool operator==(const Rule&) const = default;
};

inline bool condition_holds(const Condition& c, const std::vector<std::string>& field_values) {
    switch (c.op) {
        case ConditionOp::present: return !field_values.empty();
        case ConditionOp::absent: return field_values.empty();
        case ConditionOp::eq:
        case ConditionOp::in:
            return std::any_of(field_values.begin(), field_values.end(), [&](const std::string& v) {
                return std::find(c.values.begin(), c.values.end(), v) != c.values.end();
            });
    }
    return false;
}

inline bool rule_matches(const Rule& rule, const EvidenceRecord& evidence) {
    for (const auto& c : rule.when) {
        const FieldSpec* f = find_field(c.field);
        if (!f || !condition_holds(c, f->get(evidence))) return false;
    }
    return !rule.when.empty();
}

/// Evaluation order: priority descending, then category id, then rule id.
inline bool rule_precedes(const Rule& a, const Rule& b) {
    if (a.priority != b.priority) return a.priority > b.priority;
    if (a.category_id != b.category_id) return a.category_id < b.category_id;
    return a.id < b.id;
}

/// Throws SchemaMismatch if a rule names a question or category the schema lacks.
inline void check_rules_against(const TaxonomySchema& schema, const std::vector<Rule>& rules) {
    for (const auto& r : rules) {
        const Question* q = schema.find_question(r.question_id);
        if (!q) throw SchemaMismatch(r.id, "rule '" + r.id + "' names unknown question '" + r.question_id + "'");
        if (!q->find_category(r.category_id)) {
            throw SchemaMismatch(r.id, "rule '" + r.id + "' names unknown category '" + r.category_id +
                                           "' in question '" + r.question_id + "'");
        }
    }
}

// ---------------------------------------------------------------------------
// Rules file format

namespace detail {

inline std::string condition_value(const json_io::json& v, const FieldSpec& field, const std::string& path) {
    std::string text;
    switch (field.kind) {
        case FieldKind::boolean:
            if (!v.is_boolean()) throw ParseError("'" + path + "' must be a boolean", path);
            return v.get<bool>() ? "true" : "false";
        case FieldKind::integer:
            if (!v.is_number_integer()) throw ParseError("'" + path + "' must be an integer", path);
            return std::to_string(v.get<std::int64_t>());
        default:
            if (!v.is_string()) throw ParseError("'" + path + "' must be a string", path);
            text = v.get<std::string>();
    }
    if (!field.domain.empty() && std::find(field.domain.begin(), field.domain.end(), text) == field.domain.end()) {
        throw ParseError("'" + path + "' value '" + text + "' is outside the domain of '" + field.name + "'", path);
    }
    return text;
}

inline json_io::ordered_json condition_value_json(const std::string& v, const FieldSpec& field) {
    if (field.kind == FieldKind::boolean) return v == "true";
    if (field.kind == FieldKind::integer) return std::stoll(v);
    return v;
}

}  // namespace detail

inline std::vector<Rule> rules_from_json(const json_io::json& doc) {
    if (!doc.is_array()) throw ParseError("rules document must be an array");
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string path = "[" + std::to_string(i) + "]";
        json_io::ObjectReader r(doc[i], path);
        Rule rule;
        rule.id = r.required_string("id");
        rule.question_id = r.required_string("question");
        rule.category_id = r.required_string("category");
        rule.priority = static_cast<int>(r.required_integer("priority"));
        const auto& when = r.required_array("when");
        if (when.empty()) throw ParseError("rule '" + rule.id + "' has an empty predicate", r.field("when"));
        for (std::size_t k = 0; k < when.size(); ++k) {
            const std::string cpath = r.field("when") + "[" + std::to_string(k) + "]";
            json_io::ObjectReader cr(when[k], cpath);
            Condition c;
            c.field = cr.required_string("field");
            const FieldSpec* field = find_field(c.field);
            if (!field) throw ParseError("unknown evidence field '" + c.field + "'", cr.field("field"));
            auto op = cr.required_string("op");
            if (op == "eq") {
                c.op = ConditionOp::eq;
                c.values.push_back(detail::condition_value(cr.required("value"), *field, cr.field("value")));
            } else if (op == "in") {
                c.op = ConditionOp::in;
                const auto& values = cr.required("value");
                if (!values.is_array() || values.empty()) {
                    throw ParseError("'in' needs a non-empty array value", cr.field("value"));
                }
                for (const auto& v : values) c.values.push_back(detail::condition_value(v, *field, cr.field("value")));
            } else if (op == "present") {
                c.op = ConditionOp::present;
            } else if (op == "absent") {
                c.op = ConditionOp::absent;
            } else {
                throw ParseError("unknown op '" + op + "'", cr.field("op"));
            }
            cr.finish();
            rule.when.push_back(std::move(c));
        }
        r.finish();
        rules.push_back(std::move(rule));
    }
    return rules;
}

inline std::vector<Rule> load_rules(std::string_view document) { return rules_from_json(json_io::parse(document)); }

inline json_io::ordered_json rules_to_json(const std::vector<Rule>& rules) {
    auto doc = json_io::ordered_json::array();
    for (const auto& rule : rules) {
        json_io::ordered_json j;
        j["id"] = rule.id;
        j["question"] = rule.question_id;
        j["category"] = rule.category_id;
        j["priority"] = rule.priority;
        j["when"] = json_io::ordered_json::array();
        for (const auto& c : rule.when) {
            json_io::ordered_json jc;
            jc["field"] = c.field;
            jc["op"] = to_string(c.op);
            const FieldSpec* field = find_field(c.field);
            if (c.op == ConditionOp::eq && field) {
                jc["value"] = detail::condition_value_json(c.values.front(), *field);
            } else if (c.op == ConditionOp::in && field) {
                jc["value"] = json_io::ordered_json::array();
                for (const auto& v : c.values) jc["value"].push_back(detail::condition_value_json(v, *field));
            }
            j["when"].push_back(std::move(jc));
        }
        doc.push_back(std::move(j));
    }
    return doc;
}

inline std::string serialize_rules(const std::vector<Rule>& rules) { return rules_to_json(rules).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Shipped rule set

/// Codifies the category definitions of the built-in schema as predicates.
/// Channel conflicts resolve legacy > undefined > network-to-network >
/// virtualization > user-to-network through priority.
inline const std::vector<Rule>& builtin_rules() {
    static const std::vector<Rule> rules = [] {
        auto eq = [](std::string field, std::string value) {
            return Condition{std::move(field), ConditionOp::eq, {std::move(value)}};
        };
        auto present = [](std::string field) { return Condition{std::move(field), ConditionOp::present, {}}; };
        std::vector<Rule> r;

        r.push_back({"who.joker", "who", "joker", 10, {eq("attacker_motive", "learning_challenge")}});
        r.push_back({"who.white_hat", "who", "white_hat", 10, {eq("attacker_motive", "vulnerability_reporting")}});
        r.push_back({"who.black_hat", "who", "black_hat", 10, {eq("attacker_motive", "damage_or_theft")}});
        r.push_back({"who.little_sisters", "who", "little_sisters", 10,
                     {eq("attacker_motive", "financial_competition"),
                      Condition{"attacker_kind", ConditionOp::in, {"organization", "group"}}}});
        r.push_back({"who.big_brothers", "who", "big_brothers", 10,
                     {eq("attacker_motive", "political"), eq("attacker_kind", "government")}});

        r.push_back({"where_location.host", "where_location", "host_initiated", 10, {eq("initiation", "host")}});
        r.push_back(
            {"where_location.network", "where_location", "network_initiated", 10, {eq("initiation", "network")}});

        const std::pair<const char*, const char*> scopes[] = {
            {"physical_object:computer", "computer"},
            {"physical_object:mobility_device", "mobility_device"},
            {"physical_object:embedded_device", "embedded_device"},
            {"physical_object:network_equipment", "network_equipment"},
            {"host", "host_based"},
            {"local_segment", "local_segment"},
            {"core_network", "segment_to_segment"},
            {"wireless", "wireless_network"},
        };
        for (const auto& [hint, category] : scopes) {
            r.push_back({std::string("where_scope.") + category, "where_scope", category, 10,
                         {eq("target_scope_hint", hint)}});
        }

        const std::pair<const char*, const char*> platforms[] = {
            {"os_or_application", "software"},
            {"physical_access", "hardware"},
            {"firmware", "embedded_hardware"},
            {"mobile_app_or_sms", "mobile"},
        };
        for (const auto& [hint, category] : platforms) {
            r.push_back({std::string("how_platform.") + category, "how_platform", category, 10,
                         {eq("platform_hint", hint)}});
        }

        r.push_back({"how_channel.legacy_ports", "how_channel", "legacy_ports", 50,
                     {eq("channel.standardized_protocol", "true"), present("channel.port")}});
        r.push_back({"how_channel.undefined_ports", "how_channel", "undefined_ports", 40,
                     {eq("channel.standardized_protocol", "false"), present("channel.port")}});
        r.push_back({"how_channel.network_to_network", "how_channel", "network_to_network", 30,
                     {eq("channel.inter_segment_protocol", "true")}});
        r.push_back({"how_channel.virtualization", "how_channel", "virtualization", 20,
                     {eq("channel.virtualization", "true")}});
        r.push_back({"how_channel.user_to_network", "how_channel", "user_to_network", 10,
                     {eq("channel.mitm_or_botnet", "true")}});

        r.push_back({"what.abnormal_system_activity", "what", "abnormal_system_activity", 10,
                     {eq("symptoms", "resource_utilization_anomaly")}});
        r.push_back({"what.traffic_volume", "what", "traffic_volume", 10, {eq("symptoms", "request_flood")}});
        r.push_back({"what.controllable_requests", "what", "controllable_requests", 10,
                     {eq("symptoms", "abnormal_controllable_requests")}});
        return r;
    }();
    return rules;
}

}  // namespace seqtax
