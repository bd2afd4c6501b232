// SPDX-License-Identifier: Apache-2.0
#pragma once

// Structured observations about one attack, plus the field registry the rule
// engine uses to read and (for witness construction) write them by name.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/errors.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

enum class Motive { learning_challenge, vulnerability_reporting, damage_or_theft, financial_competition, political };
enum class AttackerKind { individual, group, organization, government };
enum class Initiation { host, network };
enum class SourceCount { single, multiple };
enum class ScopeHint {
    physical_computer,
    physical_mobility_device,
    physical_embedded_device,
    physical_network_equipment,
    host,
    local_segment,
    core_network,
    wireless,
};
enum class PlatformHint { os_or_application, physical_access, firmware, mobile_app_or_sms };
enum class Transport { tcp, udp };
enum class Symptom { resource_utilization_anomaly, request_flood, abnormal_controllable_requests };

template <class E>
struct EnumNames;

template <>
struct EnumNames<Motive> {
    static constexpr std::array<std::string_view, 5> names{
        "learning_challenge", "vulnerability_reporting", "damage_or_theft", "financial_competition", "political"};
};
template <>
struct EnumNames<AttackerKind> {
    static constexpr std::array<std::string_view, 4> names{"individual", "group", "organization", "government"};
};
template <>
struct EnumNames<Initiation> {
    static constexpr std::array<std::string_view, 2> names{"host", "network"};
};
template <>
struct EnumNames<SourceCount> {
    static constexpr std::array<std::string_view, 2> names{"single", "multiple"};
};
template <>
struct EnumNames<ScopeHint> {
    static constexpr std::array<std::string_view, 8> names{
        "physical_object:computer", "physical_object:mobility_device", "physical_object:embedded_device",
        "physical_object:network_equipment", "host", "local_segment", "core_network", "wireless"};
};
template <>
struct EnumNames<PlatformHint> {
    static constexpr std::array<std::string_view, 4> names{"os_or_application", "physical_access", "firmware",
                                                           "mobile_app_or_sms"};
};
template <>
struct EnumNames<Transport> {
    static constexpr std::array<std::string_view, 2> names{"tcp", "udp"};
};
template <>
struct EnumNames<Symptom> {
    static constexpr std::array<std::string_view, 3> names{"resource_utilization_anomaly", "request_flood",
                                                           "abnormal_controllable_requests"};
};

template <class E>
std::string_view name_of(E value) {
    return EnumNames<E>::names[static_cast<std::size_t>(value)];
}

template <class E>
std::optional<E> enum_from_name(std::string_view name) {
    const auto& names = EnumNames<E>::names;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<E>(i);
    }
    return std::nullopt;
}

template <class E>
std::vector<std::string> enum_domain() {
    return {EnumNames<E>::names.begin(), EnumNames<E>::names.end()};
}

struct ChannelEvidence {
    std::optional<std::uint16_t> port;
    std::optional<Transport> transport;
    std::optional<bool> standardized_protocol;
    std::optional<bool> virtualization;
    std::optional<bool> mitm_or_botnet;
    std::optional<bool> inter_segment_protocol;

    bool operator==(const ChannelEvidence&) const = default;
};

struct EvidenceRecord {
    std::string attack_name;
    std::optional<Motive> attacker_motive;
    std::optional<AttackerKind> attacker_kind;
    std::optional<std::string> attacker_name;
    std::optional<Initiation> initiation;
    std::optional<SourceCount> source_count;
    std::optional<ScopeHint> target_scope_hint;
    std::optional<PlatformHint> platform_hint;
    std::optional<ChannelEvidence> channel;
    std::set<Symptom> symptoms;
    std::vector<std::string> vulnerability_refs;  // free-form, e.g. CVE ids; never classified
    std::optional<std::string> notes;

    bool operator==(const EvidenceRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Field registry

enum class FieldKind { enumeration, boolean, integer, text, set };

/// A named evidence attribute. Values travel as canonical strings: enum names,
/// "true"/"false", decimal integers. An empty value list means absent.
struct FieldSpec {
    std::string name;
    FieldKind kind;
    std::vector<std::string> domain;  // closed value set for enumeration/boolean/set kinds
    bool multi_valued = false;         // set or list: a record may hold several values at once
    std::function<std::vector<std::string>(const EvidenceRecord&)> get;
    std::function<void(EvidenceRecord&, const std::vector<std::string>&)> set;
};

namespace detail {

template <class E>
FieldSpec enum_field(std::string name, std::optional<E> EvidenceRecord::*member) {
    return FieldSpec{
        name, FieldKind::enumeration, enum_domain<E>(), false,
        [member](const EvidenceRecord& e) -> std::vector<std::string> {
            if (!(e.*member)) return {};
            return {std::string(name_of(*(e.*member)))};
        },
        [member](EvidenceRecord& e, const std::vector<std::string>& v) {
            if (v.empty()) {
                e.*member = std::nullopt;
            } else {
                e.*member = enum_from_name<E>(v.front());
            }
        }};
}

inline std::vector<std::string> bool_value(const std::optional<bool>& b) {
    if (!b) return {};
    return {*b ? "true" : "false"};
}

inline FieldSpec channel_flag(std::string name, std::optional<bool> ChannelEvidence::*member) {
    return FieldSpec{
        "channel." + name, FieldKind::boolean, {"false", "true"}, false,
        [member](const EvidenceRecord& e) {
            return e.channel ? bool_value((*e.channel).*member) : std::vector<std::string>{};
        },
        [member](EvidenceRecord& e, const std::vector<std::string>& v) {
            if (v.empty()) {
                if (e.channel) (*e.channel).*member = std::nullopt;
                return;
            }
            if (!e.channel) e.channel.emplace();
            (*e.channel).*member = v.front() == "true";
        }};
}

inline std::vector<FieldSpec> make_registry() {
    std::vector<FieldSpec> fields;
    fields.push_back(enum_field<Motive>("attacker_motive", &EvidenceRecord::attacker_motive));
    fields.push_back(enum_field<AttackerKind>("attacker_kind", &EvidenceRecord::attacker_kind));
    fields.push_back(FieldSpec{
        "attacker_name", FieldKind::text, {}, false,
        [](const EvidenceRecord& e) {
            return e.attacker_name ? std::vector<std::string>{*e.attacker_name} : std::vector<std::string>{};
        },
        [](EvidenceRecord& e, const std::vector<std::string>& v) {
            e.attacker_name = v.empty() ? std::nullopt : std::optional<std::string>(v.front());
        }});
    fields.push_back(enum_field<Initiation>("initiation", &EvidenceRecord::initiation));
    fields.push_back(enum_field<SourceCount>("source_count", &EvidenceRecord::source_count));
    fields.push_back(enum_field<ScopeHint>("target_scope_hint", &EvidenceRecord::target_scope_hint));
    fields.push_back(enum_field<PlatformHint>("platform_hint", &EvidenceRecord::platform_hint));
    fields.push_back(FieldSpec{
        "channel.port", FieldKind::integer, {}, false,
        [](const EvidenceRecord& e) {
            if (!e.channel || !e.channel->port) return std::vector<std::string>{};
            return std::vector<std::string>{std::to_string(*e.channel->port)};
        },
        [](EvidenceRecord& e, const std::vector<std::string>& v) {
            if (v.empty()) {
                if (e.channel) e.channel->port = std::nullopt;
                return;
            }
            if (!e.channel) e.channel.emplace();
            e.channel->port = static_cast<std::uint16_t>(std::stoul(v.front()));
        }});
    fields.push_back(FieldSpec{
        "channel.transport", FieldKind::enumeration, enum_domain<Transport>(), false,
        [](const EvidenceRecord& e) {
            if (!e.channel || !e.channel->transport) return std::vector<std::string>{};
            return std::vector<std::string>{std::string(name_of(*e.channel->transport))};
        },
        [](EvidenceRecord& e, const std::vector<std::string>& v) {
            if (v.empty()) {
                if (e.channel) e.channel->transport = std::nullopt;
                return;
            }
            if (!e.channel) e.channel.emplace();
            e.channel->transport = enum_from_name<Transport>(v.front());
        }});
    fields.push_back(channel_flag("standardized_protocol", &ChannelEvidence::standardized_protocol));
    fields.push_back(channel_flag("virtualization", &ChannelEvidence::virtualization));
    fields.push_back(channel_flag("mitm_or_botnet", &ChannelEvidence::mitm_or_botnet));
    fields.push_back(channel_flag("inter_segment_protocol", &ChannelEvidence::inter_segment_protocol));
    fields.push_back(FieldSpec{
        "symptoms", FieldKind::set, enum_domain<Symptom>(), true,
        [](const EvidenceRecord& e) {
            std::vector<std::string> out;
            for (auto s : e.symptoms) out.emplace_back(name_of(s));
            return out;
        },
        [](EvidenceRecord& e, const std::vector<std::string>& v) {
            e.symptoms.clear();
            for (const auto& s : v) {
                if (auto parsed = enum_from_name<Symptom>(s)) e.symptoms.insert(*parsed);
            }
        }});
    fields.push_back(FieldSpec{
        "vulnerability_refs", FieldKind::text, {}, true,
        [](const EvidenceRecord& e) { return e.vulnerability_refs; },
        [](EvidenceRecord& e, const std::vector<std::string>& v) { e.vulnerability_refs = v; }});
    fields.push_back(FieldSpec{
        "notes", FieldKind::text, {}, false,
        [](const EvidenceRecord& e) {
            return e.notes ? std::vector<std::string>{*e.notes} : std::vector<std::string>{};
        },
        [](EvidenceRecord& e, const std::vector<std::string>& v) {
            e.notes = v.empty() ? std::nullopt : std::optional<std::string>(v.front());
        }});
    return fields;
}

}  // namespace detail

/// Every evidence attribute a rule condition may name.
inline const std::vector<FieldSpec>& evidence_fields() {
    static const std::vector<FieldSpec> registry = detail::make_registry();
    return registry;
}

inline const FieldSpec* find_field(std::string_view name) {
    for (const auto& f : evidence_fields()) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Evidence file format

namespace detail {

template <class E>
std::optional<E> read_enum(json_io::ObjectReader& r, const std::string& key) {
    auto text = r.optional_string(key);
    if (!text) return std::nullopt;
    auto value = enum_from_name<E>(*text);
    if (!value) throw ParseError("field '" + r.field(key) + "' has unknown value '" + *text + "'", r.field(key));
    return value;
}

}  // namespace detail

inline EvidenceRecord evidence_from_json(const json_io::json& doc, const std::string& path = "") {
    json_io::ObjectReader r(doc, path);
    EvidenceRecord e;
    e.attack_name = r.optional_string("attack_name").value_or("");
    e.attacker_motive = detail::read_enum<Motive>(r, "attacker_motive");
    e.attacker_kind = detail::read_enum<AttackerKind>(r, "attacker_kind");
    e.attacker_name = r.optional_string("attacker_name");
    e.initiation = detail::read_enum<Initiation>(r, "initiation");
    e.source_count = detail::read_enum<SourceCount>(r, "source_count");
    e.target_scope_hint = detail::read_enum<ScopeHint>(r, "target_scope_hint");
    e.platform_hint = detail::read_enum<PlatformHint>(r, "platform_hint");
    if (const auto* channel = r.optional("channel")) {
        json_io::ObjectReader cr(*channel, r.field("channel"));
        ChannelEvidence c;
        if (auto port = cr.optional_integer("port")) {
            if (*port < 0 || *port > 65535) {
                throw ParseError("field '" + cr.field("port") + "' must be in [0, 65535]", cr.field("port"));
            }
            c.port = static_cast<std::uint16_t>(*port);
        }
        c.transport = detail::read_enum<Transport>(cr, "transport");
        c.standardized_protocol = cr.optional_bool("standardized_protocol");
        c.virtualization = cr.optional_bool("virtualization");
        c.mitm_or_botnet = cr.optional_bool("mitm_or_botnet");
        c.inter_segment_protocol = cr.optional_bool("inter_segment_protocol");
        cr.finish();
        e.channel = c;
    }
    for (const auto& s : r.string_list("symptoms", false)) {
        auto symptom = enum_from_name<Symptom>(s);
        if (!symptom) throw ParseError("field '" + r.field("symptoms") + "' has unknown value '" + s + "'", r.field("symptoms"));
        e.symptoms.insert(*symptom);
    }
    e.vulnerability_refs = r.string_list("vulnerability_refs", false);
    e.notes = r.optional_string("notes");
    r.finish();
    return e;
}

inline EvidenceRecord load_evidence(std::string_view document) {
    return evidence_from_json(json_io::parse(document));
}

inline json_io::ordered_json evidence_to_json(const EvidenceRecord& e) {
    json_io::ordered_json j;
    j["attack_name"] = e.attack_name;
    if (e.attacker_motive) j["attacker_motive"] = name_of(*e.attacker_motive);
    if (e.attacker_kind) j["attacker_kind"] = name_of(*e.attacker_kind);
    if (e.attacker_name) j["attacker_name"] = *e.attacker_name;
    if (e.initiation) j["initiation"] = name_of(*e.initiation);
    if (e.source_count) j["source_count"] = name_of(*e.source_count);
    if (e.target_scope_hint) j["target_scope_hint"] = name_of(*e.target_scope_hint);
    if (e.platform_hint) j["platform_hint"] = name_of(*e.platform_hint);
    if (e.channel) {
        json_io::ordered_json c = json_io::ordered_json::object();
        const auto& ch = *e.channel;
        if (ch.port) c["port"] = *ch.port;
        if (ch.transport) c["transport"] = name_of(*ch.transport);
        if (ch.standardized_protocol) c["standardized_protocol"] = *ch.standardized_protocol;
        if (ch.virtualization) c["virtualization"] = *ch.virtualization;
        if (ch.mitm_or_botnet) c["mitm_or_botnet"] = *ch.mitm_or_botnet;
        if (ch.inter_segment_protocol) c["inter_segment_protocol"] = *ch.inter_segment_protocol;
        j["channel"] = std::move(c);
    }
    j["symptoms"] = json_io::ordered_json::array();
    for (auto s : e.symptoms) j["symptoms"].push_back(name_of(s));
    j["vulnerability_refs"] = e.vulnerability_refs;
    if (e.notes) j["notes"] = *e.notes;
    return j;
}

}  // namespace seqtax
