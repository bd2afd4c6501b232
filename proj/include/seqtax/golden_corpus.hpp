// SPDX-License-Identifier: Apache-2.0
#pragma once

// The five worked attacks: reconstructed evidence, the curated sequential
// answers, and the other taxonomies' rows transcribed verbatim.

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "seqtax/builtin_schema.hpp"
#include "seqtax/classification.hpp"
#include "seqtax/corpus.hpp"
#include "seqtax/evidence.hpp"

namespace seqtax {

namespace detail {

inline Classification curated_row(const std::map<std::string, std::vector<std::string>>& answers) {
    Classification c = unknown_classification(builtin_sequential_schema());
    for (auto& a : c.assignments) {
        auto it = answers.find(a.question_id);
        if (it == answers.end()) continue;
        a.status = AssignmentStatus::assigned;
        a.categories = it->second;
    }
    return c;
}

inline AnnotationRow row(std::initializer_list<std::pair<std::string, std::string>> cells) { return cells; }

inline AnnotationRow verdict_row(std::string validation, std::string exposure, std::string randomness,
                                 std::string reallocation) {
    AnnotationRow out;
    // Blank cells in the source table are not carried.
    if (!validation.empty()) out.emplace_back("Inappropriate Validation", validation);
    if (!exposure.empty()) out.emplace_back("Inappropriate Exposure", exposure);
    if (!randomness.empty()) out.emplace_back("Inappropriate Randomness", randomness);
    if (!reallocation.empty()) out.emplace_back("Inappropriate Reallocation", reallocation);
    return out;
}

inline AnnotationRow howard_row(std::string tools, std::string weakness, std::string action, std::string goal,
                                std::string outcome) {
    return {{"Attack utensils, tools", tools}, {"Threat Weakness", weakness}, {"Action", action},
            {"Attack Goal", goal}, {"Unlawful outcome", outcome}};
}

inline AnnotationRow hansman_row(std::string first, std::string second, std::string third, std::string fourth) {
    return {{"First Dimension", first}, {"Second Dimension", second}, {"Third Dimension", third},
            {"Fourth Dimension", fourth}};
}

inline AnnotationRow admit_row(std::string vector, std::string defence, std::string method, std::string impact,
                               std::string target) {
    return {{"Attack Vector", vector}, {"Defence", defence}, {"Method", method}, {"Impact", impact},
            {"Target", target}};
}

inline AnnotationRow avoidit_row(std::string vector, std::string operational, std::string defence,
                                 std::string impact, std::string target) {
    return {{"Attack Vector", vector}, {"Operational Impact", operational}, {"Defence", defence},
            {"Impact", impact}, {"Target", target}};
}

inline AttackDossier blaster() {
    AttackDossier d;
    d.name = "Blaster";
    auto& e = d.evidence;
    e.attack_name = "Blaster";
    e.attacker_motive = Motive::damage_or_theft;
    e.attacker_kind = AttackerKind::individual;
    e.attacker_name = "Jeffrey Parson";
    e.initiation = Initiation::host;
    e.source_count = SourceCount::single;
    e.target_scope_hint = ScopeHint::host;
    e.platform_hint = PlatformHint::firmware;
    e.channel = ChannelEvidence{135, Transport::tcp, true, {}, {}, {}};
    e.symptoms = {Symptom::abnormal_controllable_requests};
    e.vulnerability_refs = {"CAN-2003-0352"};
    e.notes = "Internet worm against Windows XP and 2000 (August 2003). Once in, it listens on TCP port 4444 "
              "for commands and fetches its payload over UDP port 69.";
    d.curated = curated_row({{"who", {"black_hat"}},
                             {"where_location", {"host_initiated"}},
                             {"where_scope", {"host_based"}},
                             {"how_platform", {"embedded_hardware"}},
                             {"how_channel", {"legacy_ports"}},
                             {"what", {"controllable_requests"}}});
    d.annotations["verdict"] = verdict_row("None (X)", "None (X)", "", "");
    d.annotations["howard"] =
        howard_row("Computer Program", "The overflow of the Buffer", "Change", "Computer Network", "Data tampering");
    d.annotations["hansman_hunt"] =
        hansman_row("System Network-based Worm", "Network", "CAN-2003-0352", "TCP and UDP overflow, DoS");
    d.annotations["admit"] = admit_row("The overflow of the buffer", "While listing patch method", "System virus",
                                       "Distort", "MS XP and MS 2000");
    d.provenance =
        "Blaster worked example. Sequential cells: Who 'Black-hat hackers (Jeffrey Parson)'; Where 'Initiated by "
        "the host a Single PC attack (already attacked PC)'; How 'Embedded legacy network equipment port (TCP port "
        "135)'; What 'Controllable request (Can control TCP port 4444 and UDP port 69)'. Evidence reconstructed from "
        "these cells and the attack facts given with them.";
    return d;
}

inline AttackDossier melissa() {
    AttackDossier d;
    d.name = "Melissa";
    auto& e = d.evidence;
    e.attack_name = "Melissa";
    e.attacker_motive = Motive::learning_challenge;
    e.attacker_kind = AttackerKind::individual;
    e.attacker_name = "Kwyjibo";
    e.initiation = Initiation::network;
    e.source_count = SourceCount::multiple;
    e.target_scope_hint = ScopeHint::wireless;
    e.platform_hint = PlatformHint::os_or_application;
    e.channel = ChannelEvidence{{}, {}, {}, {}, true, {}};
    e.symptoms = {Symptom::resource_utilization_anomaly};
    e.notes = "Word macro virus spread by bulk e-mail (March 1999); filled mail servers. The Where cell mixes "
              "location, scope and platform; it is read here as network-initiated, wireless scope, software "
              "platform. That reading is an interpretation.";
    d.curated = curated_row({{"who", {"joker"}},
                             {"where_location", {"network_initiated"}},
                             {"where_scope", {"wireless_network"}},
                             {"how_platform", {"software"}},
                             {"how_channel", {"user_to_network"}},
                             {"what", {"abnormal_system_activity"}}});
    d.annotations["verdict"] = verdict_row("", "None (X)", "", "None (X)");
    d.annotations["howard"] = howard_row("Script", "Setup", "Verification", "Information", "Data tampering");
    d.annotations["hansman_hunt"] = hansman_row("Bulk-emailing worm", "MS word 97 and MS 2000", "Setup",
                                                "Macro worm & TCP data packet overflow");
    d.annotations["admit"] =
        admit_row("Setup in a wrong way", "Path system", "Virus: Bulk emailing", "Disrupt", "App: MSW 97, 2000");
    d.annotations["avoidit"] = avoidit_row("Misconfiguration", "Attack with email", "List email addresses",
                                           "Identify other ways", "Microsoft products");
    d.provenance =
        "Melissa worked example. Sequential cells: Who 'Joker (Kwyjibo)'; Where 'Initiated by multiple PC of "
        "wireless media with software level hacking tool'; How 'User to network channel use which brings'; What "
        "'Abnormal system activity'. The Where cell is split across location, scope and platform.";
    return d;
}

inline AttackDossier slammer() {
    AttackDossier d;
    d.name = "Slammer";
    auto& e = d.evidence;
    e.attack_name = "Slammer";
    e.attacker_motive = Motive::vulnerability_reporting;
    e.attacker_kind = AttackerKind::group;
    e.attacker_name = "Benny, 29A";
    e.initiation = Initiation::host;
    e.source_count = SourceCount::single;
    e.target_scope_hint = ScopeHint::host;
    e.platform_hint = PlatformHint::os_or_application;
    // standardized_protocol stays unset: the row names the user-to-network channel, not a port channel.
    e.channel = ChannelEvidence{1434, Transport::udp, {}, {}, true, {}};
    e.symptoms = {Symptom::abnormal_controllable_requests};
    e.vulnerability_refs = {"CAN-2002-0649"};
    e.notes = "Also known as SQLExp, Sapphire or Helkern (January 2003). A single UDP packet overwrites the "
              "stack of Microsoft SQL Server 2000.";
    d.curated = curated_row({{"who", {"white_hat"}},
                             {"where_location", {"host_initiated"}},
                             {"where_scope", {"host_based"}},
                             {"how_platform", {"software"}},
                             {"how_channel", {"user_to_network"}},
                             {"what", {"controllable_requests"}}});
    d.annotations["verdict"] = verdict_row("None (X)", "None (X)", "", "");
    d.annotations["howard"] =
        howard_row("Computer Script", "Setup and design", "Problem, change", "System Network", "Data corrupt");
    d.annotations["hansman_hunt"] = hansman_row("Computer network-Aware worm", "Microsoft SQL Server 2000",
                                                "CAN-2002-0649", "Buffer run-off and UDP data flood and DoS");
    d.annotations["avoidit"] = avoidit_row("Misconfiguration", "Setup virus and malware: Network-based",
                                           "Moderation style: Whitelist CVE- 0649", "Discover", "Network");
    d.annotations["admit"] =
        admit_row("Wrong setup", "A patch of the system", "Virus: setup worm", "Identification", "Network");
    d.provenance =
        "Slammer worked example. Sequential cells: Who 'White-hat hackers (Benny, 29A)'; Where 'Single PC, Host "
        "base attack (overwrites the stacks)'; How 'Software attack on the buffer with User-to-network channel "
        "(UDP, port 1434)'; What 'Controllable request'.";
    return d;
}

inline AttackDossier morris() {
    AttackDossier d;
    d.name = "Morris";
    auto& e = d.evidence;
    e.attack_name = "Morris";
    e.attacker_motive = Motive::learning_challenge;
    e.attacker_kind = AttackerKind::individual;
    e.attacker_name = "Robert Morris, Jr.";
    e.initiation = Initiation::network;
    e.source_count = SourceCount::multiple;
    e.target_scope_hint = ScopeHint::host;
    e.platform_hint = PlatformHint::os_or_application;
    e.channel = ChannelEvidence{{}, {}, {}, {}, {}, true};
    e.symptoms = {Symptom::abnormal_controllable_requests};
    e.notes = "The Great Worm (November 1988), written at Cornell and released at MIT; hit BSD and SunOS hosts. "
              "'Multiple PC and Host' is read as network-initiated with host scope.";
    d.curated = curated_row({{"who", {"joker"}},
                             {"where_location", {"network_initiated"}},
                             {"where_scope", {"host_based"}},
                             {"how_platform", {"software"}},
                             {"how_channel", {"network_to_network"}},
                             {"what", {"controllable_requests"}}});
    d.annotations["hansman_hunt"] =
        hansman_row("Computer network-based virus", "BSD four (4) and Sun three (3) and VAX options",
                    "Design and setup for implementation", "Facility stealing and subdivision");
    d.annotations["admit"] =
        admit_row("Misconfiguration", "Internet file checking", "Internet Worm", "Distort", "BSD, SunOS");
    d.provenance =
        "Morris worked example. Sequential cells: Who 'Joker (Robert Morris, Jr., Cornell University)'; Where "
        "'Multiple PC and Host'; How 'Software Attack with the network to the network channel'; What "
        "'Controllable request'.";
    return d;
}

inline AttackDossier ms_rpc() {
    AttackDossier d;
    d.name = "MS_RPC";
    auto& e = d.evidence;
    e.attack_name = "MS_RPC";
    e.attacker_motive = Motive::financial_competition;
    e.attacker_kind = AttackerKind::organization;
    e.initiation = Initiation::network;
    e.source_count = SourceCount::multiple;
    e.target_scope_hint = ScopeHint::core_network;
    e.platform_hint = PlatformHint::os_or_application;
    e.channel = ChannelEvidence{{}, {}, {}, {}, true, {}};
    e.symptoms = {Symptom::request_flood, Symptom::abnormal_controllable_requests};
    e.vulnerability_refs = {"CVE-2008-4250"};
    e.notes = "Stack buffer overflow in the Windows Server service RPC handler (October 2008) triggered by an "
              "oversized request; affects Windows 2000, XP and Server 2003.";
    d.curated = curated_row({{"who", {"little_sisters"}},
                             {"where_location", {"network_initiated"}},
                             {"where_scope", {"segment_to_segment"}},
                             {"how_platform", {"software"}},
                             {"how_channel", {"user_to_network"}},
                             {"what", {"traffic_volume", "controllable_requests"}}});
    d.annotations["verdict"] = verdict_row("None (X)", "None (X)", "", "");
    d.annotations["howard"] = howard_row("Attack Script", "Design", "Modify", "Process", "Increased Access");
    d.annotations["hansman_hunt"] = hansman_row("Stack run-off buffer", "Microsoft Windows Server Computer",
                                                "CVE-2008-4250", "Data tampering");
    d.annotations["avoidit"] =
        avoidit_row("System buffer run an out-off stack", "Installed Malware: ACE", "Distort",
                    "Solution: RA VU#827267 Solution: a patch of the system", "Operating system: MS Server");
    d.provenance =
        "MS RPC stack overflow worked example. Sequential cells: Who 'Little sisters'; Where 'Group of PC attacked "
        "from segment-to-segment based'; How 'Software attack via User to network channel (Oversized request)'; "
        "What 'Traffic volume and Controllable request'.";
    return d;
}

}  // namespace detail

inline const Corpus& golden_corpus() {
    static const Corpus corpus = [] {
        Corpus c;
        for (auto d : {detail::blaster(), detail::melissa(), detail::slammer(), detail::morris(), detail::ms_rpc()}) {
            c = upsert(std::move(c), std::move(d));
        }
        return c;
    }();
    return corpus;
}

}  // namespace seqtax
