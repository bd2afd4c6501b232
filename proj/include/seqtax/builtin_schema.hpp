// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "seqtax/schema.hpp"

namespace seqtax {

/// The shipped Who / Where / How / What taxonomy. WHERE and HOW are split into
/// their two independently answered parts, giving six questions.
inline const TaxonomySchema& builtin_sequential_schema() {
    static const TaxonomySchema schema = [] {
        TaxonomySchema s;
        s.id = "sequential";
        s.name = "Sequential Question";

        s.questions.push_back(Question{
            "who", "Attacker", "Who launched the attack?", 1, QuestionGroup::who, Selection::single,
            {
                {"joker", "Joker", "Attacks mainly to learn or for the challenge of it.", {}},
                {"white_hat", "White-hat hackers",
                 "Probes a network for vulnerabilities and reports them to its administrator.", {}},
                {"black_hat", "Black-hat hackers",
                 "Exploits vulnerabilities to damage the target or steal its information.", {}},
                {"little_sisters", "Little sisters",
                 "An organization or company attacking a competitor's network for financial gain.", {}},
                {"big_brothers", "Big brothers",
                 "A government or government-affiliated organization attacking for political gain.", {}},
            }});

        s.questions.push_back(Question{
            "where_location", "Initiated location", "Where was the attack launched from?", 2,
            QuestionGroup::where, Selection::single,
            {
                {"host_initiated", "Host-based initiation",
                 "Launched from a single computer or other network-connected device.", {}},
                {"network_initiated", "Network-based initiation",
                 "Launched by several connected devices acting together.", {}},
            }});

        s.questions.push_back(Question{
            "where_scope", "Attack scope", "What is the attack aimed at?", 3, QuestionGroup::where,
            Selection::single,
            {
                {"object_based", "Object-based", "Targets a single networked physical object.", {}},
                {"computer", "Computer", "A computer attacked as a standalone networked object.",
                 "object_based"},
                {"mobility_device", "Mobility device", "A phone, smart watch or vehicle with a network link.",
                 "object_based"},
                {"embedded_device", "Embedded device", "A device whose network function runs on firmware.",
                 "object_based"},
                {"network_equipment", "Network equipment", "A switch, router or similar infrastructure device.",
                 "object_based"},
                {"host_based", "Host-based",
                 "Targets a terminal such as a workstation or server, from where it may spread to nearby hosts.",
                 {}},
                {"local_segment", "Local segment-based",
                 "Targets one network segment of interconnected hosts (LAN, MAN or WAN).", {}},
                {"segment_to_segment", "Segment-to-segment-based",
                 "Targets the core between segments (UNI/NNI), for example BGP.", {}},
                {"wireless_network", "Wireless network-based",
                 "Targets a wireless network such as Bluetooth or a WiFi hotspot.", {}},
            }});

        s.questions.push_back(Question{
            "how_platform", "Hacking tool platform", "What platform does the hacking tool run on?", 4,
            QuestionGroup::how, Selection::single,
            {
                {"software", "Software", "The tool runs on the operating system or installed applications.", {}},
                {"hardware", "Hardware", "The tool relies on physical access to alter how a device behaves.", {}},
                {"embedded_hardware", "Embedded hardware", "The tool uses or rewrites device firmware.", {}},
                {"mobile", "Mobile",
                 "The tool abuses permissions of mobile applications or SMS/MMS services.", {}},
            }});

        s.questions.push_back(Question{
            "how_channel", "Attack channel", "Through which channel does the attack gain access?", 5,
            QuestionGroup::how, Selection::single,
            {
                {"legacy_ports", "Legacy network equipment ports",
                 "Access through ports of standardized network protocols.", {}},
                {"undefined_ports", "Undefined network equipment ports",
                 "Access through ports of vendor-specific protocols.", {}},
                {"virtualization", "Virtualization channel",
                 "Access through cloud or virtualization infrastructure.", {}},
                {"user_to_network", "User-to-network channel",
                 "Abuse of the everyday user channel, e.g. man-in-the-middle or a DDoS botnet.", {}},
                {"network_to_network", "Network-to-network channel",
                 "Abuse of core protocols spoken between segments.", {}},
            }});

        s.questions.push_back(Question{
            "what", "Attack type", "What does the attack do once inside?", 6, QuestionGroup::what,
            Selection::multi,
            {
                {"abnormal_system_activity", "Abnormal system activities",
                 "Unusual CPU, disk or network utilization on the victim.", {}},
                {"traffic_volume", "Traffic volume",
                 "The victim has to answer a flood of requests aimed at its information.", {}},
                {"controllable_requests", "Controllable requests",
                 "Abnormal requests arriving from hosts or networks the attacker controls.", {}},
            }});
        return s;
    }();
    return schema;
}

}  // namespace seqtax
