// SPDX-License-Identifier: Apache-2.0
#pragma once

// Terminal wizard: asks every question in schema order and collects direct
// category picks from the analyst.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seqtax/errors.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/session.hpp"

namespace seqtax {

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Parses "2" or "1, 3". Returns no value for an invalid line; an empty vector means unknown.
inline std::optional<std::vector<std::string>> parse_selection(const Question& q, const std::string& line) {
    std::vector<std::size_t> picks;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
            return std::nullopt;
        }
        picks.push_back(std::stoul(item));
    }
    if (picks.empty()) return std::nullopt;
    if (picks.size() == 1 && picks.front() == 0) return std::vector<std::string>{};
    if (q.selection == Selection::single && picks.size() != 1) return std::nullopt;
    std::vector<std::string> ids;
    for (auto p : picks) {
        if (p == 0 || p > q.categories.size()) return std::nullopt;
        const auto& id = q.categories[p - 1].id;
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    return ids;
}

}  // namespace detail

/// Runs the question sequence over the given streams. Out-of-range input is
/// rejected and asked again; end of input before the last question throws.
inline AnswerMap run_wizard(const TaxonomySchema& schema, std::istream& in, std::ostream& out) {
    AnswerMap answers;
    const auto questions = schema.ordered_questions();
    for (std::size_t i = 0; i < questions.size(); ++i) {
        const Question& q = *questions[i];
        out << "\n[" << (i + 1) << "/" << questions.size() << "] " << q.label << ": " << q.prompt << "\n";
        for (std::size_t k = 0; k < q.categories.size(); ++k) {
            const auto& c = q.categories[k];
            out << (c.parent ? "      " : "  ") << (k + 1) << ") " << c.label << " - " << c.description << "\n";
        }
        out << "  0) Unknown\n";
        while (true) {
            out << (q.selection == Selection::multi ? "Select one or more, comma separated" : "Select one") << " [0-"
                << q.categories.size() << "]: " << std::flush;
            std::string line;
            if (!std::getline(in, line)) throw Error("input_ended", q.id, "input ended before question '" + q.id + "'");
            auto picked = detail::parse_selection(q, line);
            if (!picked) {
                out << "Invalid selection '" << detail::trim(line) << "'.\n";
                continue;
            }
            if (!picked->empty()) answers[q.id] = normalize_answer(schema, q.id, *picked);
            break;
        }
    }
    return answers;
}

}  // namespace seqtax
