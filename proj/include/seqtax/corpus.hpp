// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqtax/builtin_schema.hpp"
#include "seqtax/classification.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/evidence.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

/// Taxonomies whose rows are carried as opaque annotations, in display order.
inline const std::vector<std::string>& foreign_taxonomies() {
    static const std::vector<std::string> names{"verdict", "howard", "hansman_hunt", "avoidit", "admit"};
    return names;
}

using AnnotationRow = std::vector<std::pair<std::string, std::string>>;  // (field label, cell text)

struct AttackDossier {
    std::string name;
    EvidenceRecord evidence;
    Classification curated;
    std::map<std::string, AnnotationRow> annotations;
    std::string provenance;

    bool operator==(const AttackDossier&) const = default;
};

/// Immutable snapshot keyed by dossier name.
struct Corpus {
    std::map<std::string, AttackDossier> dossiers;

    std::size_t size() const { return dossiers.size(); }
    bool operator==(const Corpus&) const = default;
};

inline const AttackDossier& get(const Corpus& corpus, std::string_view name) {
    auto it = corpus.dossiers.find(std::string(name));
    if (it == corpus.dossiers.end()) throw NotFound(std::string(name), "dossier");
    return it->second;
}

/// Returns a new snapshot with the dossier inserted or replaced.
inline Corpus upsert(Corpus corpus, AttackDossier dossier) {
    if (dossier.name.empty()) throw Error("invalid_dossier", "", "dossier name must not be empty");
    auto key = dossier.name;
    corpus.dossiers.insert_or_assign(std::move(key), std::move(dossier));
    return corpus;
}

inline json_io::ordered_json dossier_to_json(const AttackDossier& d) {
    json_io::ordered_json j;
    j["name"] = d.name;
    j["evidence"] = evidence_to_json(d.evidence);
    j["curated"] = classification_to_json(d.curated);
    j["annotations"] = json_io::ordered_json::object();
    for (const auto& taxonomy : foreign_taxonomies()) {
        auto it = d.annotations.find(taxonomy);
        if (it == d.annotations.end()) continue;
        auto rows = json_io::ordered_json::array();
        for (const auto& [label, value] : it->second) rows.push_back({{"label", label}, {"value", value}});
        j["annotations"][taxonomy] = std::move(rows);
    }
    j["provenance"] = d.provenance;
    return j;
}

inline AttackDossier dossier_from_json(const json_io::json& doc, const TaxonomySchema& schema) {
    json_io::ObjectReader r(doc, "");
    AttackDossier d;
    d.name = r.required_string("name");
    if (d.name.empty()) throw ParseError("dossier name must not be empty", "name");
    d.evidence = evidence_from_json(r.required("evidence"), "evidence");
    d.curated = classification_from_json(r.required("curated"), "curated");
    try {
        check_classification(schema, d.curated);
    } catch (const SchemaMismatch& e) {
        throw ParseError(std::string("curated classification: ") + e.what(), "curated");
    }
    if (const auto* annotations = r.optional("annotations")) {
        if (!annotations->is_object()) throw ParseError("'annotations' must be an object", "annotations");
        const auto& known = foreign_taxonomies();
        for (const auto& [taxonomy, rows] : annotations->items()) {
            const std::string path = "annotations." + taxonomy;
            if (std::find(known.begin(), known.end(), taxonomy) == known.end()) {
                throw ParseError("unknown taxonomy '" + taxonomy + "'", path);
            }
            if (!rows.is_array()) throw ParseError("'" + path + "' must be an array", path);
            AnnotationRow row;
            for (const auto& cell : rows) {
                json_io::ObjectReader cr(cell, path);
                auto label = cr.required_string("label");
                auto value = cr.required_string("value");
                cr.finish();
                row.emplace_back(std::move(label), std::move(value));
            }
            d.annotations.emplace(taxonomy, std::move(row));
        }
    }
    d.provenance = r.optional_string("provenance").value_or("");
    r.finish();
    return d;
}

/// One dossier per line, lexicographic name order; byte-stable for equal corpora.
inline std::string export_corpus(const Corpus& corpus) {
    std::string out;
    for (const auto& [name, dossier] : corpus.dossiers) out += dossier_to_json(dossier).dump() + "\n";
    return out;
}

/// All-or-nothing NDJSON import. Blank lines are skipped.
inline Corpus import_corpus(std::string_view document, const TaxonomySchema& schema = builtin_sequential_schema()) {
    Corpus corpus;
    std::size_t line_no = 0;
    while (!document.empty()) {
        ++line_no;
        auto newline = document.find('\n');
        std::string_view line = document.substr(0, newline);
        document = newline == std::string_view::npos ? std::string_view{} : document.substr(newline + 1);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        AttackDossier d;
        try {
            d = dossier_from_json(json_io::parse(line), schema);
        } catch (const ParseError& e) {
            throw ParseError(e.bare_message(), e.subject(), line_no, e.column() ? e.column() : 1);
        } catch (const Error& e) {
            throw ParseError(e.what(), e.subject(), line_no, 1);
        }
        if (corpus.dossiers.contains(d.name)) throw DuplicateName(d.name, line_no);
        auto key = d.name;
        corpus.dossiers.emplace(std::move(key), std::move(d));
    }
    return corpus;
}

}  // namespace seqtax
