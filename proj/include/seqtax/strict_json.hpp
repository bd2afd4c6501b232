// SPDX-License-Identifier: Apache-2.0
#pragma once

// Strict JSON input: duplicate keys and unknown fields are errors, and every
// failure names the offending field path.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqtax/errors.hpp"

namespace seqtax::json_io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace detail

/// Parses one JSON document, rejecting repeated keys within an object.
inline json parse(std::string_view text) {
    std::vector<std::set<std::string>> keys_in_scope;
    std::optional<std::string> duplicate;
    auto callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start:
                keys_in_scope.emplace_back();
                break;
            case json::parse_event_t::object_end:
                keys_in_scope.pop_back();
                break;
            case json::parse_event_t::key: {
                auto key = parsed.get<std::string>();
                if (!keys_in_scope.back().insert(key).second && !duplicate) duplicate = key;
                break;
            }
            default:
                break;
        }
        return true;
    };
    json result;
    try {
        result = json::parse(text.begin(), text.end(), callback);
    } catch (const json::parse_error& e) {
        auto [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", {}, line, column);
    }
    if (duplicate) throw DuplicateKeyError(*duplicate);
    return result;
}

/// Typed field access over one JSON object; finish() rejects fields nobody read.
class ObjectReader {
public:
    ObjectReader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
        if (!object_.is_object()) throw ParseError(where() + " must be an object", path_);
    }

    bool has(std::string_view key) const { return object_.contains(key); }

    const json& required(const std::string& key) {
        seen_.insert(key);
        auto it = object_.find(key);
        if (it == object_.end()) throw ParseError("missing field '" + field(key) + "'", field(key));
        return *it;
    }

    const json* optional(const std::string& key) {
        seen_.insert(key);
        auto it = object_.find(key);
        if (it == object_.end() || it->is_null()) return nullptr;
        return &*it;
    }

    std::string required_string(const std::string& key) { return as_string(required(key), key); }

    std::optional<std::string> optional_string(const std::string& key) {
        if (const json* v = optional(key)) return as_string(*v, key);
        return std::nullopt;
    }

    std::int64_t required_integer(const std::string& key) { return as_integer(required(key), key); }

    std::optional<std::int64_t> optional_integer(const std::string& key) {
        if (const json* v = optional(key)) return as_integer(*v, key);
        return std::nullopt;
    }

    bool required_bool(const std::string& key) { return as_bool(required(key), key); }

    std::optional<bool> optional_bool(const std::string& key) {
        if (const json* v = optional(key)) return as_bool(*v, key);
        return std::nullopt;
    }

    const json& required_array(const std::string& key) {
        const json& v = required(key);
        if (!v.is_array()) throw ParseError("field '" + field(key) + "' must be an array", field(key));
        return v;
    }

    std::vector<std::string> string_list(const std::string& key, bool required_field) {
        const json* v = required_field ? &required(key) : optional(key);
        std::vector<std::string> out;
        if (!v) return out;
        if (!v->is_array()) throw ParseError("field '" + field(key) + "' must be an array", field(key));
        for (const auto& item : *v) out.push_back(as_string(item, key));
        return out;
    }

    void finish() const {
        for (const auto& [key, value] : object_.items()) {
            if (!seen_.contains(key)) throw ParseError("unknown field '" + field(key) + "'", field(key));
        }
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

private:
    std::string where() const { return path_.empty() ? "document" : "'" + path_ + "'"; }

    std::string as_string(const json& v, const std::string& key) const {
        if (!v.is_string()) throw ParseError("field '" + field(key) + "' must be a string", field(key));
        return v.get<std::string>();
    }

    std::int64_t as_integer(const json& v, const std::string& key) const {
        if (!v.is_number_integer())
            throw ParseError("field '" + field(key) + "' must be an integer", field(key));
        return v.get<std::int64_t>();
    }

    bool as_bool(const json& v, const std::string& key) const {
        if (!v.is_boolean()) throw ParseError("field '" + field(key) + "' must be a boolean", field(key));
        return v.get<bool>();
    }

    const json& object_;
    std::string path_;
    std::set<std::string, std::less<>> seen_;
};

}  // namespace seqtax::json_io
