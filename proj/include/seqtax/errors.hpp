// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqtax {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string subject, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), subject_(std::move(subject)) {}

    /// Stable machine-readable code, e.g. "parse_error" or "not_found".
    const std::string& code() const noexcept { return code_; }
    /// The offending id, field or key. May be empty.
    const std::string& subject() const noexcept { return subject_; }

private:
    std::string code_;
    std::string subject_;
};

/// Malformed document. line/column are 1-based; 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string subject = {}, std::size_t line = 0,
               std::size_t column = 0)
        : Error("parse_error", std::move(subject), decorate(message, line, column)),
          bare_(message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without position information.
    const std::string& bare_message() const noexcept { return bare_; }

private:
    static std::string decorate(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    std::string bare_;
    std::size_t line_;
    std::size_t column_;
};

class DuplicateKeyError : public ParseError {
public:
    explicit DuplicateKeyError(const std::string& key, std::size_t line = 0)
        : ParseError("duplicate field '" + key + "'", key, line) {}
};

class NotFound : public Error {
public:
    explicit NotFound(const std::string& subject, const std::string& what = "id")
        : Error("not_found", subject, "unknown " + what + " '" + subject + "'") {}
};

/// A rule, action or classification refers to a question or category the schema lacks.
class SchemaMismatch : public Error {
public:
    SchemaMismatch(const std::string& subject, const std::string& message)
        : Error("schema_mismatch", subject, message) {}
};

class DuplicateName : public Error {
public:
    explicit DuplicateName(const std::string& name, std::size_t line = 0)
        : Error("duplicate_name", name,
                "duplicate dossier name '" + name + "'" +
                    (line ? " (line " + std::to_string(line) + ")" : std::string{})),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace seqtax
