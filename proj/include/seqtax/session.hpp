// SPDX-License-Identifier: Apache-2.0
#pragma once

// Wizard sessions: a partially answered question sequence held in memory.

#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqtax/classification.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

/// question id -> chosen category ids
using AnswerMap = std::map<std::string, std::vector<std::string>>;

/// The selection is not acceptable for the question (wrong arity or foreign category).
class InvalidAnswer : public Error {
public:
    InvalidAnswer(const std::string& subject, const std::string& message) : Error("invalid_answer", subject, message) {}
};

/// Validates one answer and returns it normalized to schema category order.
inline std::vector<std::string> normalize_answer(const TaxonomySchema& schema, const std::string& question_id,
                                                 const std::vector<std::string>& category_ids) {
    const Question& q = schema.question(question_id);
    if (category_ids.empty()) throw InvalidAnswer(question_id, "answer for '" + question_id + "' selects nothing");
    std::set<std::string> chosen;
    for (const auto& c : category_ids) {
        if (!q.find_category(c)) throw InvalidAnswer(c, "category '" + c + "' is not offered by '" + question_id + "'");
        chosen.insert(c);
    }
    if (q.selection == Selection::single && chosen.size() != 1) {
        throw InvalidAnswer(question_id, "question '" + question_id + "' takes exactly one category");
    }
    std::vector<std::string> out;
    for (const auto& c : q.categories) {
        if (chosen.contains(c.id)) out.push_back(c.id);
    }
    return out;
}

/// Answered questions become assigned, the rest unknown. Answers are taken as given.
inline Classification classification_from_answers(const TaxonomySchema& schema, const AnswerMap& answers) {
    Classification c = unknown_classification(schema);
    for (auto& a : c.assignments) {
        auto it = answers.find(a.question_id);
        if (it == answers.end() || it->second.empty()) continue;
        a.status = AssignmentStatus::assigned;
        a.categories = normalize_answer(schema, a.question_id, it->second);
    }
    return c;
}

/// Lowest-order question without an answer, or nullptr once all are answered.
inline const Question* next_question(const TaxonomySchema& schema, const AnswerMap& answers) {
    for (const Question* q : schema.ordered_questions()) {
        if (!answers.contains(q->id)) return q;
    }
    return nullptr;
}

struct WizardSession {
    std::string id;
    std::string schema_id;
    AnswerMap answers;
    std::chrono::system_clock::time_point created_at;
    std::chrono::system_clock::time_point updated_at;
};

inline std::string format_timestamp(std::chrono::system_clock::time_point t) {
    std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline json_io::ordered_json session_to_json(const WizardSession& s) {
    json_io::ordered_json j;
    j["session_id"] = s.id;
    j["schema_id"] = s.schema_id;
    j["answers"] = json_io::ordered_json::object();
    for (const auto& [q, cats] : s.answers) j["answers"][q] = cats;
    j["created_at"] = format_timestamp(s.created_at);
    j["updated_at"] = format_timestamp(s.updated_at);
    return j;
}

/// 128 random bits as 32 lowercase hex digits.
inline std::string new_session_token() {
    thread_local std::mt19937_64 rng([] {
        std::random_device rd;
        std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
        return std::mt19937_64(seq);
    }());
    static constexpr char hex[] = "0123456789abcdef";
    std::string token;
    for (int word = 0; word < 2; ++word) {
        auto bits = rng();
        for (int i = 0; i < 16; ++i, bits >>= 4) token.push_back(hex[bits & 0xF]);
    }
    return token;
}

/// Thread-safe session table. Lookups share the table lock; each session has
/// its own mutex so updates to one never block another. Sessions idle longer
/// than the TTL are dropped.
class SessionStore {
public:
    using Clock = std::function<std::chrono::system_clock::time_point()>;

    explicit SessionStore(std::chrono::seconds ttl = std::chrono::hours(24),
                          Clock clock = [] { return std::chrono::system_clock::now(); })
        : ttl_(ttl), clock_(std::move(clock)) {}

    WizardSession create(const std::string& schema_id) {
        evict_expired();
        auto entry = std::make_shared<Entry>();
        auto now = clock_();
        entry->session = WizardSession{{}, schema_id, {}, now, now};
        std::unique_lock lock(table_mutex_);
        std::string id;
        do {
            id = new_session_token();
        } while (table_.contains(id));
        entry->session.id = id;
        table_.emplace(id, entry);
        return entry->session;
    }

    std::optional<WizardSession> get(const std::string& id) const {
        auto entry = find(id);
        if (!entry) return std::nullopt;
        std::lock_guard lock(entry->mutex);
        if (expired(entry->session)) return std::nullopt;
        return entry->session;
    }

    /// Applies fn under the session's own lock and returns the updated snapshot.
    std::optional<WizardSession> update(const std::string& id, const std::function<void(WizardSession&)>& fn) {
        auto entry = find(id);
        if (!entry) return std::nullopt;
        std::lock_guard lock(entry->mutex);
        if (expired(entry->session)) return std::nullopt;
        fn(entry->session);
        entry->session.updated_at = clock_();
        return entry->session;
    }

    std::size_t size() const {
        std::shared_lock lock(table_mutex_);
        return table_.size();
    }

    void evict_expired() {
        const auto cutoff = clock_() - ttl_;
        std::unique_lock lock(table_mutex_);
        std::erase_if(table_, [&](const auto& kv) {
            std::lock_guard entry_lock(kv.second->mutex);
            return kv.second->session.updated_at < cutoff;
        });
    }

private:
    struct Entry {
        std::mutex mutex;
        WizardSession session;
    };

    std::shared_ptr<Entry> find(const std::string& id) const {
        std::shared_lock lock(table_mutex_);
        auto it = table_.find(id);
        return it == table_.end() ? nullptr : it->second;
    }

    bool expired(const WizardSession& s) const { return s.updated_at < clock_() - ttl_; }

    std::chrono::seconds ttl_;
    Clock clock_;
    mutable std::shared_mutex table_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Entry>> table_;
};

}  // namespace seqtax
