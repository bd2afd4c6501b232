// SPDX-License-Identifier: Apache-2.0
#pragma once

// HTTP API over the classifier, planner, corpus and wizard sessions.
//
//   POST /sessions                  -> 201 {session_id}
//   GET  /sessions/{id}/next        -> 200 {done, question?}
//   POST /sessions/{id}/answers     -> 200 session
//   GET  /sessions/{id}/result      -> 200 {classification, defense_plan}
//   POST /classify {evidence}       -> 200 {classification, defense_plan}
//   GET  /schemas                   -> 200 [schema]
//   GET  /corpus                    -> 200 [name]
//   GET  /corpus/{name}             -> 200 dossier
//
// Errors are {code, message, subject}.

#include <httplib.h>

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "seqtax/classification.hpp"
#include "seqtax/classifier.hpp"
#include "seqtax/corpus.hpp"
#include "seqtax/defense.hpp"
#include "seqtax/errors.hpp"
#include "seqtax/evidence.hpp"
#include "seqtax/rules.hpp"
#include "seqtax/schema.hpp"
#include "seqtax/session.hpp"
#include "seqtax/strict_json.hpp"

namespace seqtax {

inline constexpr int kDefaultApiPort = 8642;

struct ApiResponse {
    int status = 200;
    json_io::ordered_json body;
};

inline json_io::ordered_json error_body(std::string_view code, std::string_view message, std::string_view subject) {
    json_io::ordered_json j;
    j["code"] = code;
    j["message"] = message;
    j["subject"] = subject;
    return j;
}

/// Classification plus its defense plan, as returned by /classify and /result.
inline json_io::ordered_json result_to_json(const Classification& c, const DefensePlan& p) {
    json_io::ordered_json j;
    j["classification"] = classification_to_json(c);
    j["defense_plan"] = plan_to_json(p);
    return j;
}

inline json_io::ordered_json question_view_to_json(const Question* q) {
    json_io::ordered_json j;
    j["done"] = q == nullptr;
    if (!q) return j;
    json_io::ordered_json jq;
    jq["id"] = q->id;
    jq["label"] = q->label;
    jq["prompt"] = q->prompt;
    jq["order"] = q->order;
    jq["group"] = to_string(q->group);
    jq["selection"] = to_string(q->selection);
    jq["categories"] = json_io::ordered_json::array();
    for (const auto& c : q->categories) {
        json_io::ordered_json jc;
        jc["id"] = c.id;
        jc["label"] = c.label;
        jc["description"] = c.description;
        if (c.parent) jc["parent"] = *c.parent;
        jq["categories"].push_back(std::move(jc));
    }
    j["question"] = std::move(jq);
    return j;
}

/// Request handling independent of the transport. Schema, rules, actions and
/// corpus are immutable; the session store is the only shared mutable state.
class ApiService {
public:
    ApiService(TaxonomySchema schema, std::vector<Rule> rules, std::vector<DefenseAction> actions, Corpus corpus,
               std::chrono::seconds session_ttl = std::chrono::hours(24))
        : schema_(std::move(schema)),
          rules_(std::move(rules)),
          actions_(std::move(actions)),
          corpus_(std::move(corpus)),
          sessions_(session_ttl) {
        check_rules_against(schema_, rules_);
        check_actions_against(schema_, actions_);
    }

    const TaxonomySchema& schema() const { return schema_; }
    SessionStore& sessions() { return sessions_; }

    ApiResponse create_session() {
        auto s = sessions_.create(schema_.id);
        return {201, {{"session_id", s.id}}};
    }

    ApiResponse next(const std::string& id) const {
        auto s = sessions_.get(id);
        if (!s) return session_missing(id);
        return {200, question_view_to_json(next_question(schema_, s->answers))};
    }

    ApiResponse answer(const std::string& id, std::string_view body) {
        std::string question_id;
        std::vector<std::string> categories;
        try {
            auto doc = json_io::parse(body);
            json_io::ObjectReader r(doc, "");
            question_id = r.required_string("question_id");
            categories = r.string_list("category_ids", true);
            r.finish();
        } catch (const ParseError& e) {
            return {400, error_body(e.code(), e.what(), e.subject())};
        }
        if (!sessions_.get(id)) return session_missing(id);
        std::vector<std::string> normalized;
        try {
            normalized = normalize_answer(schema_, question_id, categories);
        } catch (const NotFound& e) {
            return {404, error_body(e.code(), e.what(), e.subject())};
        } catch (const InvalidAnswer& e) {
            return {422, error_body(e.code(), e.what(), e.subject())};
        }
        // Replacing one answer leaves the others as they were.
        auto updated = sessions_.update(id, [&](WizardSession& s) { s.answers[question_id] = normalized; });
        if (!updated) return session_missing(id);
        return {200, session_to_json(*updated)};
    }

    ApiResponse result(const std::string& id) const {
        auto s = sessions_.get(id);
        if (!s) return session_missing(id);
        auto c = classification_from_answers(schema_, s->answers);
        return {200, result_to_json(c, plan(schema_, actions_, c))};
    }

    ApiResponse classify_evidence(std::string_view body) const {
        EvidenceRecord evidence;
        try {
            auto doc = json_io::parse(body);
            json_io::ObjectReader r(doc, "");
            evidence = evidence_from_json(r.required("evidence"), "evidence");
            r.finish();
        } catch (const ParseError& e) {
            return {400, error_body(e.code(), e.what(), e.subject())};
        }
        auto c = classify(schema_, rules_, evidence);
        return {200, result_to_json(c, plan(schema_, actions_, c, evidence.attack_name))};
    }

    ApiResponse schemas() const {
        auto list = json_io::ordered_json::array();
        list.push_back(schema_to_json(schema_));
        return {200, list};
    }

    ApiResponse corpus_names() const {
        auto list = json_io::ordered_json::array();
        for (const auto& [name, d] : corpus_.dossiers) list.push_back(name);
        return {200, list};
    }

    ApiResponse dossier(const std::string& name) const {
        auto it = corpus_.dossiers.find(name);
        if (it == corpus_.dossiers.end()) {
            return {404, error_body("not_found", "unknown dossier '" + name + "'", name)};
        }
        return {200, dossier_to_json(it->second)};
    }

private:
    static ApiResponse session_missing(const std::string& id) {
        return {404, error_body("not_found", "unknown session '" + id + "'", id)};
    }

    TaxonomySchema schema_;
    std::vector<Rule> rules_;
    std::vector<DefenseAction> actions_;
    Corpus corpus_;
    mutable SessionStore sessions_;
};

struct ServerOptions {
    std::string ui_origin;  // CORS allow-origin; empty disables CORS headers
    std::string ui_dir;     // static assets served under /ui when set
    std::function<void(const std::string&)> log;  // one line per request
};

/// Registers every route of `service` on `server`.
inline void install_routes(httplib::Server& server, ApiService& service, const ServerOptions& options = {}) {
    auto send = [](httplib::Response& res, const ApiResponse& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };

    server.Post("/sessions", [&service, send](const httplib::Request&, httplib::Response& res) {
        send(res, service.create_session());
    });
    server.Get(R"(/sessions/([^/]+)/next)", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.next(req.matches[1]));
    });
    server.Post(R"(/sessions/([^/]+)/answers)",
                [&service, send](const httplib::Request& req, httplib::Response& res) {
                    send(res, service.answer(req.matches[1], req.body));
                });
    server.Get(R"(/sessions/([^/]+)/result)", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.result(req.matches[1]));
    });
    server.Post("/classify", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.classify_evidence(req.body));
    });
    server.Get("/schemas", [&service, send](const httplib::Request&, httplib::Response& res) {
        send(res, service.schemas());
    });
    server.Get("/corpus", [&service, send](const httplib::Request&, httplib::Response& res) {
        send(res, service.corpus_names());
    });
    server.Get(R"(/corpus/([^/]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.dossier(req.matches[1]));
    });

    if (!options.ui_origin.empty()) {
        const std::string origin = options.ui_origin;
        server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
            res.set_header("Access-Control-Allow-Origin", origin);
            res.set_header("Vary", "Origin");
        });
        server.Options(R"(.*)", [origin](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
            res.set_header("Access-Control-Max-Age", "600");
        });
    }
    if (!options.ui_dir.empty()) server.set_mount_point("/ui", options.ui_dir);

    server.set_error_handler([send](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && res.body.empty()) {
            send(res, {404, error_body("not_found", "no route for " + req.method + " " + req.path, req.path)});
        }
    });
    server.set_exception_handler([send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            message = e.what();
        } catch (...) {
        }
        send(res, {500, error_body("internal", message, "")});
    });
    if (options.log) {
        auto log = options.log;
        server.set_logger([log](const httplib::Request& req, const httplib::Response& res) {
            log(req.method + " " + req.path + " " + std::to_string(res.status));
        });
    }
}

}  // namespace seqtax
