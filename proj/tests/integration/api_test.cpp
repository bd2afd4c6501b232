#include <gtest/gtest.h>

#include <thread>

#include "seqtax/api.hpp"
#include "support/generators.hpp"

using namespace seqtax;
using namespace seqtax::testing;
using json = json_io::json;

namespace {

const TaxonomySchema& schema() { return builtin_sequential_schema(); }

/// Serves the API on an ephemeral loopback port for the lifetime of the fixture.
class ApiServer : public ::testing::Test {
protected:
    void SetUp() override {
        ServerOptions options;
        options.ui_origin = "http://localhost:5173";
        install_routes(server_, service_, options);
        port_ = server_.bind_to_any_port("127.0.0.1");
        ASSERT_GT(port_, 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    }

    void TearDown() override {
        server_.stop();
        if (thread_.joinable()) thread_.join();
    }

    httplib::Result get(const std::string& path) { return client_->Get(path); }
    httplib::Result post(const std::string& path, const std::string& body) {
        return client_->Post(path, body, "application/json");
    }

    std::string new_session() {
        auto r = post("/sessions", "");
        EXPECT_EQ(r->status, 201);
        return json::parse(r->body).at("session_id");
    }

    httplib::Result answer(const std::string& id, const std::string& q, const std::vector<std::string>& cats) {
        return post("/sessions/" + id + "/answers", json{{"question_id", q}, {"category_ids", cats}}.dump());
    }

    ApiService service_{schema(), builtin_rules(), builtin_actions(), golden_corpus()};
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
    std::unique_ptr<httplib::Client> client_;
};

}  // namespace

TEST_F(ApiServer, NewSessionStartsWithWho) {
    auto id = new_session();
    auto r = get("/sessions/" + id + "/next");
    ASSERT_EQ(r->status, 200);
    auto j = json::parse(r->body);
    EXPECT_FALSE(j["done"]);
    EXPECT_EQ(j["question"]["id"], "who");
    EXPECT_EQ(j["question"]["categories"].size(), 5u);
}

TEST_F(ApiServer, DistinctSessions) { EXPECT_NE(new_session(), new_session()); }

TEST_F(ApiServer, AnswerWhoThenWhereLocation) {
    auto id = new_session();
    auto r = answer(id, "who", {"black_hat"});
    ASSERT_EQ(r->status, 200);
    EXPECT_EQ(json::parse(r->body)["answers"]["who"], json::array({"black_hat"}));
    EXPECT_EQ(json::parse(get("/sessions/" + id + "/next")->body)["question"]["id"], "where_location");
}

TEST_F(ApiServer, AllAnsweredIsDone) {
    auto id = new_session();
    for (const auto& q : schema().questions) ASSERT_EQ(answer(id, q.id, {q.categories[0].id})->status, 200);
    auto j = json::parse(get("/sessions/" + id + "/next")->body);
    EXPECT_TRUE(j["done"]);
    EXPECT_FALSE(j.contains("question"));
}

TEST_F(ApiServer, AnswerErrors) {
    auto id = new_session();
    auto multi = answer(id, "who", {"black_hat", "joker"});
    EXPECT_EQ(multi->status, 422);
    auto e = json::parse(multi->body);
    EXPECT_EQ(e["code"], "invalid_answer");
    EXPECT_TRUE(e.contains("message"));
    EXPECT_TRUE(e.contains("subject"));
    EXPECT_EQ(answer(id, "what", {"traffic_volume", "controllable_requests"})->status, 200);
    EXPECT_EQ(answer(id, "why", {"x"})->status, 404);
    EXPECT_EQ(answer(id, "who", {"pirate"})->status, 422);
    EXPECT_EQ(answer("nope", "who", {"joker"})->status, 404);
    EXPECT_EQ(post("/sessions/" + id + "/answers", "{")->status, 400);
    EXPECT_EQ(post("/sessions/" + id + "/answers", R"({"question_id":"who"})")->status, 400);
    EXPECT_EQ(post("/sessions/" + id + "/answers", R"({"question_id":"who","category_ids":["joker"],"x":1})")->status,
              400);
}

TEST_F(ApiServer, UnknownSession) {
    EXPECT_EQ(get("/sessions/ffff/next")->status, 404);
    EXPECT_EQ(get("/sessions/ffff/result")->status, 404);
}

TEST_F(ApiServer, RevisingKeepsOtherAnswers) {
    auto id = new_session();
    answer(id, "who", {"joker"});
    answer(id, "how_platform", {"software"});
    answer(id, "who", {"white_hat"});
    auto j = json::parse(get("/sessions/" + id + "/result")->body);
    auto c = classification_from_json(j["classification"]);
    EXPECT_EQ(c.at("who").categories, std::vector<std::string>{"white_hat"});
    EXPECT_EQ(c.at("how_platform").categories, std::vector<std::string>{"software"});
}

TEST_F(ApiServer, WhiteHatResultPlan) {
    auto id = new_session();
    answer(id, "who", {"white_hat"});
    auto j = json::parse(get("/sessions/" + id + "/result")->body);
    ASSERT_EQ(j["defense_plan"]["entries"].size(), 1u);
    EXPECT_EQ(j["defense_plan"]["entries"][0]["text"], "Secure system and thanks for identifying vulnerability");
}

TEST_F(ApiServer, EmptySessionResult) {
    auto j = json::parse(get("/sessions/" + new_session() + "/result")->body);
    for (const auto& a : j["classification"]["assignments"]) EXPECT_EQ(a["status"], "unknown");
    EXPECT_TRUE(j["defense_plan"]["entries"].empty());
}

TEST_F(ApiServer, FullBlasterVectorEqualsBatch) {
    const auto& d = seqtax::get(golden_corpus(), "Blaster");
    auto id = new_session();
    for (const auto& a : d.curated.assignments) ASSERT_EQ(answer(id, a.question_id, a.categories)->status, 200);
    auto j = json::parse(get("/sessions/" + id + "/result")->body);
    auto batch = classify(schema(), builtin_rules(), d.evidence);
    EXPECT_TRUE(same_answers(classification_from_json(j["classification"]), batch));
    EXPECT_EQ(j["defense_plan"]["entries"], json::parse(plan_to_json(plan(schema(), batch)).dump())["entries"]);
}

TEST_F(ApiServer, ClassifyEqualsLibrary) {
    for (const auto& [name, d] : golden_corpus().dossiers) {
        auto r = post("/classify", json{{"evidence", json::parse(evidence_to_json(d.evidence).dump())}}.dump());
        ASSERT_EQ(r->status, 200);
        auto c = classify(schema(), builtin_rules(), d.evidence);
        EXPECT_EQ(r->body, result_to_json(c, plan(schema(), c, d.evidence.attack_name)).dump()) << name;
    }
}

TEST_F(ApiServer, ClassifyMelissaIsJoker) {
    auto body = json{{"evidence", json::parse(evidence_to_json(seqtax::get(golden_corpus(), "Melissa").evidence).dump())}};
    auto j = json::parse(post("/classify", body.dump())->body);
    EXPECT_EQ(j["classification"]["assignments"][0]["categories"], json::array({"joker"}));
}

TEST_F(ApiServer, ClassifyRejectsBadBodies) {
    EXPECT_EQ(post("/classify", "")->status, 400);
    EXPECT_EQ(post("/classify", R"({"evidence":{"mood":"x"}})")->status, 400);
    EXPECT_EQ(post("/classify", R"({"attacker_motive":"political"})")->status, 400);
}

TEST_F(ApiServer, SchemasAndCorpus) {
    auto s = get("/schemas");
    ASSERT_EQ(s->status, 200);
    EXPECT_EQ(load_schema(json::parse(s->body)[0].dump()), schema());
    auto c = json::parse(get("/corpus")->body);
    EXPECT_EQ(c.size(), 5u);
    auto m = get("/corpus/Morris");
    ASSERT_EQ(m->status, 200);
    EXPECT_EQ(json::parse(m->body)["name"], "Morris");
    EXPECT_EQ(get("/corpus/Nimda")->status, 404);
}

TEST_F(ApiServer, UnknownRouteIsJson404) {
    auto r = get("/nowhere");
    EXPECT_EQ(r->status, 404);
    EXPECT_EQ(json::parse(r->body)["code"], "not_found");
}

TEST_F(ApiServer, CorsHeaders) {
    auto r = get("/schemas");
    EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
    auto pre = client_->Options("/sessions");
    EXPECT_EQ(pre->status, 204);
    EXPECT_NE(pre->get_header_value("Access-Control-Allow-Methods").find("POST"), std::string::npos);
}

TEST_F(ApiServer, NextOverRandomSubsets) {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 100; ++i) {
        auto id = new_session();
        auto answers = random_answers(schema(), rng);
        for (const auto& [q, cats] : answers) ASSERT_EQ(answer(id, q, cats)->status, 200);
        auto j = json::parse(get("/sessions/" + id + "/next")->body);
        const Question* expected = next_question(schema(), answers);
        if (expected) {
            EXPECT_EQ(j["question"]["id"], expected->id);
        } else {
            EXPECT_TRUE(j["done"]);
        }
    }
}

TEST_F(ApiServer, InterleavedSessionsIsolated) {
    std::vector<std::string> ids;
    for (int i = 0; i < 6; ++i) ids.push_back(new_session());
    std::vector<std::thread> threads;
    const auto& who = schema().question("who");
    for (int t = 0; t < 6; ++t) {
        threads.emplace_back([&, t] {
            httplib::Client c("127.0.0.1", port_);
            for (int k = 0; k < 20; ++k) {
                auto body = json{{"question_id", "who"}, {"category_ids", {who.categories[(t + k) % 5].id}}};
                c.Post("/sessions/" + ids[t] + "/answers", body.dump(), "application/json");
            }
            auto body = json{{"question_id", "who"}, {"category_ids", {who.categories[t % 5].id}}};
            c.Post("/sessions/" + ids[t] + "/answers", body.dump(), "application/json");
        });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < 6; ++t) {
        auto j = json::parse(get("/sessions/" + ids[t] + "/result")->body);
        EXPECT_EQ(j["classification"]["assignments"][0]["categories"][0], who.categories[t % 5].id);
        std::size_t answered = 0;
        for (const auto& a : j["classification"]["assignments"]) answered += a["status"] == "assigned";
        EXPECT_EQ(answered, 1u);
    }
}
