#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace seqtax;

TEST(BuiltinRules, CountPerQuestion) {
    std::map<std::string, int> count;
    for (const auto& r : builtin_rules()) ++count[r.question_id];
    EXPECT_EQ(count, (std::map<std::string, int>{{"who", 5}, {"where_location", 2}, {"where_scope", 8},
                                                 {"how_platform", 4}, {"how_channel", 5}, {"what", 3}}));
}

TEST(BuiltinRules, ResolveInSchema) {
    EXPECT_NO_THROW(check_rules_against(builtin_sequential_schema(), builtin_rules()));
}

TEST(BuiltinRules, UniqueIds) {
    std::set<std::string> ids;
    for (const auto& r : builtin_rules()) EXPECT_TRUE(ids.insert(r.id).second) << r.id;
}

TEST(BuiltinRules, ChannelPriorityLadder) {
    std::map<std::string, int> p;
    for (const auto& r : builtin_rules()) {
        if (r.question_id == "how_channel") p[r.category_id] = r.priority;
    }
    EXPECT_GT(p["legacy_ports"], p["undefined_ports"]);
    EXPECT_GT(p["undefined_ports"], p["network_to_network"]);
    EXPECT_GT(p["network_to_network"], p["virtualization"]);
    EXPECT_GT(p["virtualization"], p["user_to_network"]);
}

TEST(BuiltinRules, NeverTestSpecificPorts) {
    for (const auto& r : builtin_rules()) {
        for (const auto& c : r.when) {
            if (c.field == "channel.port") { EXPECT_EQ(c.op, ConditionOp::present) << r.id; }
        }
    }
}

TEST(RulesIo, RoundTrip) {
    auto text = serialize_rules(builtin_rules());
    EXPECT_EQ(load_rules(text), builtin_rules());
    EXPECT_EQ(serialize_rules(load_rules(text)), text);
}

TEST(RulesIo, Rejections) {
    EXPECT_THROW(load_rules("{}"), ParseError);
    EXPECT_THROW(load_rules(R"([{"id":"x","question":"who","category":"joker","priority":1,"when":[]}])"), ParseError);
    EXPECT_THROW(load_rules(R"([{"id":"x","question":"who","category":"joker","priority":1,
        "when":[{"field":"mood","op":"eq","value":"x"}]}])"),
                 ParseError);
    EXPECT_THROW(load_rules(R"([{"id":"x","question":"who","category":"joker","priority":1,
        "when":[{"field":"attacker_motive","op":"like","value":"x"}]}])"),
                 ParseError);
    EXPECT_THROW(load_rules(R"([{"id":"x","question":"who","category":"joker","priority":1,
        "when":[{"field":"attacker_motive","op":"eq","value":"boredom"}]}])"),
                 ParseError);
    EXPECT_THROW(load_rules(R"([{"id":"x","question":"who","category":"joker","priority":1,
        "when":[{"field":"attacker_motive","op":"in","value":[]}]}])"),
                 ParseError);
}

TEST(RulesIo, TypedValues) {
    auto rules = load_rules(R"([{"id":"x","question":"how_channel","category":"legacy_ports","priority":1,
        "when":[{"field":"channel.standardized_protocol","op":"eq","value":true},
                {"field":"channel.port","op":"eq","value":135}]}])");
    ASSERT_EQ(rules[0].when.size(), 2u);
    EXPECT_EQ(rules[0].when[0].values, std::vector<std::string>{"true"});
    EXPECT_EQ(rules[0].when[1].values, std::vector<std::string>{"135"});
    EXPECT_THROW(load_rules(R"([{"id":"x","question":"who","category":"joker","priority":1,
        "when":[{"field":"channel.virtualization","op":"eq","value":"true"}]}])"),
                 ParseError);
}

TEST(RulesCheck, ForeignCategory) {
    auto rules = builtin_rules();
    rules[0].category_id = "pirate";
    EXPECT_THROW(check_rules_against(builtin_sequential_schema(), rules), SchemaMismatch);
    rules[0].question_id = "when";
    EXPECT_THROW(check_rules_against(builtin_sequential_schema(), rules), SchemaMismatch);
}

TEST(Conditions, Semantics) {
    EXPECT_TRUE(condition_holds({"f", ConditionOp::present, {}}, {"a"}));
    EXPECT_FALSE(condition_holds({"f", ConditionOp::present, {}}, {}));
    EXPECT_TRUE(condition_holds({"f", ConditionOp::absent, {}}, {}));
    EXPECT_TRUE(condition_holds({"f", ConditionOp::in, {"a", "b"}}, {"b"}));
    EXPECT_FALSE(condition_holds({"f", ConditionOp::eq, {"a"}}, {}));
    EXPECT_TRUE(condition_holds({"f", ConditionOp::eq, {"a"}}, {"c", "a"}));
}
