#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace seqtax;
using namespace seqtax::testing;

namespace {

const TaxonomySchema& schema() { return builtin_sequential_schema(); }

std::vector<std::string> action_ids(const DefensePlan& p) {
    std::vector<std::string> out;
    for (const auto& e : p.entries) out.push_back(e.action.id);
    return out;
}

}  // namespace

TEST(BuiltinActions, NineActions) {
    const auto& a = builtin_actions();
    EXPECT_EQ(a.size(), 9u);
    std::map<QuestionGroup, int> per_group;
    for (const auto& x : a) ++per_group[x.group];
    EXPECT_EQ(per_group[QuestionGroup::who], 4);
    EXPECT_EQ(per_group[QuestionGroup::where], 2);
    EXPECT_EQ(per_group[QuestionGroup::how], 1);
    EXPECT_EQ(per_group[QuestionGroup::what], 2);
    EXPECT_NO_THROW(check_actions_against(schema(), a));
}

TEST(BuiltinActions, WhoTriggersCoverAllFiveAttackers) {
    std::vector<std::set<std::string>> triggers;
    for (const auto& x : builtin_actions()) {
        if (x.group != QuestionGroup::who) continue;
        EXPECT_FALSE(x.trigger.any_answer());
        triggers.emplace_back(x.trigger.categories.begin(), x.trigger.categories.end());
    }
    EXPECT_EQ(triggers, (std::vector<std::set<std::string>>{
                            {"black_hat", "joker"}, {"white_hat"}, {"big_brothers"}, {"little_sisters"}}));
}

TEST(Plan, WhiteHatOnly) {
    auto c = classification_from_answers(schema(), {{"who", {"white_hat"}}});
    auto p = plan(schema(), c);
    ASSERT_EQ(p.entries.size(), 1u);
    EXPECT_EQ(p.entries[0].group, QuestionGroup::who);
    EXPECT_EQ(p.entries[0].action.text, "Secure system and thanks for identifying vulnerability");
}

TEST(Plan, AllUnknownIsEmpty) { EXPECT_TRUE(plan(schema(), unknown_classification(schema())).entries.empty()); }

TEST(Plan, BlasterCoversFourGroups) {
    const auto& d = get(golden_corpus(), "Blaster");
    auto p = plan(schema(), classify(schema(), builtin_rules(), d.evidence), "Blaster");
    EXPECT_EQ(p.attack_name, "Blaster");
    EXPECT_EQ(action_ids(p), (std::vector<std::string>{"who.pursue_attacker", "where.install_filtering",
                                                       "where.mark_risky", "how.isolate", "what.safety_level",
                                                       "what.avoid_result"}));
}

TEST(Plan, BigBrothers) {
    auto p = plan(schema(), classification_from_answers(schema(), {{"who", {"big_brothers"}}}));
    ASSERT_EQ(p.entries.size(), 1u);
    EXPECT_EQ(p.entries[0].action.text, "International meeting and resolve");
}

TEST(Plan, SubQuestionAnswersGroup) {
    auto p = plan(schema(), classification_from_answers(schema(), {{"how_channel", {"virtualization"}}}));
    EXPECT_EQ(action_ids(p), std::vector<std::string>{"how.isolate"});
}

TEST(Plan, RejectsForeignClassification) {
    auto c = unknown_classification(schema());
    c.schema_id = "other";
    EXPECT_THROW(plan(schema(), c), SchemaMismatch);
}

TEST(Properties, Monotone) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 1000; ++i) {
        auto small = random_answers(schema(), rng, 0.4);
        auto big = extend_answers(schema(), small, rng);
        auto p1 = action_ids(plan(schema(), classification_from_answers(schema(), small)));
        auto p2 = action_ids(plan(schema(), classification_from_answers(schema(), big)));
        std::set<std::string> s2(p2.begin(), p2.end());
        for (const auto& id : p1) EXPECT_TRUE(s2.contains(id)) << id;
    }
}

TEST(Properties, OrderedByGroupNoRepeats) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 500; ++i) {
        auto p = plan(schema(), classification_from_answers(schema(), random_answers(schema(), rng)));
        std::set<std::string> seen;
        for (std::size_t k = 0; k < p.entries.size(); ++k) {
            EXPECT_TRUE(seen.insert(p.entries[k].action.id).second);
            if (k) { EXPECT_LE(static_cast<int>(p.entries[k - 1].group), static_cast<int>(p.entries[k].group)); }
        }
    }
}

TEST(ActionsIo, RoundTrip) {
    auto text = serialize_actions(builtin_actions());
    EXPECT_EQ(load_actions(text), builtin_actions());
}

TEST(ActionsIo, Triggers) {
    EXPECT_TRUE(parse_trigger("any_answer", "x").any_answer());
    EXPECT_EQ(parse_trigger("category:a,b", "x").categories, (std::vector<std::string>{"a", "b"}));
    EXPECT_THROW(parse_trigger("category:", "x"), ParseError);
    EXPECT_THROW(parse_trigger("category:a,", "x"), ParseError);
    EXPECT_THROW(parse_trigger("sometimes", "x"), ParseError);
}

TEST(ActionsIo, CheckAgainstSchema) {
    auto a = builtin_actions();
    a[0].trigger.categories = {"host_based"};  // a WHERE category on a WHO action
    EXPECT_THROW(check_actions_against(schema(), a), SchemaMismatch);
    a = builtin_actions();
    a[0].text.clear();
    EXPECT_THROW(check_actions_against(schema(), a), SchemaMismatch);
}
