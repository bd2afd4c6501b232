#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace seqtax;
using namespace seqtax::testing;

namespace {

const TaxonomySchema& schema() { return builtin_sequential_schema(); }

using Pair = std::pair<std::string, std::string>;

// Values tried per field by the oracle, independent of the detector's own
// equivalence classes: every domain value, port edges, and all literal values.
std::vector<std::vector<std::string>> oracle_values(const FieldSpec& f, const std::vector<Rule>& rules) {
    std::vector<std::vector<std::string>> out{{}};
    std::set<std::string> atoms(f.domain.begin(), f.domain.end());
    for (const auto& r : rules) {
        for (const auto& c : r.when) {
            if (c.field == f.name) atoms.insert(c.values.begin(), c.values.end());
        }
    }
    if (f.kind == FieldKind::integer) atoms.insert({"0", "1", "135", "65535"});
    if (f.kind == FieldKind::text) atoms.insert("free text");
    if (f.multi_valued) {
        std::vector<std::string> a(atoms.begin(), atoms.end());
        for (unsigned m = 1; m < (1u << a.size()); ++m) {
            std::vector<std::string> s;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (m & (1u << i)) s.push_back(a[i]);
            }
            out.push_back(s);
        }
    } else {
        for (const auto& a : atoms) out.push_back({a});
    }
    return out;
}

// Exhaustive per-question search over the joint space of every field the
// question's rules read.
std::set<Pair> brute_force_pairs(const std::vector<Rule>& rules) {
    std::set<Pair> out;
    for (const auto& q : schema().questions) {
        if (q.selection != Selection::single) continue;
        std::vector<const Rule*> own;
        std::set<std::string> names;
        for (const auto& r : rules) {
            if (r.question_id != q.id) continue;
            own.push_back(&r);
            for (const auto& c : r.when) names.insert(c.field);
        }
        std::vector<const FieldSpec*> fields;
        std::vector<std::vector<std::vector<std::string>>> values;
        for (const auto& n : names) {
            fields.push_back(find_field(n));
            values.push_back(oracle_values(*fields.back(), rules));
        }
        std::vector<std::size_t> idx(fields.size(), 0);
        while (true) {
            EvidenceRecord e;
            for (std::size_t i = 0; i < fields.size(); ++i) fields[i]->set(e, values[i][idx[i]]);
            for (std::size_t i = 0; i < own.size(); ++i) {
                for (std::size_t j = i + 1; j < own.size(); ++j) {
                    const Rule& a = *own[i];
                    const Rule& b = *own[j];
                    if (a.priority == b.priority && a.category_id != b.category_id && rule_matches(a, e) &&
                        rule_matches(b, e)) {
                        out.insert(std::minmax(a.id, b.id));
                    }
                }
            }
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == values[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return out;
}

std::set<Pair> detected_pairs(const std::vector<RuleOverlap>& overlaps) {
    std::set<Pair> out;
    for (const auto& o : overlaps) out.insert(std::minmax(o.rule_a, o.rule_b));
    return out;
}

const Rule& by_id(const std::vector<Rule>& rules, const std::string& id) {
    return *std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == id; });
}

void expect_valid_witnesses(const std::vector<Rule>& rules, const std::vector<RuleOverlap>& overlaps) {
    for (const auto& o : overlaps) {
        const Rule& a = by_id(rules, o.rule_a);
        const Rule& b = by_id(rules, o.rule_b);
        EXPECT_NE(o.rule_a, o.rule_b);
        EXPECT_EQ(a.priority, b.priority);
        EXPECT_NE(a.category_id, b.category_id);
        EXPECT_TRUE(rule_matches(a, o.witness));
        EXPECT_TRUE(rule_matches(b, o.witness));
    }
}

}  // namespace

TEST(Overlaps, ShippedRulesHaveNone) {
    EXPECT_TRUE(detect_rule_overlaps(schema(), builtin_rules()).empty());
    EXPECT_TRUE(brute_force_pairs(builtin_rules()).empty());
}

TEST(Overlaps, EmptyRuleSet) { EXPECT_TRUE(detect_rule_overlaps(schema(), {}).empty()); }

TEST(Overlaps, FixtureYieldsExactlyOne) {
    auto rules = overlap_fixture();
    auto found = detect_rule_overlaps(schema(), rules);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].question_id, "who");
    EvidenceRecord expected;
    expected.attacker_motive = Motive::damage_or_theft;
    EXPECT_EQ(found[0].witness, expected);
    expect_valid_witnesses(rules, found);
}

TEST(Overlaps, FixtureMixedIntoShippedRules) {
    auto rules = builtin_rules();
    for (auto r : overlap_fixture()) rules.push_back(r);
    auto found = detect_rule_overlaps(schema(), rules);
    EXPECT_EQ(detected_pairs(found), brute_force_pairs(rules));
    EXPECT_EQ(found.size(), 1u);
}

TEST(Overlaps, MultiSelectIgnored) {
    auto rules = builtin_rules();
    for (auto& r : rules) {
        if (r.question_id == "what") r.when = {{"attacker_motive", ConditionOp::present, {}}};
    }
    EXPECT_TRUE(detect_rule_overlaps(schema(), rules).empty());
}

TEST(Overlaps, SameCategoryIsNotAnOverlap) {
    std::vector<Rule> rules{{"a", "who", "joker", 1, {{"attacker_motive", ConditionOp::present, {}}}},
                            {"b", "who", "joker", 1, {{"attacker_kind", ConditionOp::present, {}}}}};
    EXPECT_TRUE(detect_rule_overlaps(schema(), rules).empty());
}

TEST(Overlaps, DisjointConditionsNeedJointWitness) {
    std::vector<Rule> rules{
        {"a", "who", "joker", 1, {{"attacker_motive", ConditionOp::eq, {"political"}}}},
        {"b", "who", "black_hat", 1,
         {{"attacker_motive", ConditionOp::absent, {}}, {"attacker_kind", ConditionOp::eq, {"group"}}}}};
    EXPECT_TRUE(detect_rule_overlaps(schema(), rules).empty());
    rules[1].when[0] = {"attacker_kind", ConditionOp::in, {"group", "individual"}};
    auto found = detect_rule_overlaps(schema(), rules);
    ASSERT_EQ(found.size(), 1u);
    expect_valid_witnesses(rules, found);
}

TEST(Overlaps, TextAndIntegerFreshValues) {
    std::vector<Rule> rules{
        {"a", "how_channel", "legacy_ports", 1, {{"channel.port", ConditionOp::present, {}}}},
        {"b", "how_channel", "undefined_ports", 1,
         {{"attacker_name", ConditionOp::present, {}}, {"channel.port", ConditionOp::in, {"0", "1"}}}},
        {"c", "how_channel", "virtualization", 2, {{"attacker_name", ConditionOp::eq, {"x"}}}},
        {"d", "how_channel", "user_to_network", 2, {{"attacker_name", ConditionOp::absent, {}}}}};
    auto found = detect_rule_overlaps(schema(), rules);
    EXPECT_EQ(detected_pairs(found), brute_force_pairs(rules));
    expect_valid_witnesses(rules, found);
    EXPECT_EQ(found.size(), 1u);
}

// Random small rule sets: detector and brute force agree on which pairs clash.
TEST(Overlaps, AgreesWithBruteForceOnRandomRuleSets) {
    std::mt19937_64 rng(53);
    const std::vector<std::string> field_pool{"attacker_motive", "attacker_kind", "channel.virtualization",
                                              "channel.mitm_or_botnet", "source_count"};
    const auto& who = schema().question("who");
    for (int round = 0; round < 150; ++round) {
        std::vector<Rule> rules;
        for (int i = 0, n = 2 + static_cast<int>(rng() % 4); i < n; ++i) {
            Rule r{"r" + std::to_string(i), "who", who.categories[rng() % who.categories.size()].id,
                   static_cast<int>(rng() % 2), {}};
            for (int k = 0, m = 1 + static_cast<int>(rng() % 2); k < m; ++k) {
                const FieldSpec* f = find_field(field_pool[rng() % field_pool.size()]);
                switch (rng() % 4) {
                    case 0: r.when.push_back({f->name, ConditionOp::present, {}}); break;
                    case 1: r.when.push_back({f->name, ConditionOp::absent, {}}); break;
                    case 2: r.when.push_back({f->name, ConditionOp::eq, {f->domain[rng() % f->domain.size()]}}); break;
                    default:
                        r.when.push_back({f->name, ConditionOp::in,
                                          {f->domain[rng() % f->domain.size()], f->domain[rng() % f->domain.size()]}});
                }
            }
            rules.push_back(r);
        }
        auto found = detect_rule_overlaps(schema(), rules);
        ASSERT_EQ(detected_pairs(found), brute_force_pairs(rules)) << serialize_rules(rules);
        expect_valid_witnesses(rules, found);
    }
}

TEST(Overlaps, RejectsForeignRules) {
    std::vector<Rule> rules{{"a", "who", "pirate", 1, {{"attacker_motive", ConditionOp::present, {}}}}};
    EXPECT_THROW(detect_rule_overlaps(schema(), rules), SchemaMismatch);
}
