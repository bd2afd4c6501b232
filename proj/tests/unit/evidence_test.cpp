#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace seqtax;
using seqtax::testing::random_evidence;

TEST(Evidence, EmptyObjectIsAllAbsent) {
    auto e = load_evidence("{}");
    EXPECT_EQ(e, EvidenceRecord{});
}

TEST(Evidence, RoundTripRandom) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        auto e = random_evidence(rng);
        EXPECT_EQ(load_evidence(evidence_to_json(e).dump()), e);
    }
}

TEST(Evidence, RoundTripGolden) {
    for (const auto& [name, d] : golden_corpus().dossiers) {
        EXPECT_EQ(load_evidence(evidence_to_json(d.evidence).dump()), d.evidence) << name;
    }
}

TEST(Evidence, UnknownFieldNamed) {
    try {
        load_evidence(R"({"motive":"political"})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.subject(), "motive");
    }
}

TEST(Evidence, UnknownNestedField) {
    EXPECT_THROW(load_evidence(R"({"channel":{"protocol":"tcp"}})"), ParseError);
}

TEST(Evidence, BadEnumValueNamed) {
    try {
        load_evidence(R"({"attacker_motive":"boredom"})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.subject(), "attacker_motive");
        EXPECT_NE(std::string(e.what()).find("boredom"), std::string::npos);
    }
}

TEST(Evidence, PortBounds) {
    EXPECT_EQ(load_evidence(R"({"channel":{"port":0}})").channel->port, 0);
    EXPECT_EQ(load_evidence(R"({"channel":{"port":65535}})").channel->port, 65535);
    EXPECT_THROW(load_evidence(R"({"channel":{"port":65536}})"), ParseError);
    EXPECT_THROW(load_evidence(R"({"channel":{"port":-1}})"), ParseError);
    EXPECT_THROW(load_evidence(R"({"channel":{"port":"135"}})"), ParseError);
}

TEST(Evidence, WrongTypes) {
    EXPECT_THROW(load_evidence(R"([])"), ParseError);
    EXPECT_THROW(load_evidence(R"({"symptoms":"request_flood"})"), ParseError);
    EXPECT_THROW(load_evidence(R"({"channel":{"virtualization":"yes"}})"), ParseError);
}

TEST(Evidence, DuplicateKey) {
    EXPECT_THROW(load_evidence(R"({"initiation":"host","initiation":"network"})"), DuplicateKeyError);
}

TEST(FieldRegistry, GetSetRoundTrip) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto e = random_evidence(rng);
        for (const auto& f : evidence_fields()) {
            EvidenceRecord copy;
            f.set(copy, f.get(e));
            EXPECT_EQ(f.get(copy), f.get(e)) << f.name;
        }
    }
}

TEST(FieldRegistry, DomainsMatchEnums) {
    EXPECT_EQ(find_field("attacker_motive")->domain.size(), 5u);
    EXPECT_EQ(find_field("target_scope_hint")->domain.size(), 8u);
    EXPECT_EQ(find_field("channel.virtualization")->kind, FieldKind::boolean);
    EXPECT_TRUE(find_field("symptoms")->multi_valued);
    EXPECT_EQ(find_field("nope"), nullptr);
}
