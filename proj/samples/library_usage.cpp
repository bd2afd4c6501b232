// Classify an evidence file with the embedded schema and rules, then print the
// answers and the defense plan.
//
//   seqtax_sample samples/evidence/slammer.json

#include <fstream>
#include <iostream>
#include <sstream>

#include "seqtax/seqtax.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <evidence.json>\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    std::stringstream text;
    text << in.rdbuf();

    try {
        const auto& schema = seqtax::builtin_sequential_schema();
        auto evidence = seqtax::load_evidence(text.str());
        auto classification = seqtax::classify(schema, seqtax::builtin_rules(), evidence);
        auto plan = seqtax::plan(schema, classification, evidence.attack_name);

        for (const auto& a : classification.assignments) {
            std::cout << a.question_id << ": " << seqtax::answer_text(schema, a) << "\n";
        }
        for (const auto& e : plan.entries) std::cout << "- " << e.action.text << "\n";
    } catch (const seqtax::Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 2;
    }
    return 0;
}
