// SPDX-License-Identifier: Apache-2.0
//
// seqtax: classify attacks, run the triage wizard, audit the taxonomy, manage
// the dossier corpus and serve the HTTP API.
//
// Exit codes: 0 success, 1 domain failure, 2 usage or input error.

#include <CLI11.hpp>

#include <pthread.h>
#include <signal.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "seqtax/api.hpp"
#include "seqtax/seqtax.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

/// Input problems that end the command with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

template <class F>
auto parse_input(const std::string& what, const std::string& path, F&& parse) {
    try {
        return parse(read_file(path));
    } catch (const seqtax::Error& e) {
        throw UsageError(what + " '" + path + "': " + e.what());
    }
}

seqtax::TaxonomySchema active_schema() {
    const char* path = std::getenv("SEQTAX_SCHEMA");
    if (!path || !*path) return seqtax::builtin_sequential_schema();
    auto schema = parse_input("schema", path, [](const std::string& s) { return seqtax::load_schema(s); });
    auto violations = seqtax::validate_schema(schema);
    if (!violations.empty()) {
        throw UsageError("schema '" + std::string(path) + "' is invalid: " + violations.front().message);
    }
    return schema;
}

std::vector<seqtax::Rule> active_rules(const seqtax::TaxonomySchema& schema, const std::string& path) {
    auto rules = path.empty() ? seqtax::builtin_rules()
                              : parse_input("rules", path, [](const std::string& s) { return seqtax::load_rules(s); });
    try {
        seqtax::check_rules_against(schema, rules);
    } catch (const seqtax::SchemaMismatch& e) {
        throw UsageError(e.what());
    }
    return rules;
}

seqtax::Corpus active_corpus(const seqtax::TaxonomySchema& schema, const std::string& path) {
    if (path.empty()) return seqtax::golden_corpus();
    return parse_input("corpus", path, [&](const std::string& s) { return seqtax::import_corpus(s, schema); });
}

void print_result(const seqtax::TaxonomySchema& schema, const seqtax::Classification& c,
                  const seqtax::DefensePlan& p, const std::string& format) {
    if (format == "json") {
        std::cout << seqtax::result_to_json(c, p).dump(2) << "\n";
    } else {
        std::cout << seqtax::render_result(schema, c, p);
    }
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
    std::string input;
    std::string rules;
    std::string format = "table";
};

int cmd_classify(const ClassifyArgs& args) {
    auto schema = active_schema();
    auto rules = active_rules(schema, args.rules);
    auto evidence = parse_input("evidence", args.input, [](const std::string& s) { return seqtax::load_evidence(s); });
    auto c = seqtax::classify(schema, rules, evidence);
    print_result(schema, c, seqtax::plan(schema, c, evidence.attack_name), args.format);
    return kOk;
}

struct WizardArgs {
    std::string name;
    std::string format = "table";
};

int cmd_wizard(const WizardArgs& args) {
    auto schema = active_schema();
    seqtax::AnswerMap answers;
    try {
        answers = seqtax::run_wizard(schema, std::cin, std::cerr);
    } catch (const seqtax::Error& e) {
        throw UsageError(e.what());
    }
    auto c = seqtax::classification_from_answers(schema, answers);
    std::cerr << "\n";
    print_result(schema, c, seqtax::plan(schema, c, args.name), args.format);
    return kOk;
}

struct AuditArgs {
    std::string corpus;
    std::string rules;
    std::string flags;
    int repetitions = seqtax::kDefaultRepetitions;
    std::uint64_t seed = seqtax::kDefaultAuditSeed;
    bool compare = false;
    std::string format = "text";
};

int cmd_audit(const AuditArgs& args) {
    auto schema = active_schema();
    auto rules = active_rules(schema, args.rules);
    auto corpus = active_corpus(schema, args.corpus);
    auto flags = args.flags.empty()
                     ? seqtax::builtin_manual_flags()
                     : parse_input("flags", args.flags, [](const std::string& s) { return seqtax::load_manual_flags(s); });
    auto report = seqtax::audit(schema, rules, corpus, args.repetitions, flags, args.seed);
    if (args.format == "json") {
        std::cout << seqtax::audit_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << seqtax::render_audit_report(report);
    }
    if (args.compare) {
        std::cout << "\n" << seqtax::render_comparison({report}, seqtax::published_comparison_columns());
    }
    return report.computed_pass() ? kOk : kDomainFailure;
}

struct CorpusArgs {
    std::string corpus;
    std::string name;
    std::string file;
    std::string output;
};

int cmd_corpus_list(const CorpusArgs& args) {
    auto corpus = active_corpus(active_schema(), args.corpus);
    for (const auto& [name, d] : corpus.dossiers) std::cout << name << "\n";
    return kOk;
}

int cmd_corpus_show(const CorpusArgs& args) {
    auto corpus = active_corpus(active_schema(), args.corpus);
    auto it = corpus.dossiers.find(args.name);
    if (it == corpus.dossiers.end()) {
        std::cerr << "seqtax: unknown dossier '" << args.name << "'\n";
        return kDomainFailure;
    }
    std::cout << seqtax::dossier_to_json(it->second).dump(2) << "\n";
    return kOk;
}

int cmd_corpus_export(const CorpusArgs& args) {
    auto text = seqtax::export_corpus(active_corpus(active_schema(), args.corpus));
    if (args.output.empty()) {
        std::cout << text;
    } else {
        write_file(args.output, text);
    }
    return kOk;
}

int cmd_corpus_validate(const CorpusArgs& args) {
    auto corpus = active_corpus(active_schema(), args.file);
    std::cout << args.file << ": " << corpus.size() << " dossiers\n";
    return kOk;
}

int cmd_corpus_upsert(const CorpusArgs& args) {
    auto schema = active_schema();
    auto corpus = active_corpus(schema, args.corpus);
    auto dossier = parse_input("dossier", args.file, [&](const std::string& s) {
        return seqtax::dossier_from_json(seqtax::json_io::parse(s), schema);
    });
    const auto name = dossier.name;
    corpus = seqtax::upsert(std::move(corpus), std::move(dossier));
    write_file(args.corpus, seqtax::export_corpus(corpus));
    std::cout << "stored '" << name << "' (" << corpus.size() << " dossiers)\n";
    return kOk;
}

struct CompareArgs {
    std::string name;
    std::string corpus;
};

int cmd_compare(const CompareArgs& args) {
    auto schema = active_schema();
    auto corpus = active_corpus(schema, args.corpus);
    auto it = corpus.dossiers.find(args.name);
    if (it == corpus.dossiers.end()) {
        std::cerr << "seqtax: unknown dossier '" << args.name << "'\n";
        return kDomainFailure;
    }
    std::cout << seqtax::render_dossier_comparison(schema, it->second);
    return kOk;
}

struct ServeArgs {
    int port = seqtax::kDefaultApiPort;
    std::string host = "0.0.0.0";
    std::string corpus;
    std::string rules;
    std::string ui_origin;
    std::string ui_dir;
};

int cmd_serve(const ServeArgs& args) {
    auto schema = active_schema();
    auto rules = active_rules(schema, args.rules);
    auto corpus = active_corpus(schema, args.corpus);
    seqtax::ApiService service(schema, rules, seqtax::builtin_actions(), corpus);

    httplib::Server server;
    // The library default adds SO_REUSEPORT, which would let two servers share a port.
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
    });
    seqtax::ServerOptions options;
    options.ui_origin = args.ui_origin;
    options.ui_dir = args.ui_dir;
    options.log = [](const std::string& line) {
        std::cerr << seqtax::format_timestamp(std::chrono::system_clock::now()) << " " << line << std::endl;
    };
    seqtax::install_routes(server, service, options);

    // Signals go to a dedicated thread; the server threads inherit the mask.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    if (!server.bind_to_port(args.host, args.port)) {
        std::cerr << "seqtax: cannot bind " << args.host << ":" << args.port << "\n";
        return kUsage;
    }
    std::cerr << "seqtax: serving " << corpus.size() << " dossiers on " << args.host << ":" << args.port << std::endl;

    std::atomic<bool> signalled{false};
    std::thread watcher([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        signalled = true;
        server.stop();
    });
    server.listen_after_bind();
    if (!signalled) kill(getpid(), SIGTERM);  // listen ended on its own; release the watcher
    watcher.join();
    std::cerr << "seqtax: stopped" << std::endl;
    return signalled ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential-question network attack classification"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "Classify an evidence record and plan defenses");
    classify->add_option("--input", classify_args.input, "Evidence JSON file")->required();
    classify->add_option("--rules", classify_args.rules, "Rules JSON file (default: shipped rules)");
    classify->add_option("--format", classify_args.format)->check(CLI::IsMember({"json", "table"}));

    WizardArgs wizard_args;
    auto* wizard = app.add_subcommand("wizard", "Answer the questions interactively");
    wizard->add_option("--name", wizard_args.name, "Attack name for the report");
    wizard->add_option("--format", wizard_args.format)->check(CLI::IsMember({"json", "table"}));

    AuditArgs audit_args;
    auto* audit = app.add_subcommand("audit", "Check the taxonomy requirements over a corpus");
    audit->add_option("--corpus", audit_args.corpus, "Corpus NDJSON file (default: golden corpus)");
    audit->add_option("--rules", audit_args.rules, "Rules JSON file");
    audit->add_option("--flags", audit_args.flags, "Manual flags JSON file");
    audit->add_option("--repetitions", audit_args.repetitions, "Permuted-rule runs per record")
        ->check(CLI::Range(2, 1000));
    audit->add_option("--seed", audit_args.seed, "Permutation seed");
    audit->add_flag("--compare", audit_args.compare, "Also print the comparison matrix");
    audit->add_option("--format", audit_args.format)->check(CLI::IsMember({"json", "text"}));

    CorpusArgs corpus_args;
    auto* corpus = app.add_subcommand("corpus", "Inspect and maintain the dossier corpus");
    corpus->require_subcommand(1);
    auto* corpus_list = corpus->add_subcommand("list", "List dossier names");
    corpus_list->add_option("--corpus", corpus_args.corpus);
    auto* corpus_show = corpus->add_subcommand("show", "Print one dossier as JSON");
    corpus_show->add_option("name", corpus_args.name)->required();
    corpus_show->add_option("--corpus", corpus_args.corpus);
    auto* corpus_export = corpus->add_subcommand("export", "Write the corpus as NDJSON");
    corpus_export->add_option("--corpus", corpus_args.corpus);
    corpus_export->add_option("--output", corpus_args.output);
    auto* corpus_validate = corpus->add_subcommand("validate", "Check that an NDJSON corpus imports");
    corpus_validate->add_option("file", corpus_args.file)->required();
    auto* corpus_upsert = corpus->add_subcommand("upsert", "Insert or replace a dossier in a corpus file");
    corpus_upsert->add_option("--corpus", corpus_args.corpus)->required();
    corpus_upsert->add_option("--dossier", corpus_args.file, "Dossier JSON file")->required();

    CompareArgs compare_args;
    auto* compare = app.add_subcommand("compare", "Show one attack under every stored taxonomy");
    compare->add_option("--name", compare_args.name)->required();
    compare->add_option("--corpus", compare_args.corpus);

    ServeArgs serve_args;
    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    serve->add_option("--port", serve_args.port)->check(CLI::Range(0, 65535));
    serve->add_option("--host", serve_args.host);
    serve->add_option("--corpus", serve_args.corpus);
    serve->add_option("--rules", serve_args.rules);
    serve->add_option("--ui-origin", serve_args.ui_origin, "Origin allowed by CORS");
    serve->add_option("--ui-dir", serve_args.ui_dir, "Static UI assets served under /ui");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*classify) return cmd_classify(classify_args);
        if (*wizard) return cmd_wizard(wizard_args);
        if (*audit) return cmd_audit(audit_args);
        if (*corpus_list) return cmd_corpus_list(corpus_args);
        if (*corpus_show) return cmd_corpus_show(corpus_args);
        if (*corpus_export) return cmd_corpus_export(corpus_args);
        if (*corpus_validate) return cmd_corpus_validate(corpus_args);
        if (*corpus_upsert) return cmd_corpus_upsert(corpus_args);
        if (*compare) return cmd_compare(compare_args);
        if (*serve) return cmd_serve(serve_args);
    } catch (const UsageError& e) {
        std::cerr << "seqtax: " << e.what() << "\n";
        return kUsage;
    } catch (const seqtax::Error& e) {
        std::cerr << "seqtax: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
