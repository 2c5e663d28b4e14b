#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crsym/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw crsym::Error(crsym::Errc::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string file;
    bool json = false;
    bool timings = false;
};

int run_model_command(const std::string& name, const Options& opt,
                      crsym::Report (*fn)(const std::string&, const std::string&)) {
    auto t0 = std::chrono::steady_clock::now();
    crsym::Report r = fn(read_file(opt.file), opt.file);
    if (opt.timings) {
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    if (opt.json)
        std::cout << r.to_json_string();
    else
        std::cout << r.to_text();
    (void)name;
    return crsym::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic analysis of weighted homogeneous model hypersurfaces in C^3"};
    app.require_subcommand(1);

    Options opt;
    struct CorpusOpts {
        uint64_t seed = 1;
        uint64_t count = 10;
        std::string family = "mixed";
        std::string out = "corpus";
        bool json = false;
    } corpus;

    auto add_model_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("file", opt.file, "model file")->required();
        c->add_flag("--json", opt.json, "emit the JSON report");
        c->add_flag("--timings", opt.timings, "include elapsed time in the report");
        return c;
    };

    CLI::App* c_check = add_model_cmd("check", "validate a model file: weight, multitype");
    CLI::App* c_aut = add_model_cmd("aut", "rigid graded components of aut(M_P, 0)");
    CLI::App* c_chains = add_model_cmd("chains", "symmetric chain decomposition");
    CLI::App* c_embed = add_model_cmd("embed", "hyperquadric embedding");
    CLI::App* c_classify = add_model_cmd("classify", "2-jet determination verdict");

    CLI::App* c_corpus = app.add_subcommand("corpus", "generate seeded corpus models");
    c_corpus->add_option("--seed", corpus.seed, "generator seed");
    c_corpus->add_option("--count", corpus.count, "number of models");
    c_corpus->add_option("--family", corpus.family,
                         "example-1.4 | example-3.5 | mixed");
    c_corpus->add_option("--out", corpus.out, "output directory");
    c_corpus->add_flag("--json", corpus.json, "emit the JSON summary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return run_model_command("check", opt, crsym::cmd_check);
        if (c_aut->parsed()) return run_model_command("aut", opt, crsym::cmd_aut);
        if (c_chains->parsed()) return run_model_command("chains", opt, crsym::cmd_chains);
        if (c_embed->parsed()) return run_model_command("embed", opt, crsym::cmd_embed);
        if (c_classify->parsed())
            return run_model_command("classify", opt, crsym::cmd_classify);
        if (c_corpus->parsed()) {
            crsym::Report r = crsym::cmd_corpus(corpus.seed, corpus.count,
                                                crsym::corpus_family_parse(corpus.family),
                                                corpus.out);
            if (corpus.json)
                std::cout << r.to_json_string();
            else
                std::cout << r.to_text();
            return crsym::kExitOk;
        }
    } catch (const crsym::Error& e) {
        std::cerr << crsym::errc_name(e.code()) << ": " << e.what() << "\n";
        return crsym::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "Internal: " << e.what() << "\n";
        return crsym::kExitInternal;
    }
    return crsym::kExitOk;
}
