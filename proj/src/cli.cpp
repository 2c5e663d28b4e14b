#include "crsym/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "crsym/parse.hpp"

namespace crsym {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::syntax_error:
        case Errc::not_real:
        case Errc::w_illegal:
        case Errc::antiholomorphic_coefficient:
        case Errc::malformed_input:
        case Errc::io_error:
            return kExitParseError;
        case Errc::no_rotation:
            return kExitNoRotation;
        case Errc::internal:
        case Errc::non_terminating:
        case Errc::rank_exceeds_one:
            return kExitInternal;
        default:
            return kExitInvalidModel;
    }
}

namespace {

Model load_model(const std::string& text) {
    ModelFile f = parse_model_file(text);
    return validate_model(f.poly, f.weight);
}

const char* component_kind(const Rat& mu) {
    if (mu < 0) return "shift";
    if (mu == 0) return "rigid rotation";
    return "generalized rotation";
}

void fill_aut(Report& r, const AutReport& aut) {
    for (const ComponentBasis& c : aut.components) {
        ComponentInfo ci;
        ci.weight = rat_str(c.mu);
        ci.kind = component_kind(c.mu);
        ci.dim_real = c.dim_real;
        for (const VectorField& f : c.basis) ci.basis.push_back(f.str());
        r.components.push_back(std::move(ci));
    }
    r.dim_g_c = aut.dim_g_c;
    r.w_tangent = aut.w_tangent;
    r.euler_tangent = aut.euler_tangent;
}

void warn_if_degenerate(Report& r, const Model& m) {
    DegeneracyResult deg = is_holomorphically_degenerate(m);
    if (deg.degenerate)
        r.warnings.push_back(
            "model is holomorphically degenerate; witness " + deg.witness->str());
}

const VectorField& first_rotation(const AutReport& aut) {
    auto gc = aut.generalized_rotations();
    if (gc.empty())
        throw Error(Errc::no_rotation, "the model admits no generalized rotation");
    return gc.front()->basis.front();
}

} // namespace

Report cmd_check(const std::string& text, const std::string& source) {
    Report r;
    r.command = "check";
    Model m = load_model(text);
    r.model = describe_model(m, source);
    warn_if_degenerate(r, m);
    return r;
}

Report cmd_aut(const std::string& text, const std::string& source) {
    Report r;
    r.command = "aut";
    Model m = load_model(text);
    r.model = describe_model(m, source);
    warn_if_degenerate(r, m);
    fill_aut(r, compute_g_c(m));
    return r;
}

Report cmd_chains(const std::string& text, const std::string& source) {
    Report r;
    r.command = "chains";
    Model m = load_model(text);
    r.model = describe_model(m, source);
    AutReport aut = compute_g_c(m);
    fill_aut(r, aut);
    Decomposition d = extract_chains(m, first_rotation(aut));
    r.decomposition = describe_decomposition(d);
    return r;
}

Report cmd_embed(const std::string& text, const std::string& source) {
    Report r;
    r.command = "embed";
    Model m = load_model(text);
    r.model = describe_model(m, source);
    AutReport aut = compute_g_c(m);
    fill_aut(r, aut);
    Decomposition d = extract_chains(m, first_rotation(aut));
    r.decomposition = describe_decomposition(d);
    QuadricEmbedding e = build_embedding(d);
    r.embedding = describe_embedding(e, verify_maps_into(e, m),
                                     verify_f_related(e, d.rotation),
                                     verify_quadric_symmetry(e));
    if (!r.embedding->maps_into || !r.embedding->f_related || !r.embedding->quadric_symmetry)
        throw Error(Errc::internal, "embedding verification failed");
    return r;
}

Report cmd_classify(const std::string& text, const std::string& source) {
    Report r;
    r.command = "classify";
    Model m = load_model(text);
    r.model = describe_model(m, source);
    Verdict v = classify_two_jet(m);
    VerdictInfo vi;
    vi.tag = verdict_tag_name(v.tag);
    if (v.witness) vi.witness = v.witness->str();
    r.verdict = vi;
    if (v.decomposition) r.decomposition = describe_decomposition(*v.decomposition);
    return r;
}

Report cmd_corpus(uint64_t seed, uint64_t count, CorpusFamily family,
                  const std::string& out_dir) {
    Report r;
    r.command = "corpus";
    r.seed = seed;
    r.family = corpus_family_name(family);

    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

    for (uint64_t k = 0; k < count; ++k) {
        CorpusModel cm = make_corpus_model(seed, k, family);
        char name[32];
        std::snprintf(name, sizeof name, "corpus_%04llu.crm",
                      static_cast<unsigned long long>(k));
        std::string path = out_dir.empty() ? name : out_dir + "/" + name;
        {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw Error(Errc::io_error, "cannot write " + path);
            out << cm.text;
        }

        CorpusEntry entry;
        entry.file = name;
        entry.family = cm.family;
        entry.weight = cm.model.weight.str();
        entry.pairs = cm.pair_count;

        AutReport aut = compute_g_c(cm.model);
        entry.dim_g_c = aut.dim_g_c;
        bool ok = aut.dim_g_c >= 1;
        if (ok) {
            const VectorField& y = first_rotation(aut);
            Decomposition d = extract_chains(cm.model, y);
            Model back = synthesize_model(d.pairs, cm.model.weight);
            entry.round_trip = back.poly == cm.model.poly;
            for (const ChainPair& p : d.pairs)
                entry.round_trip = entry.round_trip && verify_pair(y, p);
            QuadricEmbedding e = build_embedding(d);
            entry.embedding_ok = verify_maps_into(e, cm.model) && verify_f_related(e, y) &&
                                 verify_quadric_symmetry(e);
        }
        r.corpus.push_back(std::move(entry));
    }
    return r;
}

} // namespace crsym
