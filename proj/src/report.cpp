#include "crsym/report.hpp"

#include <sstream>

#include <json.hpp>

namespace crsym {

using Json = nlohmann::ordered_json;

namespace {

std::string multitype_str(const std::optional<Rat>& m) {
    return m ? rat_str(*m) : "inf";
}

Json to_json(const ModelInfo& m) {
    return Json{{"source", m.source},
                {"polynomial", m.polynomial},
                {"weight", m.weight},
                {"multitype", Json::array({m.multitype_m1, m.multitype_m2})}};
}

ModelInfo model_from_json(const Json& j) {
    ModelInfo m;
    m.source = j.at("source").get<std::string>();
    m.polynomial = j.at("polynomial").get<std::string>();
    m.weight = j.at("weight").get<std::string>();
    m.multitype_m1 = j.at("multitype").at(0).get<std::string>();
    m.multitype_m2 = j.at("multitype").at(1).get<std::string>();
    return m;
}

Json to_json(const PairInfo& p) {
    return Json{{"length", p.length}, {"u", p.u},         {"v", p.v},
                {"c", p.c},           {"d", p.d},         {"u_degrees", p.u_degrees}};
}

PairInfo pair_from_json(const Json& j) {
    PairInfo p;
    p.length = j.at("length").get<int>();
    p.u = j.at("u").get<std::vector<std::string>>();
    p.v = j.at("v").get<std::vector<std::string>>();
    p.c = j.at("c").get<std::vector<std::string>>();
    p.d = j.at("d").get<std::vector<std::string>>();
    p.u_degrees = j.at("u_degrees").get<std::vector<std::string>>();
    return p;
}

Json to_json(const DecompositionInfo& d) {
    Json pairs = Json::array();
    for (const PairInfo& p : d.pairs) pairs.push_back(to_json(p));
    return Json{{"rotation", d.rotation}, {"pairs", pairs}};
}

DecompositionInfo decomposition_from_json(const Json& j) {
    DecompositionInfo d;
    d.rotation = j.at("rotation").get<std::string>();
    for (const Json& p : j.at("pairs")) d.pairs.push_back(pair_from_json(p));
    return d;
}

Json to_json(const EmbeddingInfo& e) {
    Json pairing = Json::array();
    for (const auto& p : e.pairing)
        pairing.push_back(Json::array({Json::array({p[0], p[1]}), Json::array({p[2], p[3]})}));
    return Json{{"ambient_dim", e.ambient_dim},
                {"lengths", e.lengths},
                {"pairing", pairing},
                {"zeta", e.zeta},
                {"zeta_prime", e.zeta_prime},
                {"c", e.c},
                {"d", e.d},
                {"checks",
                 Json{{"maps_into", e.maps_into},
                      {"f_related", e.f_related},
                      {"quadric_symmetry", e.quadric_symmetry}}}};
}

EmbeddingInfo embedding_from_json(const Json& j) {
    EmbeddingInfo e;
    e.ambient_dim = j.at("ambient_dim").get<int>();
    e.lengths = j.at("lengths").get<std::vector<int>>();
    for (const Json& p : j.at("pairing"))
        e.pairing.push_back({p.at(0).at(0).get<int>(), p.at(0).at(1).get<int>(),
                             p.at(1).at(0).get<int>(), p.at(1).at(1).get<int>()});
    e.zeta = j.at("zeta").get<std::vector<std::vector<std::string>>>();
    e.zeta_prime = j.at("zeta_prime").get<std::vector<std::vector<std::string>>>();
    e.c = j.at("c").get<std::vector<std::vector<std::string>>>();
    e.d = j.at("d").get<std::vector<std::vector<std::string>>>();
    e.maps_into = j.at("checks").at("maps_into").get<bool>();
    e.f_related = j.at("checks").at("f_related").get<bool>();
    e.quadric_symmetry = j.at("checks").at("quadric_symmetry").get<bool>();
    return e;
}

} // namespace

bool Report::operator==(const Report& o) const {
    return schema_version == o.schema_version && command == o.command && model == o.model &&
           components == o.components && dim_g_c == o.dim_g_c && w_tangent == o.w_tangent &&
           euler_tangent == o.euler_tangent && decomposition == o.decomposition &&
           embedding == o.embedding && verdict == o.verdict && warnings == o.warnings &&
           seed == o.seed && family == o.family && corpus == o.corpus;
}

std::string Report::to_json_string() const {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    if (model) j["model"] = to_json(*model);
    if (!components.empty()) {
        Json cs = Json::array();
        for (const ComponentInfo& c : components)
            cs.push_back(Json{{"weight", c.weight},
                              {"kind", c.kind},
                              {"dim_real", c.dim_real},
                              {"basis", c.basis}});
        j["components"] = cs;
    }
    if (dim_g_c) j["dim_g_c"] = *dim_g_c;
    if (w_tangent) j["universal"] = Json{{"W_tangent", *w_tangent},
                                         {"E_tangent", euler_tangent.value_or(false)}};
    if (decomposition) j["decomposition"] = to_json(*decomposition);
    if (embedding) j["embedding"] = to_json(*embedding);
    if (verdict) {
        Json v{{"tag", verdict->tag}};
        if (verdict->witness) v["witness"] = *verdict->witness;
        j["verdict"] = v;
    }
    if (!warnings.empty()) j["warnings"] = warnings;
    if (seed) j["seed"] = *seed;
    if (family) j["family"] = *family;
    if (!corpus.empty()) {
        Json cs = Json::array();
        for (const CorpusEntry& c : corpus)
            cs.push_back(Json{{"file", c.file},
                              {"family", c.family},
                              {"weight", c.weight},
                              {"pairs", c.pairs},
                              {"dim_g_c", c.dim_g_c},
                              {"round_trip", c.round_trip},
                              {"embedding_ok", c.embedding_ok}});
        j["corpus"] = cs;
    }
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j.dump(2) + "\n";
}

Report Report::from_json_string(const std::string& text) {
    Json j = Json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    if (j.contains("model")) r.model = model_from_json(j.at("model"));
    if (j.contains("components")) {
        for (const Json& c : j.at("components")) {
            ComponentInfo ci;
            ci.weight = c.at("weight").get<std::string>();
            ci.kind = c.at("kind").get<std::string>();
            ci.dim_real = c.at("dim_real").get<int>();
            ci.basis = c.at("basis").get<std::vector<std::string>>();
            r.components.push_back(std::move(ci));
        }
    }
    if (j.contains("dim_g_c")) r.dim_g_c = j.at("dim_g_c").get<int>();
    if (j.contains("universal")) {
        r.w_tangent = j.at("universal").at("W_tangent").get<bool>();
        r.euler_tangent = j.at("universal").at("E_tangent").get<bool>();
    }
    if (j.contains("decomposition"))
        r.decomposition = decomposition_from_json(j.at("decomposition"));
    if (j.contains("embedding")) r.embedding = embedding_from_json(j.at("embedding"));
    if (j.contains("verdict")) {
        VerdictInfo v;
        v.tag = j.at("verdict").at("tag").get<std::string>();
        if (j.at("verdict").contains("witness"))
            v.witness = j.at("verdict").at("witness").get<std::string>();
        r.verdict = v;
    }
    if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
    if (j.contains("family")) r.family = j.at("family").get<std::string>();
    if (j.contains("corpus")) {
        for (const Json& c : j.at("corpus")) {
            CorpusEntry e;
            e.file = c.at("file").get<std::string>();
            e.family = c.at("family").get<std::string>();
            e.weight = c.at("weight").get<std::string>();
            e.pairs = c.at("pairs").get<int>();
            e.dim_g_c = c.at("dim_g_c").get<int>();
            e.round_trip = c.at("round_trip").get<bool>();
            e.embedding_ok = c.at("embedding_ok").get<bool>();
            r.corpus.push_back(std::move(e));
        }
    }
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

std::string Report::to_text() const {
    std::ostringstream os;
    if (model) {
        os << "model: " << model->polynomial << "\n";
        os << "weight: " << model->weight << "\n";
        os << "multitype: (" << model->multitype_m1 << ", " << model->multitype_m2 << ")\n";
        if (command == "check") os << "pluriharmonic-free: yes\n";
    }
    for (const ComponentInfo& c : components) {
        os << "component mu = " << c.weight << " (" << c.kind << "), dim " << c.dim_real
           << "\n";
        for (const std::string& b : c.basis) os << "  " << b << "\n";
    }
    if (dim_g_c) os << "dim g_c = " << *dim_g_c << "\n";
    if (w_tangent)
        os << "universal members: W " << (*w_tangent ? "ok" : "FAIL") << ", E "
           << (euler_tangent.value_or(false) ? "ok" : "FAIL") << "\n";
    if (decomposition) {
        os << "rotation: " << decomposition->rotation << "\n";
        for (std::size_t k = 0; k < decomposition->pairs.size(); ++k) {
            const PairInfo& p = decomposition->pairs[k];
            os << "pair " << (k + 1) << " (length " << p.length << ")\n";
            for (int j = 0; j < p.length; ++j) {
                os << "  U^" << (j + 1) << " = " << p.u[j];
                if (j + 1 < p.length) os << "   c_" << (j + 1) << " = " << p.c[j];
                os << "\n";
            }
            for (int j = 0; j < p.length; ++j) {
                os << "  V^" << (j + 1) << " = " << p.v[j];
                if (j + 1 < p.length) os << "   d_" << (j + 1) << " = " << p.d[j];
                os << "\n";
            }
        }
    }
    if (embedding) {
        os << "ambient dimension: " << embedding->ambient_dim << "\n";
        os << "maps into quadric: " << (embedding->maps_into ? "ok" : "FAIL") << "\n";
        os << "f-related: " << (embedding->f_related ? "ok" : "FAIL") << "\n";
        os << "quadric symmetry: " << (embedding->quadric_symmetry ? "ok" : "FAIL") << "\n";
    }
    if (verdict) {
        os << "verdict: " << verdict->tag << "\n";
        if (verdict->witness) os << "witness: " << *verdict->witness << "\n";
    }
    for (const std::string& w : warnings) os << "warning: " << w << "\n";
    if (!corpus.empty()) {
        int ok = 0;
        for (const CorpusEntry& e : corpus)
            if (e.round_trip && e.embedding_ok) ++ok;
        os << "corpus: " << corpus.size() << " models, " << ok << " verified\n";
    }
    return os.str();
}

ModelInfo describe_model(const Model& m, const std::string& source) {
    ModelInfo out;
    out.source = source;
    out.polynomial = m.poly.str();
    out.weight = m.weight.str();
    out.multitype_m1 = multitype_str(m.multitype.m1);
    out.multitype_m2 = multitype_str(m.multitype.m2);
    return out;
}

DecompositionInfo describe_decomposition(const Decomposition& d) {
    DecompositionInfo out;
    out.rotation = d.rotation.str();
    for (const ChainPair& pair : d.pairs) {
        PairInfo p;
        p.length = static_cast<int>(pair.length());
        for (const Poly& q : pair.u.polys) p.u.push_back(q.str());
        for (const Poly& q : pair.v.polys) p.v.push_back(q.str());
        for (const Gauss& g : pair.u.consts) p.c.push_back(g.str());
        for (const Gauss& g : pair.v.consts) p.d.push_back(g.str());
        for (const Rat& r : pair.u_degrees) p.u_degrees.push_back(rat_str(r));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

EmbeddingInfo describe_embedding(const QuadricEmbedding& e, bool maps_into, bool f_related,
                                 bool symmetry) {
    EmbeddingInfo out;
    out.ambient_dim = e.ambient_dim;
    for (std::size_t n : e.lengths) out.lengths.push_back(static_cast<int>(n));
    for (std::size_t j = 0; j < e.lengths.size(); ++j)
        for (std::size_t k = 1; k <= e.lengths[j]; ++k)
            out.pairing.push_back({static_cast<int>(j + 1), static_cast<int>(k),
                                   static_cast<int>(j + 1),
                                   static_cast<int>(e.lengths[j] - k + 1)});
    auto strs = [](const std::vector<Poly>& ps) {
        std::vector<std::string> v;
        for (const Poly& p : ps) v.push_back(p.str());
        return v;
    };
    auto gstrs = [](const std::vector<Gauss>& gs) {
        std::vector<std::string> v;
        for (const Gauss& g : gs) v.push_back(g.str());
        return v;
    };
    for (const auto& ps : e.zeta) out.zeta.push_back(strs(ps));
    for (const auto& ps : e.zeta_prime) out.zeta_prime.push_back(strs(ps));
    for (const auto& gs : e.z_c) out.c.push_back(gstrs(gs));
    for (const auto& gs : e.z_d) out.d.push_back(gstrs(gs));
    out.maps_into = maps_into;
    out.f_related = f_related;
    out.quadric_symmetry = symmetry;
    return out;
}

} // namespace crsym
