#ifndef CRSYM_REPORT_HPP
#define CRSYM_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crsym/classify.hpp"
#include "crsym/embedding.hpp"
#include "crsym/solver.hpp"

namespace crsym {

/// Stable JSON report (schema_version 1).  All rationals are carried as
/// strings "p/q"; reports are deterministic for identical inputs
/// (timings are opt-in and excluded from equality).
struct ModelInfo {
    std::string source;
    std::string polynomial;
    std::string weight;
    std::string multitype_m1, multitype_m2; // "p/q" or "inf"

    bool operator==(const ModelInfo&) const = default;
};

struct ComponentInfo {
    std::string weight;
    std::string kind; // "shift" / "rigid rotation" / "generalized rotation"
    int dim_real = 0;
    std::vector<std::string> basis;

    bool operator==(const ComponentInfo&) const = default;
};

struct PairInfo {
    int length = 0;
    std::vector<std::string> u, v;
    std::vector<std::string> c, d;
    std::vector<std::string> u_degrees;

    bool operator==(const PairInfo&) const = default;
};

struct DecompositionInfo {
    std::string rotation;
    std::vector<PairInfo> pairs;

    bool operator==(const DecompositionInfo&) const = default;
};

struct EmbeddingInfo {
    int ambient_dim = 0;
    std::vector<int> lengths;
    // ((j,k), (j, N_j-k+1)) index pairs of the Hermitian pairing, 1-based
    std::vector<std::array<int, 4>> pairing;
    std::vector<std::vector<std::string>> zeta, zeta_prime;
    std::vector<std::vector<std::string>> c, d;
    bool maps_into = false;
    bool f_related = false;
    bool quadric_symmetry = false;

    bool operator==(const EmbeddingInfo&) const = default;
};

struct VerdictInfo {
    std::string tag;
    std::optional<std::string> witness;

    bool operator==(const VerdictInfo&) const = default;
};

struct CorpusEntry {
    std::string file;
    std::string family;
    std::string weight;
    int pairs = 0;
    int dim_g_c = 0;
    bool round_trip = false;
    bool embedding_ok = false;

    bool operator==(const CorpusEntry&) const = default;
};

struct Report {
    int schema_version = 1;
    std::string command;
    std::optional<ModelInfo> model;
    std::vector<ComponentInfo> components;
    std::optional<int> dim_g_c;
    std::optional<bool> w_tangent, euler_tangent;
    std::optional<DecompositionInfo> decomposition;
    std::optional<EmbeddingInfo> embedding;
    std::optional<VerdictInfo> verdict;
    std::vector<std::string> warnings;
    // corpus summary
    std::optional<uint64_t> seed;
    std::optional<std::string> family;
    std::vector<CorpusEntry> corpus;
    std::optional<double> elapsed_ms; // excluded from equality

    bool operator==(const Report& o) const;

    std::string to_json_string() const;
    static Report from_json_string(const std::string& text);

    /// Human-readable rendering for the terminal.
    std::string to_text() const;
};

ModelInfo describe_model(const Model& m, const std::string& source);
DecompositionInfo describe_decomposition(const Decomposition& d);
EmbeddingInfo describe_embedding(const QuadricEmbedding& e, bool maps_into, bool f_related,
                                 bool symmetry);

} // namespace crsym

#endif
