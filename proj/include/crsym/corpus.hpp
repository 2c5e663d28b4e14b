#ifndef CRSYM_CORPUS_HPP
#define CRSYM_CORPUS_HPP

#include <cstdint>
#include <string>

#include "crsym/chains.hpp"

namespace crsym {

/// Deterministic splittable generator (splitmix64); the corpus contract
/// is byte-identical regeneration per seed, so no library RNG is used.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n > 0.
    uint64_t below(uint64_t n) { return next() % n; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    Rng split() { return Rng(next()); }

private:
    uint64_t state_;
};

/// Nonzero Gaussian rational with small numerators and denominators.
Gauss random_nonzero_gauss(Rng& rng);

enum class PairFamily {
    Shift,      // rotation kappa * z2^t * d/dz1, staircase monomial chains
    Triangular, // rotation z1^2 * d/dz1 - z1*z2 * d/dz2, diagonal chains
};

struct GeneratedPair {
    ChainPair pair;
    VectorField rotation;
    PairFamily family;
};

/// Deterministic pseudo-random symmetric chain pair of the given length
/// whose block is homogeneous of weighted degree one for the given
/// weight; exponents are capped by degree_budget.  Throws
/// InfeasibleBudget when neither template family fits.
GeneratedPair random_chain_pair(const Weight& w, int length, const Rat& degree_budget,
                                uint64_t seed);

enum class CorpusFamily { Shift, Triangular, Mixed };

CorpusFamily corpus_family_parse(const std::string& name);
const char* corpus_family_name(CorpusFamily f);

/// One synthesized corpus model: guaranteed valid, holomorphically
/// nondegenerate, with the generating rotation attached.
struct CorpusModel {
    std::string text; // model file content
    Model model;
    VectorField rotation;
    std::string family;
    int pair_count = 0;
};

/// Deterministic per (seed, index, family); retries derived sub-seeds
/// until the synthesized model passes validation and nondegeneracy.
CorpusModel make_corpus_model(uint64_t seed, uint64_t index, CorpusFamily family);

} // namespace crsym

#endif
