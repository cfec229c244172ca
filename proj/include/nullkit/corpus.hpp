// corpus.hpp: seeded random instance generation.
//
// All draws go through mt19937_64 with modulo reduction, so a (seed, spec)
// pair fully determines the corpus on every platform.
#ifndef NULLKIT_CORPUS_HPP
#define NULLKIT_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nullkit/monomial_ideal.hpp"

namespace nullkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at corpus scale
    // and keeps the draw scheme trivially reproducible.
    long draw(long lo, long hi) {
        if (hi < lo) throw error("rng: empty range");
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

struct GeneratorSpec {
    int arity = 2;          // <= 4
    int max_generators = 6; // <= 6
    int max_exponent = 6;   // <= 6
    bool homogeneous = false;
    int max_degree = 4;     // target degree bound for homogeneous instances
    int count = 1;
    std::uint64_t seed = 0;
    std::string name_prefix = "gen";

    void validate() const {
        if (arity < 1 || arity > 4) throw error("generator spec: arity must be in 1..4");
        if (max_generators < 1 || max_generators > 6)
            throw error("generator spec: generator count must be in 1..6");
        if (max_exponent < 1 || max_exponent > 6)
            throw error("generator spec: max exponent must be in 1..6");
        if (count < 0) throw error("generator spec: count must be >= 0");
    }
};

// Deterministic in (seed, spec). Monomial sets are minimalized; degenerate
// outcomes (principal ideals, the unit ideal) are kept. Homogeneous instances
// have every generator padded up to one common total degree.
std::vector<ProblemInstance> generate_corpus(const GeneratorSpec& spec);

// Standard ring names x, y, z, w / T0..Tn.
RingPtr affine_ring(int arity);
RingPtr projective_ring(int coordinates);

} // namespace nullkit

#endif
