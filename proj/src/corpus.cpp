#include "nullkit/corpus.hpp"

#include <algorithm>

#include "nullkit/groebner.hpp"

namespace nullkit {

RingPtr affine_ring(int arity) {
    static const char* names[] = {"x", "y", "z", "w", "v", "u"};
    if (arity < 1 || arity > 6) throw error("affine_ring: arity must be in 1..6");
    std::vector<std::string> vars(names, names + arity);
    return PolyRing::make(std::move(vars));
}

RingPtr projective_ring(int coordinates) {
    std::vector<std::string> vars;
    for (int i = 0; i < coordinates; ++i) vars.push_back("T" + std::to_string(i));
    return PolyRing::make(std::move(vars));
}

std::vector<ProblemInstance> generate_corpus(const GeneratorSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    RingPtr ring = spec.homogeneous ? projective_ring(spec.arity) : affine_ring(spec.arity);

    std::vector<ProblemInstance> out;
    for (int idx = 0; idx < spec.count; ++idx) {
        int m = static_cast<int>(rng.draw(2, spec.max_generators));
        std::vector<Monomial> monomials;
        long degree = 0;
        if (spec.homogeneous) {
            degree = rng.draw(1, spec.max_degree);
            for (int g = 0; g < m; ++g) {
                // Random monomial of total degree in 1..degree, padded up to
                // `degree` with all complementary monomials.
                long d = rng.draw(1, degree);
                std::vector<int> e(spec.arity, 0);
                long left = d;
                for (int i = 0; i + 1 < spec.arity; ++i) {
                    long v = rng.draw(0, left);
                    e[i] = static_cast<int>(v);
                    left -= v;
                }
                e[spec.arity - 1] = static_cast<int>(left);
                Monomial base((std::vector<int>(e)));
                if (d == degree) {
                    monomials.push_back(std::move(base));
                } else {
                    for (const auto& pad : monomials_of_degree(spec.arity, degree - d))
                        monomials.push_back(base * pad);
                }
            }
        } else {
            for (int g = 0; g < m; ++g) {
                std::vector<int> e(spec.arity);
                for (int i = 0; i < spec.arity; ++i)
                    e[i] = static_cast<int>(rng.draw(0, spec.max_exponent));
                monomials.emplace_back(std::move(e));
            }
        }

        MonomialIdeal ideal = MonomialIdeal::make(ring, std::move(monomials));
        ProblemInstance inst;
        inst.ring = ring;
        inst.generators = ideal.to_polynomials();
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%03d", idx);
        inst.meta["name"] = spec.name_prefix + "-" + buf;
        inst.meta["seed"] = std::to_string(spec.seed);
        if (spec.homogeneous) inst.meta["degree"] = std::to_string(degree);
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace nullkit
