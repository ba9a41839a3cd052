#ifndef STELLATE_SAMPLER_HPP
#define STELLATE_SAMPLER_HPP

// Deterministic samplers for the property suites. All randomness flows
// through mt19937_64 with explicit seeds; no std distributions, so the
// seed-to-sample mapping is identical across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "stellate/monomial.hpp"

namespace stellate {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool coin() { return (engine_() & 1u) != 0; }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Random integral module with coordinates in [0, max_deg], at most max_gens
// generators before normalization.
inline MonomialModule random_module(Rng& rng, int nvars, int max_deg, int max_gens) {
    int count = rng.uniform(1, max_gens);
    std::vector<Exponents> gens;
    for (int i = 0; i < count; ++i) {
        Exponents g(static_cast<std::size_t>(nvars));
        for (int j = 0; j < nvars; ++j) g[static_cast<std::size_t>(j)] = rng.uniform(0, max_deg);
        gens.push_back(std::move(g));
    }
    return MonomialModule(nvars, std::move(gens));
}

// Seed-addressed variant; identical seeds produce identical modules.
inline MonomialModule random_module(int nvars, int max_deg, int max_gens, std::uint64_t seed) {
    Rng rng(seed);
    return random_module(rng, nvars, max_deg, max_gens);
}

// Random fractional module: coordinates in [-shift, max_deg].
inline MonomialModule random_fractional_module(Rng& rng, int nvars, int max_deg, int max_gens,
                                               int shift) {
    int count = rng.uniform(1, max_gens);
    std::vector<Exponents> gens;
    for (int i = 0; i < count; ++i) {
        Exponents g(static_cast<std::size_t>(nvars));
        for (int j = 0; j < nvars; ++j) g[static_cast<std::size_t>(j)] = rng.uniform(-shift, max_deg);
        gens.push_back(std::move(g));
    }
    return MonomialModule(nvars, std::move(gens));
}

// Random Laurent monomial (a nonzero element of K up to scalar).
inline Exponents random_laurent(Rng& rng, int nvars, int max_deg) {
    Exponents m(static_cast<std::size_t>(nvars));
    for (int j = 0; j < nvars; ++j) m[static_cast<std::size_t>(j)] = rng.uniform(-max_deg, max_deg);
    return m;
}

// Random GV ideal: any integral module translated so the generator meet is 0,
// which is exactly the condition I^{-1} = D on this backend.
inline MonomialModule random_gv_module(Rng& rng, int nvars, int max_deg, int max_gens) {
    MonomialModule a = random_module(rng, nvars, max_deg, max_gens);
    return shift(a, negate(a.gens_meet()));
}

// Random integral module whose generator meet is nonzero, i.e. non-GV.
inline MonomialModule random_non_gv_module(Rng& rng, int nvars, int max_deg, int max_gens) {
    MonomialModule a = random_module(rng, nvars, max_deg, max_gens);
    Exponents m = a.gens_meet();
    bool zero = true;
    for (int e : m) zero = zero && (e == 0);
    if (zero) {
        Exponents bump(static_cast<std::size_t>(nvars), 0);
        bump[static_cast<std::size_t>(rng.uniform(0, nvars - 1))] = 1;
        a = shift(a, bump);
    }
    return a;
}

}  // namespace stellate

#endif  // STELLATE_SAMPLER_HPP
