#ifndef STELLATE_SUITES_HPP
#define STELLATE_SUITES_HPP

// Property suites: the star-operation axioms, the laws of the S-transform,
// the GV biconditional for finitely generated sets, the idempotence /
// localizing-system cross-validation, the saturation criterion, and the
// reconstruction of a star-operation from its trivial ideals.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "stellate/format.hpp"
#include "stellate/locstar.hpp"
#include "stellate/monomial.hpp"
#include "stellate/report.hpp"
#include "stellate/sampler.hpp"
#include "stellate/star.hpp"

namespace stellate {

struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteConfig {
    int nvars = 2;
    int max_deg = 4;
    int max_gens = 3;
    int samples = 200;
    std::uint64_t seed = 1;
    int max_iter = kDefaultMaxIter;
};

namespace detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string describe(const MonomialModule& a) { return to_string(a); }

inline std::string describe(const MultiplicativeSet& s) {
    std::string out = "closure{";
    for (std::size_t i = 0; i < s.gens().size(); ++i)
        out += (i ? ", " : "") + to_string(s.gens()[i]);
    return out + "}";
}

}  // namespace detail

// The defining clauses of a star-operation, sampled: principal ideals are
// fixed, the map commutes with principal scaling, is extensive, monotone,
// idempotent, and sits below the divisorial closure. A NonStabilizing
// evaluation is recorded as a well-definedness violation.
inline PropertyReport check_star_axioms(const StarOperator& star, const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "star-axioms[" + star.name + "]";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);
    for (int k = 0; k < cfg.samples; ++k) {
        ++report.samples;
        Exponents a = random_laurent(rng, cfg.nvars, cfg.max_deg);
        MonomialModule A = random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
        MonomialModule B = add(A, random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2));
        std::string inputs = "a=" + to_string(a) + ", A=" + to_string(A) + ", B=" + to_string(B);
        try {
            MonomialModule pa = MonomialModule::principal(a);
            if (!(star(pa) == pa))
                report.record("principal-fixed", inputs, to_string(star(pa)));
            MonomialModule sA = star(A);
            if (!(star(shift(A, a)) == shift(sA, a)))
                report.record("principal-scaling", inputs, to_string(star(shift(A, a))));
            if (!subset(A, sA)) report.record("extension", inputs, to_string(sA));
            if (!subset(sA, star(B))) report.record("monotone", inputs, to_string(star(B)));
            if (!(star(sA) == sA)) report.record("idempotent", inputs, to_string(star(sA)));
            if (!subset(sA, v_close(A))) report.record("bounded-by-v", inputs, to_string(sA));
        } catch (const NonStabilizing& e) {
            report.record("well-defined", inputs, e.what());
        }
        if (!report.pass && report.violations.size() >= 8) break;  // enough witnesses
    }
    report.elapsed_ms = timer.ms();
    return report;
}

// The transform laws: monotone, extensive, commutes with principal scaling,
// distributes exactly over finite intersections, products of trivial ideals
// are trivial, and the three characterisations of D_S = D agree.
inline PropertyReport check_transform_laws(const MultiplicativeSet& s, const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "transform-laws[" + detail::describe(s) + "]";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);
    const MonomialModule d = MonomialModule::unit(cfg.nvars);
    for (int k = 0; k < cfg.samples; ++k) {
        ++report.samples;
        Exponents a = random_laurent(rng, cfg.nvars, cfg.max_deg);
        MonomialModule A = random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
        MonomialModule B = random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
        MonomialModule C = random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
        std::string inputs = "a=" + to_string(a) + ", A=" + to_string(A) + ", B=" + to_string(B);
        try {
            MonomialModule As = s_transform(A, s, cfg.max_iter);
            MonomialModule Bs = s_transform(B, s, cfg.max_iter);
            // (1) monotone, via A <= A + B
            MonomialModule U = add(A, B);
            if (!subset(As, s_transform(U, s, cfg.max_iter)))
                report.record("(1) monotone", inputs, to_string(As));
            // (2) extensive
            if (!subset(A, As)) report.record("(2) extensive", inputs, to_string(As));
            // (3) principal scaling
            if (!(s_transform(shift(A, a), s, cfg.max_iter) == shift(As, a)))
                report.record("(3) principal-scaling", inputs,
                              to_string(s_transform(shift(A, a), s, cfg.max_iter)));
            // (4) exact distribution over finite intersections
            MonomialModule lhs = s_transform(intersect(A, B), s, cfg.max_iter);
            if (!(lhs == intersect(As, Bs)))
                report.record("(4) intersection", inputs, to_string(lhs));
            MonomialModule lhs3 = s_transform(intersect(intersect(A, B), C), s, cfg.max_iter);
            if (!(lhs3 == intersect(intersect(As, Bs), s_transform(C, s, cfg.max_iter))))
                report.record("(4) intersection(3-fold)", inputs, to_string(lhs3));
            // (5) trivial transforms multiply: build I, J in the saturation
            int n = rng.uniform(1, 2);
            MonomialModule I = add(pow(s.product(), n),
                                   random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens));
            MonomialModule J = add(pow(s.product(), rng.uniform(1, 2)),
                                   random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens));
            MonomialModule Ds = s_transform(d, s, cfg.max_iter);
            if (s_transform(I, s, cfg.max_iter) == Ds && s_transform(J, s, cfg.max_iter) == Ds) {
                if (!(s_transform(mul(I, J), s, cfg.max_iter) == Ds))
                    report.record("(5) product-trivial",
                                  "I=" + to_string(I) + ", J=" + to_string(J),
                                  to_string(s_transform(mul(I, J), s, cfg.max_iter)));
            } else {
                report.record("(5) saturation-member-not-trivial", "I=" + to_string(I),
                              to_string(s_transform(I, s, cfg.max_iter)));
            }
        } catch (const NonStabilizing& e) {
            report.record("well-defined", inputs, e.what());
        }
        if (!report.pass && report.violations.size() >= 8) break;
    }
    // (6) the equivalences: S a GV-system <=> D_S = D <=> principals fixed.
    {
        bool gv = is_gv_system(s);
        bool d_fixed;
        bool principal_fixed;
        std::string witness;
        try {
            d_fixed = s_transform(d, s, cfg.max_iter) == d;
            Rng prng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
            principal_fixed = true;
            for (int k = 0; k < 20; ++k) {
                Exponents a = random_laurent(prng, cfg.nvars, cfg.max_deg);
                MonomialModule pa = MonomialModule::principal(a);
                MonomialModule pas = s_transform(pa, s, cfg.max_iter);
                if (!(pas == pa)) {
                    principal_fixed = false;
                    witness = to_string(pa) + "_S = " + to_string(pas);
                    break;
                }
            }
        } catch (const NonStabilizing& e) {
            d_fixed = false;
            principal_fixed = false;
            witness = e.what();
        }
        if (gv != d_fixed || gv != principal_fixed)
            report.record("(6) equivalences",
                          "gv-system=" + std::to_string(gv) + ", D_S=D:" + std::to_string(d_fixed) +
                              ", principals-fixed:" + std::to_string(principal_fixed),
                          witness);
    }
    report.elapsed_ms = timer.ms();
    return report;
}

// Biconditional for finitely generated multiplicative sets: A -> A_S passes
// the axiom suite exactly when the set is a GV-system; when it is, the
// finite-character witness B = xI is extracted and re-checked per sample.
inline PropertyReport check_gv_criterion(const MultiplicativeSet& s, const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "gv-criterion[" + detail::describe(s) + "]";
    report.seed = cfg.seed;
    bool gv = is_gv_system(s);
    PropertyReport axioms = check_star_axioms(StarOperator::transform(s, cfg.max_iter), cfg);
    report.samples = axioms.samples;
    if (gv != axioms.pass) {
        std::string witness = axioms.pass ? "axiom suite passed for a non-GV system"
                                          : axioms.violations.front().clause + " on " +
                                                axioms.violations.front().inputs;
        report.record("verdict-biconditional", detail::describe(s), witness);
    }
    if (!gv && axioms.violations.empty())
        report.record("missing-witness", detail::describe(s), "no concrete violation recorded");
    if (gv) {
        Rng rng(cfg.seed + 1);
        int checks = std::min(cfg.samples, 50);
        for (int k = 0; k < checks; ++k) {
            MonomialModule A =
                random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
            try {
                TransformResult t = s_transform_chain(A, s, cfg.max_iter);
                for (const auto& x : t.value.gens()) {
                    // find a power of P with x * P^n <= A, then B = xP^n
                    bool found = false;
                    for (int n = 0; n <= t.steps + 1 && !found; ++n) {
                        MonomialModule B = shift(pow(s.product(), n), x);
                        if (subset(B, A)) {
                            found = true;
                            if (!s_transform(B, s, cfg.max_iter).contains(x))
                                report.record("finite-character-witness",
                                              "A=" + to_string(A) + ", x=" + to_string(x),
                                              "x not in B_S for B=" + to_string(B));
                        }
                    }
                    if (!found)
                        report.record("finite-character-witness",
                                      "A=" + to_string(A) + ", x=" + to_string(x),
                                      "no witnessing power of P found");
                }
            } catch (const NonStabilizing& e) {
                report.record("well-defined", to_string(A), e.what());
            }
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

// Idempotence of the transform cross-validated against sampled localizing-
// system clauses for the saturation. Both verdicts must agree; the
// well-definedness probe D_S is part of the localizing side, since the
// saturation membership test is total only when the transform is.
inline PropertyReport check_idempotence_localizing(const MultiplicativeSet& s,
                                                   const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "idempotence-localizing[" + detail::describe(s) + "]";
    report.seed = cfg.seed;
    const MonomialModule d = MonomialModule::unit(cfg.nvars);
    bool idem_ok = true;
    bool loc_ok = true;
    std::string idem_witness, loc_witness;
    Rng rng(cfg.seed);
    // probe: the transform of D itself must be a fractional ideal
    try {
        s_transform(d, s, cfg.max_iter);
    } catch (const NonStabilizing& e) {
        idem_ok = false;
        loc_ok = false;
        idem_witness = loc_witness = e.what();
    }
    if (idem_ok) {
        for (int k = 0; k < cfg.samples; ++k) {
            ++report.samples;
            MonomialModule A =
                random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
            try {
                MonomialModule As = s_transform(A, s, cfg.max_iter);
                if (!(s_transform(As, s, cfg.max_iter) == As)) {
                    idem_ok = false;
                    idem_witness = "A=" + to_string(A) + ", A_S=" + to_string(As);
                }
            } catch (const NonStabilizing& e) {
                idem_ok = false;
                idem_witness = "A=" + to_string(A) + ": " + std::string(e.what());
            }
            try {
                // overideal clause: I in the saturation and I <= J <= D give J in it
                MonomialModule I = add(pow(s.product(), rng.uniform(1, 2)),
                                       random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens));
                MonomialModule J = add(I, random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens));
                if (in_saturation(I, s, cfg.max_iter) && !in_saturation(J, s, cfg.max_iter)) {
                    loc_ok = false;
                    loc_witness = "overideal: I=" + to_string(I) + ", J=" + to_string(J);
                }
                // colon clause: (J:i) in the saturation for each generator i of I
                MonomialModule I2 = add(pow(s.product(), rng.uniform(1, 2)),
                                        random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens));
                MonomialModule J2 = rng.coin()
                                        ? random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens)
                                        : add(pow(s.product(), rng.uniform(1, 2)),
                                              random_module(rng, cfg.nvars, cfg.max_deg,
                                                            cfg.max_gens));
                bool all_colon = true;
                for (const auto& i : I2.gens()) {
                    MonomialModule q = colon_integral(J2, MonomialModule::principal(i));
                    if (!in_saturation(q, s, cfg.max_iter)) { all_colon = false; break; }
                }
                if (all_colon && !in_saturation(J2, s, cfg.max_iter)) {
                    loc_ok = false;
                    loc_witness = "colon: I=" + to_string(I2) + ", J=" + to_string(J2);
                }
            } catch (const NonStabilizing& e) {
                loc_ok = false;
                loc_witness = e.what();
            }
            if (!idem_ok && !loc_ok) break;
        }
    }
    if (!idem_ok) report.record("idempotence", detail::describe(s), idem_witness);
    if (!loc_ok) report.record("localizing", detail::describe(s), loc_witness);
    if (idem_ok != loc_ok)
        report.record("verdict-agreement", detail::describe(s),
                      "idempotence=" + std::to_string(idem_ok) +
                          ", localizing=" + std::to_string(loc_ok));
    report.elapsed_ms = timer.ms();
    return report;
}

// The three faces of the saturation criterion: (a) the axiom suite for the
// transform, (b) the GV property of the set and of sampled saturation
// members, (c) the localizing cross-validation. The theorem makes them stand
// or fall together.
struct TriVerdict {
    bool axioms = false;
    bool gv = false;
    bool localizing = false;
    std::string axioms_witness, gv_witness, localizing_witness;
    bool agree() const { return axioms == gv && gv == localizing; }
};

inline TriVerdict saturation_verdicts(const MultiplicativeSet& s, const SuiteConfig& cfg) {
    TriVerdict v;
    PropertyReport axioms = check_star_axioms(StarOperator::transform(s, cfg.max_iter), cfg);
    v.axioms = axioms.pass;
    if (!axioms.pass)
        v.axioms_witness = axioms.violations.front().clause + " on " +
                           axioms.violations.front().inputs + " -> " +
                           axioms.violations.front().witness;

    v.gv = is_gv_system(s);
    if (!v.gv) {
        for (const auto& g : s.gens())
            if (!is_gv(g)) { v.gv_witness = to_string(g) + "_v = " + to_string(v_close(g)); break; }
    } else {
        Rng rng(cfg.seed + 2);
        for (int k = 0; k < std::min(cfg.samples, 50); ++k) {
            MonomialModule I = add(pow(s.product(), rng.uniform(1, 2)),
                                   random_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens));
            if (!is_gv(I)) {
                v.gv = false;
                v.gv_witness = "saturation member " + to_string(I) + " is not GV";
                break;
            }
        }
    }

    PropertyReport loc = check_idempotence_localizing(s, cfg);
    v.localizing = loc.pass;
    if (!loc.pass)
        v.localizing_witness = loc.violations.front().clause + ": " + loc.violations.front().witness;
    return v;
}

inline PropertyReport check_saturation_criterion(const MultiplicativeSet& s,
                                                 const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "saturation-criterion[" + detail::describe(s) + "]";
    report.seed = cfg.seed;
    report.samples = cfg.samples;
    TriVerdict v = saturation_verdicts(s, cfg);
    if (!v.agree())
        report.record("verdict-agreement", detail::describe(s),
                      "axioms=" + std::to_string(v.axioms) + ", gv=" + std::to_string(v.gv) +
                          ", localizing=" + std::to_string(v.localizing));
    if (!v.axioms && v.axioms_witness.empty())
        report.record("missing-witness", "(a)", "no axiom violation recorded");
    report.elapsed_ms = timer.ms();
    return report;
}

// Constructive witness that x in A^* lies in the transform by the trivial
// ideals of *: J = (A:(x)) must close to D and satisfy xJ <= A.
struct InducedWitness {
    MonomialModule ideal;
    bool verdict;
};

inline InducedWitness induced_witness(const StarOperator& star, const MonomialModule& a,
                                      const Exponents& x) {
    if (!star(a).contains(x))
        throw PreconditionFailed("witness construction requires x in star(A)");
    MonomialModule px = MonomialModule::principal(x);
    MonomialModule j = colon_integral(a, px);
    const MonomialModule d = MonomialModule::unit(a.nvars());
    bool verdict = (star(j) == d) && subset(mul(px, j), a);
    return {j, verdict};
}

// Samples the five hypotheses under which a closure map is recovered from its
// trivial ideals, then verifies A^* = A_{S*} two-sided: every generator of
// A^* yields a witness ideal, and every xI <= A with I^* = D puts x in A^*.
inline PropertyReport check_induced_transform(const StarOperator& star, const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "induced-transform[" + star.name + "]";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);
    const MonomialModule d = MonomialModule::unit(cfg.nvars);
    try {
        if (!(star(d) == d)) report.record("(5) unit-fixed", "D", to_string(star(d)));
    } catch (const NonStabilizing& e) {
        report.record("well-defined", "D", e.what());
        report.elapsed_ms = timer.ms();
        return report;
    }
    std::vector<MonomialModule> trivial;  // sampled ideals with star(I) = D
    trivial.push_back(d);
    for (int k = 0; k < cfg.samples; ++k) {
        ++report.samples;
        Exponents a = random_laurent(rng, cfg.nvars, cfg.max_deg);
        MonomialModule A = random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
        MonomialModule B = random_fractional_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens, 2);
        std::string inputs = "a=" + to_string(a) + ", A=" + to_string(A) + ", B=" + to_string(B);
        try {
            MonomialModule sA = star(A);
            MonomialModule sB = star(B);
            // (1) monotone
            if (!subset(sA, star(add(A, B)))) report.record("(1) monotone", inputs, to_string(sA));
            // (2) principal scaling
            if (!(star(shift(A, a)) == shift(sA, a)))
                report.record("(2) principal-scaling", inputs, to_string(star(shift(A, a))));
            // (3) distributes over intersections
            if (!(star(intersect(A, B)) == intersect(sA, sB)))
                report.record("(3) intersection", inputs, to_string(star(intersect(A, B))));
            // (4) product of trivial ideals is trivial
            MonomialModule cand = random_gv_module(rng, cfg.nvars, cfg.max_deg, cfg.max_gens);
            if (star(cand) == d) trivial.push_back(cand);
            if (trivial.size() >= 2) {
                const MonomialModule& I = trivial[rng.raw() % trivial.size()];
                const MonomialModule& J = trivial[rng.raw() % trivial.size()];
                if (!(star(mul(I, J)) == d))
                    report.record("(4) product-trivial", "I=" + to_string(I) + ", J=" + to_string(J),
                                  to_string(star(mul(I, J))));
            }
            // conclusion, forward: each generator of A^* has a witness ideal
            for (const auto& x : sA.gens()) {
                InducedWitness w = induced_witness(star, A, x);
                if (!w.verdict)
                    report.record("reconstruction(<=)", "A=" + to_string(A) + ", x=" + to_string(x),
                                  "J=" + to_string(w.ideal));
            }
            // conclusion, backward: xI <= A with star(I) = D forces x into A^*
            const MonomialModule& I = trivial[rng.raw() % trivial.size()];
            MonomialModule q = colon(A, I);
            const Exponents& x = q.gens()[rng.raw() % q.gens().size()];
            if (!sA.contains(x))
                report.record("reconstruction(>=)",
                              "A=" + to_string(A) + ", I=" + to_string(I) + ", x=" + to_string(x),
                              to_string(sA));
        } catch (const NonStabilizing& e) {
            report.record("well-defined", inputs, e.what());
        }
        if (!report.pass && report.violations.size() >= 8) break;
    }
    report.elapsed_ms = timer.ms();
    return report;
}

// Localization-induced stars: the triviality bridge (A^* = D iff A is not
// inside any prime of the family), fixed primes, finite-character witnesses,
// and refinement monotonicity.
inline PropertyReport check_localization_star(const PrimeFamily& f, const SuiteConfig& cfg) {
    detail::Timer timer;
    PropertyReport report;
    report.suite = "localization-star[" + f.to_dsl() + "]";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);
    // fixed points: every prime of the family is closed
    for (const auto& sigma : f.sigmas) {
        MonomialModule p = f.prime(sigma);
        if (!(loc_star(p, f) == p))
            report.record("prime-fixed", to_string(p), to_string(loc_star(p, f)));
    }
    for (int k = 0; k < cfg.samples; ++k) {
        ++report.samples;
        MonomialModule A = random_module(rng, f.nvars, cfg.max_deg, cfg.max_gens);
        MonomialModule closed = loc_star(A, f);
        // bridge: closed = D iff for every sigma some generator avoids P_sigma
        bool avoid_all = true;
        for (const auto& sigma : f.sigmas) {
            bool avoids = false;
            for (const auto& g : A.gens()) {
                bool zero_on_sigma = true;
                for (int j : sigma) zero_on_sigma = zero_on_sigma && g[static_cast<std::size_t>(j)] == 0;
                if (zero_on_sigma) { avoids = true; break; }
            }
            if (!avoids) { avoid_all = false; break; }
        }
        if (closed.is_unit() != avoid_all)
            report.record("triviality-bridge", "A=" + to_string(A),
                          "A^* = " + to_string(closed) + ", avoids-all-primes=" +
                              std::to_string(avoid_all));
        // finite-character witness: each generator of the closure is witnessed
        // by one generator of A per prime
        for (const auto& m : closed.gens()) {
            std::vector<Exponents> picks;
            for (const auto& sigma : f.sigmas) {
                for (const auto& g : A.gens()) {
                    bool le = true;
                    for (int j : sigma) le = le && g[static_cast<std::size_t>(j)] <= m[static_cast<std::size_t>(j)];
                    if (le) { picks.push_back(g); break; }
                }
            }
            MonomialModule B(f.nvars, picks);
            if (!loc_star(B, f).contains(m))
                report.record("finite-character-witness",
                              "A=" + to_string(A) + ", m=" + to_string(m), "B=" + to_string(B));
        }
        // refinement never enlarges the closure
        std::set<int> extra;
        extra.insert(rng.uniform(0, f.nvars - 1));
        if (rng.coin() && f.nvars > 1) extra.insert(rng.uniform(0, f.nvars - 1));
        PrimeFamily refined(f.nvars, [&] {
            auto sig = f.sigmas;
            sig.push_back(extra);
            return sig;
        }());
        if (!subset(loc_star(A, refined), closed))
            report.record("refinement-monotone", "A=" + to_string(A) + ", extra-prime",
                          to_string(loc_star(A, refined)));
        if (!report.pass && report.violations.size() >= 8) break;
    }
    report.elapsed_ms = timer.ms();
    return report;
}

}  // namespace stellate

#endif  // STELLATE_SUITES_HPP
