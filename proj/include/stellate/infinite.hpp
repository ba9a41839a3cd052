#ifndef STELLATE_INFINITE_HPP
#define STELLATE_INFINITE_HPP

// A lazy model of the monomial domain in countably many variables, with
// decidable oracle ideals: the maximal ideal M = ({x_n}), its powers, and
// the ideal A = ({x_n M^n}). The transform by S = {M^n} sends A to M but
// sends M to D, so the map is not idempotent; this module reproduces that
// failure and cross-checks every closed-form membership rule against
// finite-variable truncations.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stellate/monomial.hpp"
#include "stellate/report.hpp"
#include "stellate/sampler.hpp"
#include "stellate/star.hpp"

namespace stellate {

inline constexpr int kMaxInfIndex = 1 << 16;

// A monomial in the variables x_1, x_2, ... with finite support. The empty
// support is the unit monomial 1.
class InfMonomial {
public:
    InfMonomial() = default;

    explicit InfMonomial(std::map<int, int> support) : support_(std::move(support)) {
        for (auto it = support_.begin(); it != support_.end();) {
            if (it->first < 1 || it->first > kMaxInfIndex)
                throw std::invalid_argument("variable index out of range");
            if (it->second < 0) throw std::invalid_argument("negative exponent");
            if (it->second == 0)
                it = support_.erase(it);
            else
                ++it;
        }
    }

    static InfMonomial variable(int index, int exponent = 1) {
        return InfMonomial(std::map<int, int>{{index, exponent}});
    }

    bool is_unit() const { return support_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [idx, e] : support_) d += e;
        return d;
    }

    // Smallest variable index dividing the monomial; 0 for the unit.
    int minidx() const { return support_.empty() ? 0 : support_.begin()->first; }

    int max_index() const { return support_.empty() ? 0 : support_.rbegin()->first; }

    const std::map<int, int>& support() const { return support_; }

    InfMonomial operator*(const InfMonomial& other) const {
        std::map<int, int> s = support_;
        for (const auto& [idx, e] : other.support_) s[idx] += e;
        return InfMonomial(std::move(s));
    }

    bool divisible_by(const InfMonomial& g) const {
        for (const auto& [idx, e] : g.support_) {
            auto it = support_.find(idx);
            if (it == support_.end() || it->second < e) return false;
        }
        return true;
    }

    friend bool operator==(const InfMonomial& a, const InfMonomial& b) {
        return a.support_ == b.support_;
    }

    // Exponent vector of the first nvars variables; throws if the support
    // sticks out of the truncation.
    Exponents truncate(int nvars) const {
        Exponents m(static_cast<std::size_t>(nvars), 0);
        for (const auto& [idx, e] : support_) {
            if (idx > nvars) throw ArityMismatch("monomial support exceeds truncation");
            m[static_cast<std::size_t>(idx - 1)] = e;
        }
        return m;
    }

    std::string str() const {
        if (support_.empty()) return "1";
        std::ostringstream out;
        bool first = true;
        for (const auto& [idx, e] : support_) {
            if (!first) out << '*';
            first = false;
            out << 'x' << idx;
            if (e != 1) out << '^' << e;
        }
        return out.str();
    }

private:
    std::map<int, int> support_;
};

// The decidable oracle ideals of the infinite domain.
struct OracleIdeal {
    enum class Kind { MPower, ExampleA };
    Kind kind;
    int power = 1;  // for MPower

    static OracleIdeal m_power(int n) {
        if (n < 1) throw std::invalid_argument("power must be >= 1");
        return {Kind::MPower, n};
    }
    static OracleIdeal example_a() { return {Kind::ExampleA, 0}; }

    std::string str() const {
        return kind == Kind::MPower ? ("M^" + std::to_string(power)) : "A";
    }
};

// Closed-form membership. M^n holds the monomials of degree >= n; A holds m
// with some x_i | m and deg(m) >= i + 1, i.e. minidx(m) <= deg(m) - 1.
inline bool inf_member(const InfMonomial& m, const OracleIdeal& ideal) {
    switch (ideal.kind) {
        case OracleIdeal::Kind::MPower:
            return m.degree() >= ideal.power;
        case OracleIdeal::Kind::ExampleA:
            return !m.is_unit() && m.minidx() <= m.degree() - 1;
    }
    return false;
}

// Membership of x in target_S for S = {M^n}: does some x * M^n land inside
// the target? For M^k the power n = k always works. For A a nonunit x works
// with n >= minidx(x) - deg(x) + 1, while x = 1 is defeated by the test
// monomial x_j^n with j > n. Both rules are validated against truncations by
// truncation_crosscheck.
inline bool inf_s_member(const InfMonomial& x, const OracleIdeal& target) {
    switch (target.kind) {
        case OracleIdeal::Kind::MPower:
            return true;
        case OracleIdeal::Kind::ExampleA:
            return !x.is_unit();
    }
    return false;
}

inline InfMonomial random_inf_monomial(Rng& rng, int max_index, int max_deg, bool allow_unit) {
    int deg = rng.uniform(allow_unit ? 0 : 1, max_deg);
    std::map<int, int> s;
    for (int i = 0; i < deg; ++i) s[rng.uniform(1, max_index)] += 1;
    return InfMonomial(std::move(s));
}

namespace detail {

// All exponent vectors in nvars variables of total degree exactly deg.
inline void compositions(int nvars, int deg, Exponents& scratch, int pos,
                         std::vector<Exponents>& out) {
    if (pos == nvars - 1) {
        scratch[static_cast<std::size_t>(pos)] = deg;
        out.push_back(scratch);
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        scratch[static_cast<std::size_t>(pos)] = e;
        compositions(nvars, deg - e, scratch, pos + 1, out);
    }
}

}  // namespace detail

// The ideal M truncated to nvars variables.
inline MonomialModule truncated_m(int nvars) {
    std::vector<Exponents> gens;
    for (int j = 0; j < nvars; ++j) {
        Exponents g(static_cast<std::size_t>(nvars), 0);
        g[static_cast<std::size_t>(j)] = 1;
        gens.push_back(std::move(g));
    }
    return MonomialModule(nvars, std::move(gens));
}

// The ideal A truncated to nvars variables: generated by x_i * M^i, i <= nvars.
inline MonomialModule truncated_a(int nvars) {
    std::vector<Exponents> gens;
    for (int i = 1; i <= nvars; ++i) {
        std::vector<Exponents> degs;
        Exponents scratch(static_cast<std::size_t>(nvars), 0);
        detail::compositions(nvars, i, scratch, 0, degs);
        for (auto& v : degs) {
            v[static_cast<std::size_t>(i - 1)] += 1;
            gens.push_back(std::move(v));
        }
    }
    return MonomialModule(nvars, std::move(gens));
}

struct CounterexampleResult {
    PropertyReport report;
    std::vector<std::string> narrative;
};

// Reproduces the idempotence failure: every nonunit monomial of D lies in
// A_S while 1 does not, so A_S = M by maximality of M; then 1M <= M puts 1
// in M_S = (A_S)_S, so (A_S)_S = D strictly exceeds A_S.
inline CounterexampleResult verify_counterexample(int max_index = 12, int max_deg = 6,
                                                  int samples = 500, std::uint64_t seed = 42) {
    CounterexampleResult result;
    PropertyReport& report = result.report;
    report.suite = "counterexample[A -> A_S over S = {M^n}]";
    report.seed = seed;
    auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    const OracleIdeal a = OracleIdeal::example_a();

    // (i) every sampled nonunit monomial lies in A_S, and 1 does not
    for (int k = 0; k < samples; ++k) {
        ++report.samples;
        InfMonomial m = random_inf_monomial(rng, max_index, max_deg, false);
        if (!inf_s_member(m, a))
            report.record("(i) nonunit in A_S", m.str(), "reported outside A_S");
    }
    if (inf_s_member(InfMonomial(), a))
        report.record("(i) unit outside A_S", "1", "reported inside A_S");
    // spot witnesses from the derivation chain: x_n M^n <= A for sampled n
    for (int n = 1; n <= max_index; ++n) {
        InfMonomial xn = InfMonomial::variable(n);
        for (int k = 0; k < 8; ++k) {
            InfMonomial u = random_inf_monomial(rng, max_index, 1, false);
            InfMonomial prod = xn;
            for (int t = 1; t < n; ++t) prod = prod * random_inf_monomial(rng, max_index, 1, false);
            prod = prod * u;
            if (!inf_member(prod, a))
                report.record("(i) x_n M^n <= A", prod.str(), "x_n=" + xn.str());
        }
    }

    // (ii) 1 in M_S, hence (A_S)_S = D
    if (!inf_s_member(InfMonomial(), OracleIdeal::m_power(1)))
        report.record("(ii) 1 in M_S", "1", "reported outside M_S");

    // (iv) GV sanity on truncations: (M^n)_v = D with at least two variables
    for (int k = 2; k <= 6; ++k) {
        MonomialModule m = truncated_m(k);
        for (int n = 1; n <= 3; ++n) {
            if (!(v_close(pow(m, n)) == MonomialModule::unit(k)))
                report.record("(iv) (M^n)_v = D", "k=" + std::to_string(k) + ", n=" + std::to_string(n),
                              to_string(v_close(pow(m, n))));
        }
    }

    // (v) no finitely generated subideal of A captures 1 in its transform:
    // a finite generator list lives in finitely many variables, and x_j^n
    // with j beyond all of them defeats M^n <= B for every n
    for (int k = 0; k < 20; ++k) {
        std::vector<InfMonomial> gens;
        int count = rng.uniform(1, 5);
        int top = 0;
        for (int t = 0; t < count; ++t) {
            int i = rng.uniform(1, max_index);
            InfMonomial g = InfMonomial::variable(i) * random_inf_monomial(rng, max_index, 0, true);
            for (int r = 0; r < i; ++r) g = g * random_inf_monomial(rng, max_index, 1, false);
            gens.push_back(g);  // g = x_i * (a degree-i monomial), a generator of A
            top = std::max(top, g.max_index());
        }
        for (int n = 1; n <= 8; ++n) {
            InfMonomial probe = InfMonomial::variable(top + 1, n);
            bool inside = false;
            for (const auto& g : gens) inside = inside || probe.divisible_by(g);
            if (inside)
                report.record("(v) finite subideal traps 1", probe.str(), gens[0].str());
        }
    }

    result.narrative = {
        "D = K[x_1, x_2, ...], M = ({x_n}) maximal, S = {M^n : n >= 1}.",
        "Each M^n has (M^n)_v = D, so S is a GV-system and D_S = D.",
        "A = ({x_n M^n}): x_n M^n <= A puts every x_n in A_S, so M <= A_S.",
        "1 M^n = M^n is never inside A, so 1 is not in A_S.",
        "M <= A_S < D with M maximal forces A_S = M.",
        "1 M <= M gives 1 in M_S, so (A_S)_S = M_S = D_S = D.",
        report.pass ? "Verified: A_S = M < D = (A_S)_S; the map A -> A_S is not idempotent, "
                      "hence not a star-operation. Its members M^n are not finitely generated, "
                      "so the finitely-generated GV criterion does not apply."
                    : "Verification FAILED; see violations.",
    };
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

// Anti-hallucination oracle for the closed forms: point membership queries
// are truncation-stable, so the infinite-domain rules must agree exactly with
// brute-force membership in the truncated finitely generated ideals. The
// transform itself is NOT truncation-stable (any finite truncation has
// M_k^{k+1} <= A_k, hence 1 in (A_k)_S); that divergence is asserted as
// expected, not as equality.
inline PropertyReport truncation_crosscheck(int max_vars, int max_deg, int n_samples,
                                            std::uint64_t seed) {
    PropertyReport report;
    report.suite = "truncation-crosscheck";
    report.seed = seed;
    auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    for (int k = 0; k < n_samples; ++k) {
        ++report.samples;
        int nvars = rng.uniform(2, max_vars);
        MonomialModule ak = truncated_a(nvars);
        InfMonomial m = random_inf_monomial(rng, nvars, max_deg, true);
        InfMonomial u = random_inf_monomial(rng, nvars, std::max(1, max_deg / 2), true);
        InfMonomial q = m * u;
        Exponents vec = q.truncate(nvars);
        bool oracle_a = inf_member(q, OracleIdeal::example_a());
        bool brute_a = ak.contains(vec);
        if (oracle_a != brute_a)
            report.record("A membership", q.str() + " in K[x1..x" + std::to_string(nvars) + "]",
                          "oracle=" + std::to_string(oracle_a) + ", truncated=" + std::to_string(brute_a));
        int n = rng.uniform(1, max_deg);
        bool oracle_m = inf_member(q, OracleIdeal::m_power(n));
        bool brute_m = pow(truncated_m(nvars), n).contains(vec);
        if (oracle_m != brute_m)
            report.record("M^n membership", q.str() + ", n=" + std::to_string(n),
                          "oracle=" + std::to_string(oracle_m) + ", truncated=" + std::to_string(brute_m));
    }
    // expected divergence of the transform under truncation
    {
        MonomialModule m3 = truncated_m(3);
        if (!subset(pow(m3, 4), truncated_a(3)))
            report.record("expected-divergence", "M_3^4 <= A_3",
                          "containment failed; the truncated transform would not trap 1");
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace stellate

#endif  // STELLATE_INFINITE_HPP
