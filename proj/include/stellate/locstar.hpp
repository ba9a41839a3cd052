#ifndef STELLATE_LOCSTAR_HPP
#define STELLATE_LOCSTAR_HPP

// Star-operations induced by localizing at a covering family of monomial
// primes, in the graded model where D equals the intersection of the
// localizations. A prime is presented as the set of variable indices that
// generate it.

#include <set>
#include <string>
#include <vector>

#include "stellate/monomial.hpp"
#include "stellate/star.hpp"

namespace stellate {

struct BadSigma : std::invalid_argument {
    explicit BadSigma(const std::string& what) : std::invalid_argument(what) {}
};

struct NonCovering : std::invalid_argument {
    explicit NonCovering(const std::string& what) : std::invalid_argument(what) {}
};

// A family of monomial primes P_sigma = ({x_j : j in sigma}), sigma ranging
// over the listed 0-based variable subsets. The family must cover every
// variable, which in the graded model is exactly D = intersection of the
// localizations.
struct PrimeFamily {
    int nvars;
    std::vector<std::set<int>> sigmas;

    PrimeFamily(int n, std::vector<std::set<int>> s) : nvars(n), sigmas(std::move(s)) {
        std::set<int> covered;
        for (const auto& sigma : sigmas) {
            if (sigma.empty()) throw BadSigma("empty variable subset");
            for (int j : sigma) {
                if (j < 0 || j >= nvars) throw BadSigma("variable index out of range");
                covered.insert(j);
            }
        }
        if (static_cast<int>(covered.size()) != nvars)
            throw NonCovering("prime family does not cover every variable");
    }

    // The prime P_sigma as a module.
    MonomialModule prime(const std::set<int>& sigma) const {
        std::vector<Exponents> gens;
        for (int j : sigma) {
            Exponents g(static_cast<std::size_t>(nvars), 0);
            g[static_cast<std::size_t>(j)] = 1;
            gens.push_back(std::move(g));
        }
        return MonomialModule(nvars, std::move(gens));
    }

    std::string to_dsl() const {
        std::string out = "{";
        bool first_sigma = true;
        for (const auto& sigma : sigmas) {
            if (!first_sigma) out += ", ";
            first_sigma = false;
            out += "{";
            bool first = true;
            for (int j : sigma) {
                if (!first) out += ", ";
                first = false;
                out += "x" + std::to_string(j + 1);
            }
            out += "}";
        }
        return out + "}";
    }
};

// Membership in A * D_{P_sigma}: only the coordinates inside sigma are
// constrained, the rest are invertible in the localization.
inline bool loc_member(const Exponents& m, const MonomialModule& a, const std::set<int>& sigma) {
    if (static_cast<int>(m.size()) != a.nvars())
        throw ArityMismatch("monomial length does not match variable count");
    if (sigma.empty()) throw BadSigma("empty variable subset");
    for (int j : sigma)
        if (j < 0 || j >= a.nvars()) throw BadSigma("variable index out of range");
    for (const auto& g : a.gens()) {
        bool ok = true;
        for (int j : sigma)
            if (g[static_cast<std::size_t>(j)] > m[static_cast<std::size_t>(j)]) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

// A -> intersection over sigma of A * D_{P_sigma}. Minimal members take each
// coordinate from some generator of A, so enumerating the candidate grid of
// generator coordinates and minimalizing is exact.
inline MonomialModule loc_star(const MonomialModule& a, const PrimeFamily& f) {
    if (a.nvars() != f.nvars)
        throw ArityMismatch("module and prime family live in different ambient rings");
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(a.nvars()));
    for (int j = 0; j < a.nvars(); ++j) {
        std::set<int> vals;
        for (const auto& g : a.gens()) vals.insert(g[static_cast<std::size_t>(j)]);
        candidates[static_cast<std::size_t>(j)].assign(vals.begin(), vals.end());
    }
    std::vector<Exponents> found;
    Exponents m(static_cast<std::size_t>(a.nvars()));
    std::vector<std::size_t> idx(static_cast<std::size_t>(a.nvars()), 0);
    while (true) {
        for (int j = 0; j < a.nvars(); ++j)
            m[static_cast<std::size_t>(j)] = candidates[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
        bool in_all = true;
        for (const auto& sigma : f.sigmas)
            if (!loc_member(m, a, sigma)) { in_all = false; break; }
        if (in_all) found.push_back(m);
        int j = 0;
        for (; j < a.nvars(); ++j) {
            auto& i = idx[static_cast<std::size_t>(j)];
            if (++i < candidates[static_cast<std::size_t>(j)].size()) break;
            i = 0;
        }
        if (j == a.nvars()) break;
    }
    return MonomialModule(a.nvars(), std::move(found));
}

inline StarOperator localization_star(PrimeFamily f) {
    std::string name = "locstar(" + f.to_dsl() + ")";
    return {std::move(name),
            [f = std::move(f)](const MonomialModule& a) { return loc_star(a, f); }};
}

// Verdict for the colon-product bound (A:B)B <= A n B, with equality when B
// is principal.
struct ColonProductVerdict {
    bool contained = false;
    bool principal = false;
    bool equal_case = false;  // equality holds (asserted only when principal)
    MonomialModule lhs;
    MonomialModule rhs;
};

inline ColonProductVerdict check_colon_product(const MonomialModule& a, const MonomialModule& b) {
    MonomialModule lhs = mul(colon_integral(a, b), b);
    MonomialModule rhs = intersect(a, b);
    ColonProductVerdict v{subset(lhs, rhs), b.is_principal(), lhs == rhs, lhs, rhs};
    return v;
}

}  // namespace stellate

#endif  // STELLATE_LOCSTAR_HPP
