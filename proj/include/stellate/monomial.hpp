#ifndef STELLATE_MONOMIAL_HPP
#define STELLATE_MONOMIAL_HPP

// Exact arithmetic on fractional monomial ideals, represented as minimal
// antichains of Laurent exponent vectors. All values are immutable after
// construction and every operation is a pure function.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stellate {

// One signed exponent per ambient variable.
using Exponents = std::vector<int>;

struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroIdealError : std::invalid_argument {
    explicit ZeroIdealError(const std::string& what) : std::invalid_argument(what) {}
};

// m is divisible by g in the Laurent sense.
inline bool divides(const Exponents& g, const Exponents& m) {
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] > m[j]) return false;
    return true;
}

inline Exponents join(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = std::max(a[j], b[j]);
    return r;
}

inline Exponents meet(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = std::min(a[j], b[j]);
    return r;
}

inline Exponents sum(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
    return r;
}

inline Exponents diff(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
    return r;
}

inline Exponents negate(const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = -a[j];
    return r;
}

// A nonzero finitely generated fractional monomial ideal. Canonical form is
// the lexicographically sorted minimal antichain of its generators, so
// structural equality is semantic equality.
class MonomialModule {
public:
    MonomialModule(int nvars, std::vector<Exponents> gens)
        : nvars_(nvars), gens_(std::move(gens)) {
        if (nvars_ < 1) throw std::invalid_argument("nvars must be >= 1");
        if (gens_.empty()) throw ZeroIdealError("zero ideal excluded: empty generator set");
        for (const auto& g : gens_)
            if (static_cast<int>(g.size()) != nvars_)
                throw ArityMismatch("generator length does not match variable count");
        normalize();
    }

    // D itself: the module generated by the unit monomial.
    static MonomialModule unit(int nvars) {
        return MonomialModule(nvars, {Exponents(static_cast<std::size_t>(nvars), 0)});
    }

    static MonomialModule principal(Exponents g) {
        const int n = static_cast<int>(g.size());
        return MonomialModule(n, {std::move(g)});
    }

    int nvars() const { return nvars_; }
    const std::vector<Exponents>& gens() const { return gens_; }

    bool contains(const Exponents& m) const {
        if (static_cast<int>(m.size()) != nvars_)
            throw ArityMismatch("monomial length does not match variable count");
        for (const auto& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }

    bool is_integral() const {
        for (const auto& g : gens_)
            for (int e : g)
                if (e < 0) return false;
        return true;
    }

    bool is_principal() const { return gens_.size() == 1; }

    bool is_unit() const {
        return gens_.size() == 1 &&
               std::all_of(gens_[0].begin(), gens_[0].end(), [](int e) { return e == 0; });
    }

    // Componentwise minimum over all generators.
    Exponents gens_meet() const {
        Exponents r = gens_[0];
        for (std::size_t i = 1; i < gens_.size(); ++i) r = meet(r, gens_[i]);
        return r;
    }

    // Componentwise maximum over all generators.
    Exponents gens_join() const {
        Exponents r = gens_[0];
        for (std::size_t i = 1; i < gens_.size(); ++i) r = join(r, gens_[i]);
        return r;
    }

    friend bool operator==(const MonomialModule& a, const MonomialModule& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialModule& a, const MonomialModule& b) {
        return !(a == b);
    }

private:
    void normalize() {
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        std::vector<Exponents> minimal;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            bool dominated = false;
            for (std::size_t k = 0; k < gens_.size(); ++k) {
                if (k == i) continue;
                if (gens_[k] == gens_[i]) continue;  // duplicates already gone
                if (divides(gens_[k], gens_[i])) { dominated = true; break; }
            }
            if (!dominated) minimal.push_back(gens_[i]);
        }
        gens_ = std::move(minimal);
    }

    int nvars_;
    std::vector<Exponents> gens_;
};

inline void require_same_ambient(const MonomialModule& a, const MonomialModule& b) {
    if (a.nvars() != b.nvars())
        throw ArityMismatch("modules live in different ambient rings");
}

inline MonomialModule make_module(int nvars, std::vector<Exponents> gens) {
    return MonomialModule(nvars, std::move(gens));
}

inline bool member(const Exponents& m, const MonomialModule& a) { return a.contains(m); }

// Ideal sum: union of generators.
inline MonomialModule add(const MonomialModule& a, const MonomialModule& b) {
    require_same_ambient(a, b);
    std::vector<Exponents> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialModule(a.nvars(), std::move(gens));
}

// Ideal product: pairwise sums of generators.
inline MonomialModule mul(const MonomialModule& a, const MonomialModule& b) {
    require_same_ambient(a, b);
    std::vector<Exponents> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens())
            gens.push_back(sum(g, h));
    return MonomialModule(a.nvars(), std::move(gens));
}

inline MonomialModule pow(const MonomialModule& a, int n) {
    if (n < 0) throw std::invalid_argument("negative ideal power");
    MonomialModule r = MonomialModule::unit(a.nvars());
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

// Translation by a Laurent monomial: x * A.
inline MonomialModule shift(const MonomialModule& a, const Exponents& x) {
    if (static_cast<int>(x.size()) != a.nvars())
        throw ArityMismatch("shift vector length does not match variable count");
    std::vector<Exponents> gens;
    gens.reserve(a.gens().size());
    for (const auto& g : a.gens()) gens.push_back(sum(g, x));
    return MonomialModule(a.nvars(), std::move(gens));
}

// Intersection: generated by pairwise joins.
inline MonomialModule intersect(const MonomialModule& a, const MonomialModule& b) {
    require_same_ambient(a, b);
    std::vector<Exponents> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens())
            gens.push_back(join(g, h));
    return MonomialModule(a.nvars(), std::move(gens));
}

// [A:B] = { x in K | xB <= A } = the intersection of the shifts A - h over
// the generators h of B.
inline MonomialModule colon(const MonomialModule& a, const MonomialModule& b) {
    require_same_ambient(a, b);
    bool first = true;
    MonomialModule r = MonomialModule::unit(a.nvars());
    for (const auto& h : b.gens()) {
        MonomialModule s = shift(a, negate(h));
        r = first ? s : intersect(r, s);
        first = false;
    }
    return r;
}

// (A:B) = [A:B] intersected with D.
inline MonomialModule colon_integral(const MonomialModule& a, const MonomialModule& b) {
    return intersect(colon(a, b), MonomialModule::unit(a.nvars()));
}

// A^{-1} = [D:A]. On this backend this is always the principal module at the
// negated meet of the generators; tests verify the closed form against the
// colon route.
inline MonomialModule inverse(const MonomialModule& a) {
    return colon(MonomialModule::unit(a.nvars()), a);
}

inline bool subset(const MonomialModule& a, const MonomialModule& b) {
    require_same_ambient(a, b);
    for (const auto& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

inline bool equal(const MonomialModule& a, const MonomialModule& b) { return a == b; }

}  // namespace stellate

#endif  // STELLATE_MONOMIAL_HPP
