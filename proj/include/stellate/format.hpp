#ifndef STELLATE_FORMAT_HPP
#define STELLATE_FORMAT_HPP

// Text syntax for monomials and modules: `x1^2*x2`, `x1^-1`, module literal
// `<x1^2, x1*x2>`, the unit ideal D rendered as `<1>`.

#include <cstdlib>
#include <sstream>
#include <string>

#include "stellate/monomial.hpp"

namespace stellate {

inline std::string to_string(const Exponents& m) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        if (any) out << '*';
        out << 'x' << (j + 1);
        if (m[j] != 1) out << '^' << m[j];
        any = true;
    }
    if (!any) return "1";
    return out.str();
}

inline std::string to_string(const MonomialModule& a) {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < a.gens().size(); ++i) {
        if (i) out << ", ";
        out << to_string(a.gens()[i]);
    }
    out << '>';
    return out.str();
}

}  // namespace stellate

#endif  // STELLATE_FORMAT_HPP
